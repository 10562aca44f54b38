"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input rejected on mathematical grounds (as opposed to a usage error)."""


class IntegralityError(AssertionError):
    """A division that the constraints on the input guarantee to be exact was not.

    Seeing this means a precondition was bypassed; no valid input triggers it.
    """


def exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise IntegralityError(f"{what}: {num} is not divisible by {den}")
    return q
