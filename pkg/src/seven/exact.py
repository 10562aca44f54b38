"""Exact arithmetic for values taken modulo 1 and modulo an integer.

Everything downstream is computed with Python integers, so there is no
width limit and no floating point.  Two value types live here:

``RatModZ``
    a rational number modulo 1, stored as its canonical representative
    ``n/d`` with ``0 <= n < d`` and ``gcd(n, d) == 1``.

``ResidueModK``
    an element of ``Z/|k|`` with the convention that modulus 0 means the
    integers themselves (no reduction).

>>> ratmodz_normalize(8, 224)
RatModZ(1, 28)
>>> ratmodz_normalize(-1, 8)
RatModZ(7, 8)
>>> residue_reduce(-5, 7)
ResidueModK(mod=-5, val=2)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError

__all__ = [
    "RatModZ",
    "ResidueModK",
    "ZERO",
    "ratmodz_normalize",
    "ratmodz_add",
    "residue_reduce",
]


@dataclass(frozen=True, order=True)
class RatModZ:
    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        n, d = self.numerator, self.denominator
        if d < 1 or not 0 <= n < d or gcd(n, d) != 1:
            raise ValueError(f"non-canonical residue {n}/{d}; use ratmodz_normalize")

    def __repr__(self) -> str:
        return f"RatModZ({self.numerator}, {self.denominator})"

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def __add__(self, other: RatModZ) -> RatModZ:
        if not isinstance(other, RatModZ):
            return NotImplemented
        return ratmodz_add(self, other)

    def __neg__(self) -> RatModZ:
        return ratmodz_normalize(-self.numerator, self.denominator)

    def __sub__(self, other: RatModZ) -> RatModZ:
        if not isinstance(other, RatModZ):
            return NotImplemented
        return ratmodz_add(self, -other)

    def __mul__(self, n: int) -> RatModZ:
        if not isinstance(n, int):
            return NotImplemented
        return ratmodz_normalize(n * self.numerator, self.denominator)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.numerator == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @classmethod
    def from_fraction(cls, q: Fraction) -> RatModZ:
        return ratmodz_normalize(q.numerator, q.denominator)

    @classmethod
    def parse(cls, text: str) -> RatModZ:
        """Inverse of ``str``: accepts ``"n/d"`` or a bare integer."""
        num, sep, den = text.strip().partition("/")
        try:
            return ratmodz_normalize(int(num), int(den) if sep else 1)
        except ValueError as exc:
            raise DomainError(f"cannot parse residue {text!r}") from exc


def ratmodz_normalize(num: int, den: int) -> RatModZ:
    if den == 0:
        raise DomainError("undefined rational")
    if den < 0:
        num, den = -num, -den
    g = gcd(num, den)
    num, den = num // g, den // g
    # construct without re-validating; the reduction above is canonical
    out = object.__new__(RatModZ)
    object.__setattr__(out, "numerator", num % den)
    object.__setattr__(out, "denominator", den)
    return out


def ratmodz_add(a: RatModZ, b: RatModZ) -> RatModZ:
    return ratmodz_normalize(
        a.numerator * b.denominator + b.numerator * a.denominator,
        a.denominator * b.denominator,
    )


ZERO = ratmodz_normalize(0, 1)


@dataclass(frozen=True)
class ResidueModK:
    """An element of ``Z/|mod|``; ``mod == 0`` stands for ``Z``.

    The sign of ``mod`` is kept because the owning invariant tuple needs it
    (the linking value is ``1/k``, not ``1/|k|``); reduction only uses ``|mod|``.
    """

    mod: int
    val: int

    def __post_init__(self) -> None:
        if self.mod != 0 and not 0 <= self.val < abs(self.mod):
            raise ValueError(f"value {self.val} not reduced mod {self.mod}")

    def __repr__(self) -> str:
        return f"ResidueModK(mod={self.mod}, val={self.val})"

    def __str__(self) -> str:
        if self.mod == 0:
            return f"{self.val} in Z"
        return f"{self.val} mod {abs(self.mod)}"

    def to_json(self) -> dict:
        return {"mod": self.mod, "val": self.val}

    @classmethod
    def from_json(cls, obj: dict) -> ResidueModK:
        return residue_reduce(int(obj["mod"]), int(obj["val"]))


def residue_reduce(modulus: int, value: int) -> ResidueModK:
    if modulus == 0:
        return ResidueModK(0, value)
    return ResidueModK(modulus, value % abs(modulus))
