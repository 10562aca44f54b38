"""Orbit-space classes ``[N, t]`` and their defining quadruple ``(k, p, eps, delta)``.

Here ``N`` is a simply connected 6-manifold with ``H^2 = H^4 = Z``, ``t``
generates ``H^2``, and ``x`` is the generator of ``H^4`` with
``<t x, [N]> = 1``.  Then

* ``t^2 = k x``
* ``p_1(N) = p x``
* ``w_2(N) = eps t (mod 2)``
* ``KS(N) = delta x (mod 2)``

The quadruple is a complete invariant and is subject to one congruence
depending on the parity of ``k`` (see :func:`validate_theta`).
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "ThetaClass",
    "ThetaError",
    "validate_theta",
    "enumerate_theta",
    "congruence",
    "parse_theta",
]


class ThetaError(DomainError):
    """A quadruple that violates the constraints; ``clause`` names which one."""

    def __init__(self, message: str, clause: str, modulus: int | None = None):
        super().__init__(message)
        self.clause = clause
        self.modulus = modulus


def congruence(k: int, eps: int, delta: int) -> tuple[int, int]:
    """Return ``(modulus, residue)`` such that valid ``p`` are ``residue mod modulus``.

    ``eps == 0``: ``p = 24m + 4k + 24 delta``; ``eps == 1``: ``p = 48m + k + 24 delta``.
    """
    if eps == 0:
        return 24, (4 * k + 24 * delta) % 24
    return 48, (k + 24 * delta) % 48


def _check(k: int, p: int, eps: int, delta: int) -> None:
    if eps not in (0, 1) or delta not in (0, 1):
        raise ThetaError("eps and delta must be 0 or 1", clause="range")
    if k % 2 == 1 and eps == 1:
        raise ThetaError("odd k forces eps=0", clause="odd-k")
    mod, res = congruence(k, eps, delta)
    if p % mod != res:
        raise ThetaError(
            f"congruence violated: p={p} is not {res} mod {mod}",
            clause="congruence",
            modulus=mod,
        )


@dataclass(frozen=True, order=True)
class ThetaClass:
    """A valid quadruple.  Construction validates; invalid input raises ThetaError."""

    k: int
    p: int
    eps: int
    delta: int

    def __post_init__(self) -> None:
        _check(self.k, self.p, self.eps, self.delta)

    @property
    def m(self) -> int:
        """The auxiliary integer that parametrizes ``p`` within its congruence class."""
        if self.eps == 0:
            return (self.p - 4 * self.k - 24 * self.delta) // 24
        return (self.p - self.k - 24 * self.delta) // 48

    @property
    def step(self) -> int:
        """Spacing between consecutive valid ``p`` with the other entries fixed."""
        return 24 if self.eps == 0 else 48

    def shifted(self, dp: int) -> ThetaClass:
        return ThetaClass(self.k, self.p + dp, self.eps, self.delta)

    def to_json(self) -> dict:
        return {"k": self.k, "p": self.p, "eps": self.eps, "delta": self.delta}

    @classmethod
    def from_json(cls, obj: dict) -> ThetaClass:
        return validate_theta(int(obj["k"]), int(obj["p"]), int(obj["eps"]), int(obj["delta"]))

    def __str__(self) -> str:
        return f"{self.k},{self.p},{self.eps},{self.delta}"


def validate_theta(k: int, p: int, eps: int, delta: int) -> ThetaClass:
    return ThetaClass(k, p, eps, delta)


def parse_theta(text: str) -> ThetaClass:
    """Parse the ``k,p,eps,delta`` literal used on the command line."""
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"expected k,p,eps,delta, got {text!r}")
    k, p, eps, delta = (int(s) for s in parts)
    return validate_theta(k, p, eps, delta)


def enumerate_theta(k_range: tuple[int, int], p_range: tuple[int, int]) -> Iterator[ThetaClass]:
    """Yield every valid quadruple with ``k`` and ``p`` in the closed intervals.

    Output is in lexicographic order of ``(k, p, eps, delta)``.  Only the
    arithmetic progressions of valid ``p`` are visited, so the cost is
    proportional to the output size rather than the box.
    """
    k_lo, k_hi = k_range
    p_lo, p_hi = p_range
    for k in range(k_lo, k_hi + 1):
        progressions = []
        for eps in (0, 1):
            if eps == 1 and k % 2:
                continue
            for delta in (0, 1):
                mod, res = congruence(k, eps, delta)
                first = p_lo + (res - p_lo) % mod
                progressions.append((first, mod, eps, delta))
        # merge the (at most four) progressions in (p, eps, delta) order
        hits: list[tuple[int, int, int]] = []
        for first, mod, eps, delta in progressions:
            hits.extend((p, eps, delta) for p in range(first, p_hi + 1, mod))
        hits.sort()
        for p, eps, delta in hits:
            yield ThetaClass(k, p, eps, delta)
