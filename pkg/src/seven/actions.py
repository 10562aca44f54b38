"""Which 2-connected 7-manifolds carry a regular circle action, and how many.

A manifold admits a (smooth) regular circle action exactly when it is the
total space ``N_t # _{2r} S^3 x S^4`` of a circle bundle over an orbit-space
class, so deciding and counting reduce to solving the classification maps
for the quadruple ``(k, p, eps, delta)``.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .classify import (
    PeriodCertificate,
    certify_period,
    classify,
    classify_diffeo,
    period_bound,
    same_invariants,
)
from .errors import DomainError, IntegralityError
from .exact import RatModZ
from .invariants import (
    GAMMA7_ORDER,
    Category,
    CoreManifold,
    ManifoldDescriptor,
    core_invariants,
    descriptor_invariants,
)
from .theta import ThetaClass, ThetaError, congruence

__all__ = [
    "ActionWitness",
    "ActionCount",
    "family_homeo",
    "family_diffeo",
    "admits_action",
    "count_actions",
    "sphere_action_set",
    "tangent_bundle_action_set",
    "TANGENT_BUNDLE_CORE",
]

# the unit tangent bundle of S^4
TANGENT_BUNDLE_CORE = CoreManifold(-1, 2, 0)


@dataclass(frozen=True)
class ActionWitness:
    theta: ThetaClass
    rank: int

    @property
    def orbit_rank(self) -> int:
        """Number of ``S^3 x S^3`` summands in the orbit space."""
        return self.rank // 2

    def to_json(self) -> dict:
        return {"theta": self.theta.to_json(), "rank": self.rank}


@dataclass(frozen=True)
class ActionCount:
    """``finite`` is None for infinitely many actions, in which case
    ``certificate`` exhibits the progression of orbit spaces realizing them."""

    finite: int | None
    witness: ActionWitness
    certificate: PeriodCertificate | None = None

    @property
    def infinite(self) -> bool:
        return self.finite is None

    def to_json(self) -> dict:
        out: dict = {
            "count": "infinite" if self.finite is None else {"finite": self.finite},
            "witness": self.witness.to_json(),
        }
        if self.certificate is not None:
            out["period"] = self.certificate.period
        return out


def family_homeo(r: int, c: int, m: int, k: int) -> ManifoldDescriptor:
    """``#_{2r} S^3 x S^4 # M^c_{6m,(1+c)k}``."""
    if r < 0:
        raise DomainError("r must be nonnegative")
    return ManifoldDescriptor(2 * r, CoreManifold(6 * m, (1 + c) * k, c), 0, Category.TOP)


def family_diffeo(r: int, a: int, m: int, k: int) -> ManifoldDescriptor:
    """``#_{2r} S^3 x S^4 # M^0_{6(a+1)m,(a+1)k} # Sigma_{(1-a)m}``."""
    if r < 0:
        raise DomainError("r must be nonnegative")
    if a not in (0, 1):
        raise DomainError("a must be 0 or 1")
    return ManifoldDescriptor(2 * r, CoreManifold(6 * (a + 1) * m, (a + 1) * k, 0), (1 - a) * m, Category.DIFF)


def _branches(k: int, category: Category) -> Iterator[tuple[int, int]]:
    for eps in (0, 1):
        if eps and k % 2:
            continue
        for delta in (0, 1) if category is Category.TOP else (0,):
            yield eps, delta


def _solve_p(core: CoreManifold, eps: int, delta: int) -> int:
    """Invert the ``l`` formula of the classification map for ``p``."""
    l, k = core.l, core.k
    even = 1 if k % 2 == 0 else 0
    if core.c != even * delta:
        raise ThetaError("branch gives the wrong c", clause="c")
    return 4 * l - (3 * eps - 4) * k + 2 * even * 12 * delta


def _direct_candidates(d: ManifoldDescriptor) -> Iterator[ThetaClass]:
    """Orbit spaces whose classification reproduces ``d.core`` literally."""
    for eps, delta in _branches(d.core.k, d.category):
        try:
            yield ThetaClass(d.core.k, _solve_p(d.core, eps, delta), eps, delta)
        except ThetaError:
            continue


def _progression(k: int, eps: int, delta: int) -> Iterator[ThetaClass]:
    """One full period of valid ``p`` for the branch, starting at the least residue."""
    step, residue = congruence(k, eps, delta)
    for p in range(residue, residue + period_bound(k), step):
        yield ThetaClass(k, p, eps, delta)


def _matches(theta: ThetaClass, d: ManifoldDescriptor) -> bool:
    return same_invariants(classify(theta, d.category, d.rank), d)


def matching_thetas(d: ManifoldDescriptor) -> Iterator[ThetaClass]:
    """All orbit spaces over one period whose total space is ``d`` (``k != 0``).

    Both signs of ``k`` are searched: reversing ``t`` changes the sign of
    ``k`` but may still give the same total space up to a change of
    generator of ``H^4``.
    """
    k = d.core.k
    if k == 0:
        yield from (t for t in _direct_candidates(d) if _matches(t, d))
        return
    for kk in sorted({k, -k}, reverse=True):
        for eps, delta in _branches(kk, d.category):
            for theta in _progression(kk, eps, delta):
                if _matches(theta, d):
                    yield theta


def admits_action(d: ManifoldDescriptor) -> ActionWitness | None:
    """Witness orbit space for a regular circle action on ``d``, or None."""
    if d.rank % 2:
        raise DomainError("odd rank")
    for theta in _direct_candidates(d):
        if _matches(theta, d):
            return ActionWitness(theta, d.rank)
    if d.core.k == 0:
        # p is pinned by l in every branch, so the direct solve is exhaustive
        return None
    theta = next(matching_thetas(d), None)
    return None if theta is None else ActionWitness(theta, d.rank)


def count_actions(d: ManifoldDescriptor) -> ActionCount:
    """Number of inequivalent regular circle actions on ``d``.

    Infinite counts are certified by a period: every ``witness + n * period``
    is a distinct orbit space with total space ``d``.
    """
    witness = admits_action(d)
    if witness is None:
        raise DomainError("not in an admitting family")
    if d.core.k != 0:
        return ActionCount(None, witness, certify_period(witness.theta, d.category))
    n = sum(1 for t in _direct_candidates(d) if _matches(t, d))
    return ActionCount(n, witness)


def _mu_index(mu: RatModZ) -> int:
    """``r`` with ``mu = r/28``; raises if ``mu`` is not a homotopy-sphere value."""
    q = mu * GAMMA7_ORDER
    if q.numerator:
        raise IntegralityError(f"mu = {mu} is not a multiple of 1/28")
    return (mu.numerator * GAMMA7_ORDER) // mu.denominator


def sphere_action_set() -> set[int]:
    """Indices ``r`` mod 28 such that ``Sigma_r`` has a smooth regular circle action.

    Homotopy spheres arise only from ``k = +-1``, where ``eps = 0`` and the
    invariants repeat after 28 steps of ``p``, so ``m`` in ``[0, 27]`` covers
    everything.
    """
    found = set()
    for k in (1, -1):
        for m in range(GAMMA7_ORDER):
            theta = ThetaClass(k, 24 * m + 4 * k, 0, 0)
            mu = descriptor_invariants(classify_diffeo(theta).descriptor).mu
            found.add(_mu_index(mu))
    # reversing orientation (k -> -k) negates mu
    if {(-r) % GAMMA7_ORDER for r in found} != found:
        raise IntegralityError("sphere set is not closed under r -> -r")
    return found


def tangent_bundle_action_set() -> set[int]:
    """Indices ``r`` such that ``M^0_{-1,2} # Sigma_r`` has a smooth regular circle action.

    Sweeps one full period of smooth orbit spaces with ``|k| = 2``, keeps
    those whose total space is homeomorphic to the unit tangent bundle of
    S^4, and reads off the sphere summand from the difference of ``mu``.
    """
    target = ManifoldDescriptor(0, TANGENT_BUNDLE_CORE, 0, Category.TOP)
    mu0 = core_invariants(TANGENT_BUNDLE_CORE, Category.DIFF).mu
    found = set()
    for k in (2, -2):
        for eps in (0, 1):
            for theta in _progression(k, eps, 0):
                d = classify_diffeo(theta).descriptor
                if not same_invariants(d.as_top(), target):
                    continue
                found.add(_mu_index(descriptor_invariants(d).mu - mu0))
    return found
