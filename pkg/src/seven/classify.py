"""Identify circle-bundle total spaces with normal forms.

``classify_homeo`` gives the homeomorphism type of ``N_t`` as some
``M^c_{l,k}``; ``classify_diffeo`` gives the diffeomorphism type (smooth
orbit spaces only) as ``M^0_{l,k} # Sigma_r``.  ``same_invariants`` decides
whether two normal forms are the same manifold by comparing the complete
invariant systems, and :func:`certify_period` produces the shift in ``p``
that makes a whole arithmetic progression of orbit spaces share one
total space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import DomainError, IntegralityError, exact_div
from .invariants import (
    GAMMA7_ORDER,
    Category,
    CoreManifold,
    InvariantTuple,
    ManifoldDescriptor,
    descriptor_invariants,
)
from .theta import ThetaClass, congruence

__all__ = [
    "ClassificationResult",
    "classify",
    "classify_homeo",
    "classify_diffeo",
    "normal_form",
    "same_invariants",
    "period_bound",
    "certify_period",
    "PeriodCertificate",
]


@dataclass(frozen=True)
class ClassificationResult:
    descriptor: ManifoldDescriptor
    witness_m: int
    # exotic index before reduction mod 28 and before any absorption
    raw_exotic: int = 0

    def to_json(self) -> dict:
        return {
            "descriptor": self.descriptor.to_json(),
            "witness_m": self.witness_m,
            "raw_exotic": self.raw_exotic,
        }


def classify_homeo(theta: ThetaClass) -> ClassificationResult:
    k, p, eps, delta = theta.k, theta.p, theta.eps, theta.delta
    even = 1 if k % 2 == 0 else 0
    c = even * delta
    l = exact_div(p + (3 * eps - 4) * k - 2 * even * 12 * delta, 4, "homeomorphism l")  # noqa: E741
    m = exact_div(l, 6, "l = 6m")
    d = ManifoldDescriptor(rank=0, core=CoreManifold(l, k, c), exotic=0, category=Category.TOP)
    return ClassificationResult(d, witness_m=m)


def classify_diffeo(theta: ThetaClass, absorb: bool = True) -> ClassificationResult:
    """``N_t = M^0_{l,k} # Sigma_r``.

    With ``k == 0`` the sphere summand is absorbed (``N_t = M^0_{l,0}``)
    unless ``absorb`` is false, which exposes the raw ``r``.
    """
    k, p, eps = theta.k, theta.p, theta.eps
    if theta.delta:
        raise DomainError("delta must be 0")
    l = exact_div(p + (3 * eps - 4) * k, 4, "diffeomorphism l")  # noqa: E741
    r = exact_div((1 - eps) * (p - 4 * k), 24, "exotic index r")
    m = exact_div(l, 6, "l = 6m")
    exotic = 0 if (k == 0 and absorb) else r
    d = ManifoldDescriptor(rank=0, core=CoreManifold(l, k, 0), exotic=exotic, category=Category.DIFF)
    return ClassificationResult(d, witness_m=m, raw_exotic=r)


def classify(theta: ThetaClass, category: Category | str, rank: int = 0) -> ManifoldDescriptor:
    """Normal form of ``N_t # _{rank} S^3 x S^4`` in the given category."""
    category = Category(category)
    res = classify_homeo(theta) if category is Category.TOP else classify_diffeo(theta)
    d = res.descriptor
    if rank:
        d = ManifoldDescriptor(rank, d.core, d.exotic, d.category)
    return d


def normal_form(d: ManifoldDescriptor) -> ManifoldDescriptor:
    """Canonical representative used for literal comparison when ``k == 0``.

    Smoothly, ``M^0_{6m,0} # Sigma_m = M^0_{6m,0}``; since the set of absorbed
    spheres is a subgroup of Z/28, the exotic index only matters modulo
    ``gcd(m, 28)``.
    """
    core = d.core
    if d.category is not Category.DIFF or core.k != 0 or core.l % 6:
        return d
    g = gcd(core.l // 6, GAMMA7_ORDER)
    return ManifoldDescriptor(d.rank, core, d.exotic % g, d.category)


def _forms_isometric(k1: int, ph1: int, k2: int, ph2: int) -> bool:
    """Is there a unit ``a`` mod ``|k|`` carrying one (linking, p1/2) pair to the other?

    Sending generator ``g1`` to ``a g2`` preserves the linking form iff
    ``a^2 / k2 = 1 / k1`` mod 1 and carries ``p1/2`` iff ``ph2 = a ph1`` mod ``|k|``.
    """
    n = abs(k1)
    for a in range(n):
        if gcd(a, n) != 1:
            continue
        if (a * a * k1 - k2) % (k1 * k2) == 0 and (a * ph1 - ph2) % n == 0:
            return True
    return False


def same_invariants(d1: ManifoldDescriptor, d2: ManifoldDescriptor) -> bool:
    """Do two normal forms have the same complete invariants?

    TOP compares ``{H, p1/2, b, KS, s1}``, DIFF compares ``{H, p1/2, b, mu}``,
    both up to a change of generator of ``H^4``.  When ``H^4 = Z`` the
    normal forms are compared literally (after sphere absorption).
    """
    if d1.category is not d2.category:
        raise DomainError("category mismatch")
    if d1.rank != d2.rank or abs(d1.core.k) != abs(d2.core.k):
        return False
    if d1.core.k == 0:
        return normal_form(d1) == normal_form(d2)
    i1, i2 = descriptor_invariants(d1), descriptor_invariants(d2)
    if i1.ks != i2.ks:
        return False
    if d1.category is Category.TOP:
        if i1.s1 != i2.s1:
            return False
    elif i1.mu != i2.mu:
        return False
    return _forms_isometric(i1.h4_k, i1.ph.val, i2.h4_k, i2.ph.val)


def period_bound(k: int) -> int:
    """A shift of ``p`` that provably preserves every invariant: ``2^8 * 3 * 7 * |k|``."""
    return 2**8 * 3 * 7 * abs(k)


def _invariants_at(theta: ThetaClass, category: Category) -> InvariantTuple:
    return descriptor_invariants(classify(theta, category))


@dataclass(frozen=True)
class PeriodCertificate:
    theta: ThetaClass
    category: Category
    period: int

    def verify(self) -> bool:
        """Re-check the certificate from scratch.

        Every invariant is a polynomial of degree <= 2 in ``p`` over Q/Z, so
        ``f(p + P) - f(p)`` is affine in ``p``; vanishing at two consecutive
        valid ``p`` makes it vanish on the whole progression.
        """
        if self.period <= 0 or self.period % self.theta.step:
            return False
        for base in (self.theta, self.theta.shifted(self.theta.step)):
            if _invariants_at(base, self.category) != _invariants_at(base.shifted(self.period), self.category):
                return False
        return True


@lru_cache(maxsize=None)
def _minimal_period(k: int, eps: int, delta: int, category: Category) -> int:
    bound = period_bound(k)
    step, residue = congruence(k, eps, delta)
    theta = ThetaClass(k, residue, eps, delta)
    for P in range(step, bound + 1, step):
        if bound % P == 0 and PeriodCertificate(theta, category, P).verify():
            return P
    raise IntegralityError(f"no period found for {theta} below {bound}")


def certify_period(theta: ThetaClass, category: Category | str) -> PeriodCertificate:
    """Smallest divisor ``P`` of :func:`period_bound` such that all
    ``theta + nP`` classify to manifolds with identical invariants.

    The set of such shifts is a subgroup of Z independent of the base
    point, so the search is cached per ``(k, eps, delta, category)``.
    """
    category = Category(category)
    if theta.k == 0:
        raise DomainError("no period when k = 0: p is determined by l")
    P = _minimal_period(theta.k, theta.eps, theta.delta, category)
    cert = PeriodCertificate(theta, category, P)
    if not cert.verify():
        raise IntegralityError(f"period {P} failed to verify at {theta}")
    return cert
