"""Classifying invariants of 2-connected 7-manifolds.

For a 2-connected 7-manifold ``M`` with ``H^4(M) = Z_k`` the tuple is

* ``h4_k`` -- the order ``k`` (signed; 0 means ``H^4 = Z``),
* ``ph``  -- the spin class ``p_1/2`` as a multiple of the generator, mod ``k``,
* ``linking`` -- the linking form on the generator, ``1/k mod 1``,
* ``ks``  -- the Kirby-Siebenmann class (a multiple of the generator mod 2),
* ``s1``  -- the topological invariant in ``Q/Z``,
* ``mu``  -- the Eells-Kuiper invariant in ``Q/Z`` (smooth manifolds only).

``s1``, ``linking`` and ``mu`` need ``k != 0``.

Three families are covered: total spaces ``N_t`` of circle bundles over an
orbit-space class (:func:`circle_bundle_invariants`), the models
``M^c_{l,k}`` (:func:`core_invariants`), and connected sums
``#_{2r} S^3 x S^4 # M^c_{l,k} # Sigma_r`` (:func:`descriptor_invariants`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .errors import DomainError
from .exact import RatModZ, ResidueModK, ratmodz_normalize, residue_reduce
from .theta import ThetaClass

__all__ = [
    "Category",
    "CoreManifold",
    "ManifoldDescriptor",
    "InvariantTuple",
    "circle_bundle_invariants",
    "core_invariants",
    "exotic_mu",
    "descriptor_invariants",
    "GAMMA7_ORDER",
]

# |Gamma_7|: homotopy 7-spheres form a cyclic group generated by M^0_{1,1}
GAMMA7_ORDER = 28


class Category(str, enum.Enum):
    TOP = "TOP"
    DIFF = "DIFF"

    @classmethod
    def parse(cls, text: str) -> Category:
        try:
            return cls(text.upper())
        except ValueError:
            raise DomainError(f"unknown category {text!r} (expected top or diff)") from None

    def __str__(self) -> str:
        return self.value


def _even(k: int) -> int:
    """The factor ``(1 + (-1)^k) / 2``."""
    return 1 if k % 2 == 0 else 0


@dataclass(frozen=True, order=True)
class CoreManifold:
    """``M^c_{l,k}``: the S^3-bundle over S^4 with characteristic map
    ``u -> (v -> u^{l+k} v u^{-l})`` when ``c == 0``, and its fake
    (non-smoothable) twin when ``c == 1``, which exists only for even ``k``.
    """

    l: int  # noqa: E741
    k: int
    c: int = 0

    def __post_init__(self) -> None:
        if self.c not in (0, 1):
            raise DomainError("c must be 0 or 1")
        if self.c == 1 and self.k % 2:
            raise DomainError("M^1_{l,k} needs even k")

    def __str__(self) -> str:
        return f"M^{self.c}_{{{self.l},{self.k}}}"

    def to_json(self) -> dict:
        return {"l": self.l, "k": self.k, "c": self.c}

    @classmethod
    def from_json(cls, obj: dict) -> CoreManifold:
        return cls(int(obj["l"]), int(obj["k"]), int(obj["c"]))


@dataclass(frozen=True, order=True)
class ManifoldDescriptor:
    """Normal form ``#_{rank} S^3 x S^4 # core # Sigma_exotic``.

    ``exotic`` is an index in ``Gamma_7 = Z/28`` and is stored reduced.
    """

    rank: int
    core: CoreManifold
    exotic: int = 0
    category: Category = Category.TOP

    def __post_init__(self) -> None:
        if self.rank < 0 or self.rank % 2:
            raise DomainError(f"odd rank {self.rank}: total spaces carry an even number of S^3 x S^4")
        object.__setattr__(self, "exotic", self.exotic % GAMMA7_ORDER)
        object.__setattr__(self, "category", Category(self.category))
        if self.category is Category.DIFF and self.core.c == 1:
            raise DomainError("M^1 is not smooth")
        if self.category is Category.TOP and self.exotic:
            raise DomainError("homotopy spheres are invisible up to homeomorphism; exotic must be 0 in TOP")

    def as_top(self) -> ManifoldDescriptor:
        """The same manifold, forgetting the smooth structure."""
        return replace(self, exotic=0, category=Category.TOP)

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append(f"#_{self.rank} S3xS4")
        parts.append(str(self.core))
        if self.exotic:
            parts.append(f"Sigma_{self.exotic}")
        return " # ".join(parts) + f" [{self.category}]"

    def to_json(self) -> dict:
        return {
            "category": self.category.value,
            "rank": self.rank,
            "core": self.core.to_json(),
            "exotic": self.exotic,
        }

    @classmethod
    def from_json(cls, obj: dict) -> ManifoldDescriptor:
        return cls(
            rank=int(obj["rank"]),
            core=CoreManifold.from_json(obj["core"]),
            exotic=int(obj.get("exotic", 0)),
            category=Category.parse(obj["category"]),
        )


@dataclass(frozen=True)
class InvariantTuple:
    h4_k: int
    ph: ResidueModK
    linking: RatModZ | None
    ks: int
    s1: RatModZ | None
    mu: RatModZ | None
    b4_free_rank: int = field(default=0)

    def __post_init__(self) -> None:
        assert self.ph.mod == self.h4_k
        assert (self.linking is None) == (self.h4_k == 0)
        assert (self.s1 is None) == (self.h4_k == 0)
        assert self.mu is None or self.h4_k != 0
        assert self.h4_k % 2 == 0 or self.ks == 0

    def to_json(self) -> dict:
        def opt(v: RatModZ | None) -> str:
            return "undefined" if v is None else str(v)

        return {
            "h4_k": self.h4_k,
            "b4_free_rank": self.b4_free_rank,
            "ph": self.ph.to_json(),
            "linking": opt(self.linking),
            "ks": self.ks,
            "s1": opt(self.s1),
            "mu": opt(self.mu),
        }

    @classmethod
    def from_json(cls, obj: dict) -> InvariantTuple:
        def opt(v: str) -> RatModZ | None:
            return None if v == "undefined" else RatModZ.parse(v)

        return cls(
            h4_k=int(obj["h4_k"]),
            ph=ResidueModK.from_json(obj["ph"]),
            linking=opt(obj["linking"]),
            ks=int(obj["ks"]),
            s1=opt(obj["s1"]),
            mu=opt(obj["mu"]),
            b4_free_rank=int(obj["b4_free_rank"]),
        )


def _q(num: int, den: int) -> RatModZ:
    return ratmodz_normalize(num, den)


def circle_bundle_invariants(theta: ThetaClass, category: Category | str) -> InvariantTuple:
    """Invariants of the total space ``N_t`` of the circle bundle with Euler class ``t``."""
    category = Category(category)
    if not isinstance(theta, ThetaClass):
        raise DomainError("invalid theta")
    k, p, eps, delta = theta.k, theta.p, theta.eps, theta.delta
    if category is Category.DIFF and delta:
        raise DomainError("non-smoothable theta in DIFF category")

    # p + eps*k is even for every valid quadruple
    ph = residue_reduce(k, (p + eps * k) // 2)
    ks = _even(k) * delta
    if k == 0:
        return InvariantTuple(h4_k=0, ph=ph, linking=None, ks=ks, s1=None, mu=None)

    s1 = _q(-abs(k), 8 * k) + _q((p + k) ** 2, 32 * k) + _q(7 * (eps - 1) * (2 * p + k), 96)
    mu = None
    if category is Category.DIFF:
        mu = _q(-abs(k), 224 * k) + _q((p + k) ** 2, 896 * k) + _q((eps - 1) * (2 * p + k), 384)
    return InvariantTuple(h4_k=k, ph=ph, linking=_q(1, k), ks=ks, s1=s1, mu=mu)


def core_invariants(core: CoreManifold, category: Category | str) -> InvariantTuple:
    """Invariants of ``M^c_{l,k}``; ``mu`` only for ``c == 0`` in the smooth category."""
    category = Category(category)
    l, k, c = core.l, core.k, core.c
    if category is Category.DIFF and c:
        raise DomainError("M^1 is not smooth")

    ph = residue_reduce(k, 2 * l + 12 * c)
    ks = _even(k) * c
    if k == 0:
        return InvariantTuple(h4_k=0, ph=ph, linking=None, ks=ks, s1=None, mu=None)

    s1 = _q((2 * l + k + 12 * c) ** 2 - abs(k), 8 * k)
    mu = None
    if category is Category.DIFF:
        mu = _q((k + 2 * l) ** 2 - abs(k), 224 * k)
    return InvariantTuple(h4_k=k, ph=ph, linking=_q(1, k), ks=ks, s1=s1, mu=mu)


def exotic_mu(r: int) -> RatModZ:
    """Eells-Kuiper invariant of ``Sigma_r = r M^0_{1,1}``, i.e. ``r/28``."""
    return _q(r, GAMMA7_ORDER)


def descriptor_invariants(d: ManifoldDescriptor) -> InvariantTuple:
    """Invariants of a normal form.

    ``S^3 x S^4`` summands only contribute free rank; the homotopy-sphere
    summand only shifts ``mu`` (additivity under connected sum).
    """
    inv = core_invariants(d.core, d.category)
    mu = inv.mu
    if mu is not None:
        mu = mu + exotic_mu(d.exotic)
    return replace(inv, mu=mu, b4_free_rank=d.rank)
