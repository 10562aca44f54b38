"""Exit criteria.  Each test records one PASS/FAIL line, printed at the end of
the pytest run (see conftest.py) or when this file is executed directly::

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import itertools
import time

from seven.actions import (
    admits_action,
    count_actions,
    family_diffeo,
    family_homeo,
    sphere_action_set,
    tangent_bundle_action_set,
)
from seven.classify import classify, classify_diffeo, classify_homeo, same_invariants
from seven.errors import IntegralityError
from seven.exact import ratmodz_normalize
from seven.invariants import (
    Category,
    CoreManifold,
    ManifoldDescriptor,
    circle_bundle_invariants,
    core_invariants,
    descriptor_invariants,
    exotic_mu,
)
from seven.theta import enumerate_theta

TOP, DIFF = Category.TOP, Category.DIFF

RESULTS: dict[int, str] = {}

SPHERES = {0, 4, 6, 8, 10, 14, 18, 20, 22, 24}
TANGENT = {0, 2, 6, 7, 8, 12, 14, 15, 16, 19, 20, 23, 26}

CROSS_BOX = ((-50, 50), (-2000, 2000))


def record(n: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"AC{n} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  ({detail})"
    RESULTS[n] = line
    print(line)


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_ac1_sphere_set():
    got, dt = timed(sphere_action_set)
    ok = got == SPHERES and dt < 1.0
    record(1, "Sigma_r with smooth regular actions", ok, f"{sorted(got)}, {dt:.3f}s")
    assert got == SPHERES
    assert dt < 1.0


def test_ac2_tangent_bundle_set():
    got, dt = timed(tangent_bundle_action_set)
    ok = got == TANGENT and dt < 5.0
    detail = f"{sorted(got)}, {dt:.3f}s"
    if got != TANGENT:
        detail += f"; missing {sorted(TANGENT - got)}, extra {sorted(got - TANGENT)}"
    record(2, "M^0_{-1,2} # Sigma_r with smooth regular actions", ok, detail)
    assert got == TANGENT
    assert dt < 5.0


def _check_count(d: ManifoldDescriptor, expected) -> bool:
    cnt = count_actions(d)
    if expected == "inf":
        if not cnt.infinite or cnt.certificate is None or not cnt.certificate.verify():
            return False
        theta = cnt.witness.theta
        return same_invariants(classify(theta, d.category, d.rank), d) and same_invariants(
            classify(theta.shifted(cnt.certificate.period), d.category, d.rank), d
        )
    return cnt.finite == expected


def test_ac3_homeo_counts():
    def sweep():
        bad = []
        for m, k, c, r in itertools.product(range(-10, 11), range(-10, 11), (0, 1), (0, 1, 2)):
            expected = "inf" if k else (1 if m % 2 else 2)
            if not _check_count(family_homeo(r, c, m, k), expected):
                bad.append((r, c, m, k))
        return bad

    bad, dt = timed(sweep)
    record(3, "rho_T over the homeomorphism family", not bad and dt < 30, f"{len(bad)} mismatches, {dt:.2f}s")
    assert not bad, bad[:10]
    assert dt < 30


def test_ac4_diffeo_counts():
    def sweep():
        bad = []
        for m, k, a, r in itertools.product(range(-10, 11), range(-10, 11), (0, 1), (0, 1, 2)):
            if k:
                expected = "inf"
            elif a == 0 and m % 2:
                expected = 1
            else:
                expected = 2  # k = 0 and (1+a)m even
            if not _check_count(family_diffeo(r, a, m, k), expected):
                bad.append((r, a, m, k))
        return bad

    bad, dt = timed(sweep)
    record(4, "rho_S over the diffeomorphism family", not bad and dt < 30, f"{len(bad)} mismatches, {dt:.2f}s")
    assert not bad, bad[:10]
    assert dt < 30


def test_ac5_cross_consistency():
    def sweep():
        bad, n = [], 0
        for t in enumerate_theta(*CROSS_BOX):
            if t.k == 0:
                continue
            n += 1
            if descriptor_invariants(classify_homeo(t).descriptor) != circle_bundle_invariants(t, TOP):
                bad.append((t, TOP))
            if t.delta == 0 and descriptor_invariants(classify_diffeo(t).descriptor) != circle_bundle_invariants(t, DIFF):
                bad.append((t, DIFF))
        return bad, n

    (bad, n), dt = timed(sweep)
    record(5, "invariants of N_t equal invariants of its normal form", not bad and dt < 60, f"{n} thetas, {len(bad)} mismatches, {dt:.2f}s")
    assert not bad, bad[:10]
    assert dt < 60


def test_ac6_integrality():
    violations = []
    n = 0
    for t in enumerate_theta(*CROSS_BOX):
        n += 1
        try:
            if classify_homeo(t).descriptor.core.l % 6:
                violations.append((t, "TOP l"))
            if t.delta == 0 and classify_diffeo(t).descriptor.core.l % 6:
                violations.append((t, "DIFF l"))
        except IntegralityError as exc:
            violations.append((t, str(exc)))
    record(6, "exact divisions and l = 0 mod 6", not violations, f"{n} thetas, {len(violations)} violations")
    assert not violations, violations[:10]


def test_ac7_gamma7():
    values = {exotic_mu(r) for r in range(-100, 100)}
    generator = core_invariants(CoreManifold(1, 1, 0), DIFF).mu
    spheres = sphere_action_set()
    ok = (
        len(values) == 28
        and generator == ratmodz_normalize(1, 28)
        and {(28 - r) % 28 for r in spheres} == spheres
    )
    record(7, "Gamma_7 = Z/28 generated by M^0_{1,1}", ok, f"{len(values)} values, mu(M_1,1) = {generator}")
    assert len(values) == 28
    assert generator == ratmodz_normalize(1, 28)
    assert {(28 - r) % 28 for r in spheres} == spheres


def _oracle_k0(d: ManifoldDescriptor) -> int:
    # with k = 0 any solution has |p| <= 4|l| + 24
    bound = 4 * abs(d.core.l) + 24
    n = 0
    for t in enumerate_theta((0, 0), (-bound, bound)):
        if d.category is DIFF and t.delta:
            continue
        if same_invariants(classify(t, d.category, d.rank), d):
            n += 1
    return n


def test_ac8_k0_oracle():
    bad = []
    members = [family_homeo(r, c, m, 0) for r, c, m in itertools.product((0, 1), (0, 1), range(-10, 11))]
    members += [family_diffeo(r, a, m, 0) for r, a, m in itertools.product((0, 1), (0, 1), range(-10, 11))]
    for d in members:
        if admits_action(d) is None or count_actions(d).finite != _oracle_k0(d):
            bad.append(d)
    record(8, "k = 0 counts equal exhaustive enumeration", not bad, f"{len(members)} members, {len(bad)} mismatches")
    assert not bad, bad[:5]


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
