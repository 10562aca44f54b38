import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seven.theta import ThetaClass, ThetaError, enumerate_theta, parse_theta, validate_theta


def brute_force_valid(k, p, eps, delta):
    """Lemma-style membership test: search the auxiliary integer m directly."""
    if k % 2 and eps:
        return False
    for m in range(-abs(p) - 100, abs(p) + 100):
        if eps == 0 and p == 24 * m + 4 * k + 24 * delta:
            return True
        if eps == 1 and p == 48 * m + k + 24 * delta:
            return True
    return False


def is_valid(*q):
    try:
        validate_theta(*q)
    except ThetaError:
        return False
    return True


@pytest.mark.parametrize("q", [(1, 4, 0, 0), (2, 26, 1, 1), (0, 0, 1, 0), (-3, -12, 0, 1)])
def test_valid_examples(q):
    assert validate_theta(*q) == ThetaClass(*q)


def test_odd_k_forces_eps_zero():
    with pytest.raises(ThetaError, match="odd k forces eps=0") as info:
        validate_theta(1, 4, 1, 0)
    assert info.value.clause == "odd-k"


def test_congruence_rejection_names_modulus():
    with pytest.raises(ThetaError, match="congruence") as info:
        validate_theta(0, 1, 0, 0)
    assert info.value.modulus == 24
    with pytest.raises(ThetaError) as info:
        validate_theta(2, 2 + 24, 1, 0)
    assert info.value.modulus == 48


def test_flags_must_be_bits():
    with pytest.raises(ThetaError):
        validate_theta(0, 0, 2, 0)


def test_box_agrees_with_brute_force():
    for k, p, eps, delta in itertools.product(range(-6, 7), range(-60, 61), (0, 1), (0, 1)):
        assert is_valid(k, p, eps, delta) == brute_force_valid(k, p, eps, delta), (k, p, eps, delta)


@given(st.integers(-500, 500), st.integers(-10**4, 10**4), st.sampled_from([0, 1]), st.sampled_from([0, 1]))
def test_periodicity(k, p, eps, delta):
    if is_valid(k, p, eps, delta):
        assert is_valid(k, p + (24 if eps == 0 else 48), eps, delta)
        t = ThetaClass(k, p, eps, delta)
        if eps == 0:
            assert (p - 4 * k - 24 * delta) % 24 == 0
            assert t.m == (p - 4 * k - 24 * delta) // 24
        else:
            assert (p - k - 24 * delta) % 48 == 0
            assert t.m == (p - k - 24 * delta) // 48


def test_enumerate_examples():
    assert list(enumerate_theta((1, 1), (0, 25))) == [ThetaClass(1, 4, 0, 0), ThetaClass(1, 4, 0, 1)]
    assert list(enumerate_theta((0, 0), (0, 0))) == [
        ThetaClass(0, 0, 0, 0),
        ThetaClass(0, 0, 0, 1),
        ThetaClass(0, 0, 1, 0),
    ]
    assert list(enumerate_theta((0, 3), (5, 4))) == []


@pytest.mark.parametrize("k_range, p_range", [((-4, 4), (-100, 100)), ((7, 9), (-30, 301)), ((-1, -1), (3, 3))])
def test_enumerate_is_exactly_the_valid_set(k_range, p_range):
    got = list(enumerate_theta(k_range, p_range))
    expected = [
        ThetaClass(*q)
        for q in itertools.product(range(k_range[0], k_range[1] + 1), range(p_range[0], p_range[1] + 1), (0, 1), (0, 1))
        if is_valid(*q)
    ]
    assert got == expected  # product order is already lexicographic


def test_json_and_literal_round_trip():
    t = ThetaClass(2, 26, 1, 1)
    assert ThetaClass.from_json(t.to_json()) == t
    assert parse_theta(str(t)) == t
