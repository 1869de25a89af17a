from fractions import Fraction
from math import factorial

import pytest

from usequence import newton_euler as ne
from usequence.errors import IntegralityViolation
from usequence.sequences import SeqStore, companion_a, u

CHECKS = [
    ne.check_newton_euler,
    ne.check_prime_power_condition,
    ne.check_c_sequence,
    ne.check_partition_sum,
    ne.check_determinant,
]


def _partitions(n, largest=None):
    """Partitions of n as multiplicity dicts."""
    if largest is None:
        largest = n
    if n == 0:
        yield {}
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            out = dict(rest)
            out[part] = out.get(part, 0) + 1
            yield out


def _partition_oracle(n, b):
    total = Fraction(0)
    for mult in _partitions(n):
        term = Fraction(1)
        for k, m in mult.items():
            term *= Fraction(b(k), k) ** m / factorial(m)
        total += term
    return total


@pytest.mark.parametrize("n", range(1, 31))
def test_conditions_agree_for_u(n):
    assert all(check(n).passed for check in CHECKS)


@pytest.mark.parametrize("n", range(1, 13))
def test_partition_sum_matches_enumeration(n):
    b = lambda d: u(2 * d)
    assert ne.partition_sum(n, b) == _partition_oracle(n, b)
    control = lambda d: d + 1
    assert ne.partition_sum(n, control) == _partition_oracle(n, control)


@pytest.mark.parametrize("n", range(1, 21))
def test_partition_sum_is_companion(n):
    # exp(sum U_2k t^k / k) = 1 + sum a_n t^n
    assert ne.partition_sum(n, lambda d: u(2 * d)) == companion_a(n)


@pytest.mark.parametrize("n", range(1, 21))
def test_determinant_over_factorial_is_companion(n):
    det = ne.bareiss_det(ne.newton_matrix(n, lambda d: u(2 * d)))
    assert det == factorial(n) * companion_a(n)


def test_small_determinant():
    # [[b1, b2], [-1, b1]] with b1 = -2, b2 = 22
    assert ne.newton_matrix(2, lambda d: u(2 * d)) == [[-2, 22], [-1, -2]]
    assert ne.bareiss_det([[-2, 22], [-1, -2]]) == 26


def test_bareiss_against_cofactor():
    m = [[0, 2, 1], [3, 0, 4], [5, 6, 0]]
    assert ne.bareiss_det(m) == 0 * (0 - 24) - 2 * (0 - 20) + 1 * (18 - 0)


def test_negative_control_fails_early():
    control = lambda d: d + 1
    fails = [n for n in range(1, 7) if not ne.check_newton_euler(n, control, label="n+1").passed]
    assert fails and fails[0] == 2
    assert not ne.check_determinant(2, control).passed
    assert not ne.check_partition_sum(2, control).passed
    assert not ne.check_c_sequence(2, control).passed


def test_control_label_in_params():
    r = ne.check_newton_euler(3, lambda d: d + 1, label="n+1")
    assert r.param("sequence") == "n+1"


@pytest.mark.parametrize("n", range(1, 31))
def test_realizability(n):
    q = ne.realizability_quotient(n)
    assert isinstance(q, int) and q >= 0
    assert ne.check_thm51(n).passed


def test_realizability_small_values():
    assert [ne.realizability_quotient(n) for n in range(1, 6)] == [2, 10, 200, 7680, 504600]


@pytest.mark.parametrize("n", range(1, 21))
def test_signed_round_trip(n):
    signed = ne.signed_u_even()
    cs = {d: ne.mobius_transform(d, signed).quotient for d in range(1, n + 1) if n % d == 0}
    assert sum(d * c for d, c in cs.items()) == (-1) ** n * u(2 * n)


def test_mobius_transform_rejects_nonintegral():
    with pytest.raises(IntegralityViolation):
        ne.mobius_transform(2, lambda d: d + 1)


def test_custom_store():
    s = SeqStore(max_index=60)
    assert ne.c_sequence(6, store=s) == ne.c_sequence(6)


def test_vacuous_prime_power_condition():
    assert ne.check_prime_power_condition(1).lhs == "vacuous"
