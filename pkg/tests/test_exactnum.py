from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from usequence.errors import DenominatorNotInvertible
from usequence.exactnum import (
    PrimePowerModulus,
    TruncatedSeries,
    binomial,
    congruent,
    divisors,
    factorize,
    is_prime,
    kronecker,
    legendre3,
    mobius,
    ord_p,
    primes_in,
    reduce_mod,
    series_exp,
    series_mul,
    symmetric_residue,
)

SMALL_PRIMES = primes_in(2, 200)


def _sieve(n):
    flags = [True] * (n + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(n**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = [False] * len(flags[i * i :: i])
    return [i for i, f in enumerate(flags) if f]


def test_is_prime_matches_sieve():
    assert [n for n in range(5000) if is_prime(n)] == _sieve(4999)


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    with pytest.raises(ValueError):
        is_prime(2**89 - 1)


def test_factorize_and_divisors():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert factorize(1) == {}


def test_ord_p():
    assert ord_p(0, 5) == float("inf")
    assert ord_p(Fraction(50, 3), 5) == 2
    assert ord_p(Fraction(7, 125), 5) == -3
    with pytest.raises(ValueError):
        ord_p(10, 4)


def test_reduce_mod_rational():
    r = reduce_mod(Fraction(1, 2), PrimePowerModulus(5, 2))
    assert int(r) * 2 % 25 == 1
    with pytest.raises(DenominatorNotInvertible):
        reduce_mod(Fraction(1, 5), PrimePowerModulus(5, 1))


def test_congruent_is_valuation_based():
    m = PrimePowerModulus(3, 2)
    assert congruent(Fraction(1, 2), 5, m)  # 1/2 = 5 mod 9
    # non-integral values can still be congruent: the difference is 3
    assert congruent(Fraction(1, 3), Fraction(10, 3), PrimePowerModulus(3, 1))
    assert not congruent(Fraction(1, 3), 0, PrimePowerModulus(3, 1))


def test_kronecker_conventions():
    assert kronecker(5, 1) == 1
    assert [kronecker(a, 2) for a in (1, 3, 5, 7, 4)] == [1, -1, -1, 1, 0]
    assert kronecker(-1, -1) == -1
    assert kronecker(3, -1) == 1
    assert kronecker(2, 15) == 1
    assert legendre3(7) == 1 and legendre3(5) == -1 and legendre3(3) == 0


def test_binomial_extends_to_negative_top():
    assert binomial(5, 2) == 10
    assert binomial(-1, 3) == -1
    assert binomial(-3, 2) == 6
    assert binomial(4, 7) == 0
    assert binomial(4, -1) == 0


def test_symmetric_residue():
    assert symmetric_residue(24, 25) == -1
    assert symmetric_residue(12, 25) == 12


@st.composite
def _reducible(draw):
    p = draw(st.sampled_from(SMALL_PRIMES[:15]))
    e = draw(st.integers(1, 4))
    def rat():
        num = draw(st.integers(-10**6, 10**6))
        den = draw(st.integers(1, 10**4).filter(lambda d: d % p))
        return Fraction(num, den)
    return PrimePowerModulus(p, e), rat(), rat()


@settings(max_examples=300, deadline=None)
@given(_reducible())
def test_reduction_is_a_ring_morphism(case):
    m, x, y = case
    mod = m.value
    rx, ry = int(reduce_mod(x, m)), int(reduce_mod(y, m))
    assert int(reduce_mod(x + y, m)) == (rx + ry) % mod
    assert int(reduce_mod(x * y, m)) == (rx * ry) % mod


@settings(max_examples=300, deadline=None)
@given(
    st.sampled_from(SMALL_PRIMES),
    st.fractions().filter(lambda f: f != 0),
    st.fractions().filter(lambda f: f != 0),
)
def test_ord_is_additive(p, x, y):
    assert ord_p(x * y, p) == ord_p(x, p) + ord_p(y, p)


@pytest.mark.parametrize("p", [p for p in SMALL_PRIMES if p > 2])
def test_euler_criterion(p):
    for a in range(1, p):
        assert kronecker(a, p) % p == pow(a, (p - 1) // 2, p)


def test_mobius_sums_vanish():
    assert all(sum(mobius(d) for d in divisors(n)) == (n == 1) for n in range(1, 10_001))


def test_series_arithmetic():
    a = TruncatedSeries([1, 2, 3])
    b = TruncatedSeries([0, 1], order=2)
    assert (a * b).coefficients == (0, 1, 2)
    assert (a - a).coefficients == (0, 0, 0)
    with pytest.raises(ValueError):
        a + TruncatedSeries([1, 1])
    # exp(t) to order 4
    assert series_exp(TruncatedSeries([0, 1, 0, 0, 0])).coefficients == tuple(
        Fraction(1, f) for f in (1, 1, 2, 6, 24)
    )
    with pytest.raises(ValueError):
        TruncatedSeries([1, 1]).exp()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.fractions(max_denominator=50).filter(lambda f: abs(f) < 100), min_size=1, max_size=10))
def test_exp_times_exp_of_negative_is_one(coeffs):
    a = TruncatedSeries([0] + coeffs)
    prod = series_mul(series_exp(a), series_exp(-a))
    assert prod == TruncatedSeries.constant(1, a.order)
