from fractions import Fraction

import pytest

from usequence import sequences
from usequence.errors import IndexBudgetExceeded
from usequence.identities import check_bernoulli_forms
from usequence.newton_euler import check_growth_bounds
from usequence.sequences import SeqStore

U_EVEN = [-2, 22, -602, 30742, -2523002, 303692662, -50402079002, 11030684333782]
A_VALUES = [-2, 13, -224, 8170, -522716, 51749722, -7309866728]


@pytest.fixture(scope="module")
def store():
    return SeqStore(max_index=400)


def test_golden_u(store):
    assert [store.u(2 * i) for i in range(1, 9)] == U_EVEN
    assert store.u(0) == 1
    assert all(store.u(n) == 0 for n in range(1, 40, 2))


def test_golden_companion(store):
    assert [store.companion_a(n) for n in range(1, 8)] == A_VALUES


def test_classical_tables(store):
    assert [store.euler_number(n) for n in range(0, 11, 2)] == [1, -1, 5, -61, 1385, -50521]
    assert [store.bernoulli_number(n) for n in range(5)] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]
    assert store.bernoulli_number(12) == Fraction(-691, 2730)
    assert [store.lucas_v(m) for m in range(6)] == [2, 1, -13, -20, 71, 211]


def test_polynomials(store):
    assert store.bernoulli_poly(2, Fraction(1, 2)) == Fraction(-1, 12)
    assert store.euler_poly(3, Fraction(1, 2)) == 0
    # E_n = 2^n E_n(1/2)
    for n in range(12):
        assert 2**n * store.euler_poly(n, Fraction(1, 2)) == store.euler_number(n)


def test_euler_poly_cache_uses_canonical_key(store):
    assert store.euler_poly(10, Fraction(2, 6)) == store.euler_poly(10, Fraction(1, 3))


def test_sign_alternation(store):
    assert all((-1) ** n * store.u(2 * n) > 0 for n in range(1, 101))


def test_parity(store):
    assert all(store.u(2 * m) % 2 == 0 for m in range(1, 101))


def test_cross_definition_with_euler_polynomial(store):
    third = Fraction(1, 3)
    for n in range(61):
        assert store.u(2 * n) == 3 ** (2 * n) * store.euler_poly(2 * n, third)


@pytest.mark.parametrize("n", range(1, 41))
def test_bernoulli_forms(n):
    assert check_bernoulli_forms(n).passed


@pytest.mark.parametrize("m", range(1, 41))
def test_growth_bounds(m):
    assert check_growth_bounds(m).passed


def test_budget_is_hard():
    s = SeqStore(max_index=20)
    assert s.u(20) == s.u(20)
    with pytest.raises(IndexBudgetExceeded):
        s.u(22)
    with pytest.raises(IndexBudgetExceeded):
        s.companion_a(11)


def test_env_budget(monkeypatch):
    monkeypatch.setenv("USEQ_MAX_INDEX", "12")
    with pytest.raises(IndexBudgetExceeded):
        sequences.u(14)
    monkeypatch.delenv("USEQ_MAX_INDEX")
    assert sequences.u(14) == U_EVEN[6]


def test_u_mod_agrees_with_exact(store):
    for m in (2, 27, 3125, 10**9 + 7):
        assert [sequences.u_mod(n, m) for n in range(60)] == [store.u(n) % m for n in range(60)]
