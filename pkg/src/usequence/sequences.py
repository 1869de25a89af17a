"""Memoized exact generation of U_n and its companion sequences.

Every table is filled bottom-up from its defining recurrence; closed forms
are never used for generation, only as cross-checks elsewhere.  A
:class:`SeqStore` is a single-writer memo: share one only after warming it
up, or give each concurrent worker its own.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import comb
from typing import Callable

from . import kernels
from .errors import IndexBudgetExceeded, IntegralityViolation

DEFAULT_MAX_INDEX = 500


def budget_from_env() -> int:
    """Index budget: ``USEQ_MAX_INDEX`` if set, else :data:`DEFAULT_MAX_INDEX`."""
    raw = os.environ.get("USEQ_MAX_INDEX")
    if raw is None:
        return DEFAULT_MAX_INDEX
    value = int(raw)
    if value < 0:
        raise ValueError("USEQ_MAX_INDEX must be nonnegative")
    return value


class SeqStore:
    """Append-only tables of U_n, E_n, B_n, V_m, a_n and E_n(x)."""

    def __init__(self, max_index: int | None = None):
        self.max_index = budget_from_env() if max_index is None else max_index
        self._u = [1]
        self._euler = [1]
        self._bernoulli = [Fraction(1)]
        self._v = [2, 1]
        self._a = [0, -2]  # a_0 is a placeholder; a_1 = -2
        self._euler_poly: dict[tuple[int, int], list[Fraction]] = {}

    def _check(self, n: int) -> None:
        if n < 0:
            raise ValueError(f"index must be nonnegative, got {n}")
        if n > self.max_index:
            raise IndexBudgetExceeded(
                f"index {n} exceeds the budget {self.max_index} (set USEQ_MAX_INDEX)"
            )

    def u(self, n: int) -> int:
        self._check(n)
        if n % 2:
            return 0
        u = self._u
        while len(u) <= n:
            m = len(u)
            if m % 2:
                u.append(0)
                continue
            u.append(-2 * sum(comb(m, 2 * k) * u[m - 2 * k] for k in range(1, m // 2 + 1)))
        return u[n]

    def euler_number(self, n: int) -> int:
        self._check(n)
        e = self._euler
        while len(e) <= n:
            m = len(e)
            if m % 2:
                e.append(0)
                continue
            e.append(-sum(comb(m, 2 * k) * e[m - 2 * k] for k in range(1, m // 2 + 1)))
        return e[n]

    def bernoulli_number(self, n: int) -> Fraction:
        """B_n with B_1 = -1/2, from ``sum_{k<m} C(m, k) B_k = 0``."""
        self._check(n)
        b = self._bernoulli
        while len(b) <= n:
            m = len(b)
            s = sum((comb(m + 1, k) * b[k] for k in range(m)), Fraction(0))
            value = -s / (m + 1)
            if m >= 3 and m % 2 and value != 0:
                raise ArithmeticError(f"B_{m} = {value} should vanish")
            b.append(value)
        return b[n]

    def bernoulli_poly(self, n: int, x) -> Fraction:
        x = Fraction(x)
        self.bernoulli_number(n)
        b = self._bernoulli
        return sum((comb(n, k) * b[k] * x ** (n - k) for k in range(n + 1)), Fraction(0))

    def euler_poly(self, n: int, x) -> Fraction:
        """E_n(x) from ``E_n(x) = x^n - 1/2 sum_{r<n} C(n, r) E_r(x)``."""
        self._check(n)
        x = Fraction(x)
        key = (x.numerator, x.denominator)
        table = self._euler_poly.setdefault(key, [])
        while len(table) <= n:
            m = len(table)
            s = sum((comb(m, r) * table[r] for r in range(m)), Fraction(0))
            table.append(x**m - s / 2)
        return table[n]

    def lucas_v(self, m: int) -> int:
        """V_0 = 2, V_1 = 1, V_{m+1} = V_m - 7 V_{m-1}."""
        self._check(m)
        v = self._v
        while len(v) <= m:
            v.append(v[-1] - 7 * v[-2])
        return v[m]

    def companion_a(self, n: int) -> int:
        """a_n with ``n a_n = U_2n + a_1 U_{2n-2} + ... + a_{n-1} U_2``."""
        if n < 1:
            raise ValueError("a_n is defined for n >= 1")
        self._check(2 * n)
        a = self._a
        while len(a) <= n:
            m = len(a)
            s = self.u(2 * m) + sum(a[k] * self.u(2 * (m - k)) for k in range(1, m))
            q, r = divmod(s, m)
            if r:
                raise IntegralityViolation(f"{m} does not divide the Newton sum {s}")
            a.append(q)
        return a[n]

    def u_even(self) -> Callable[[int], int]:
        """The sequence ``d -> U_{2d}`` as a callable."""
        return lambda d: self.u(2 * d)

    def warm(self, n: int) -> "SeqStore":
        """Fill the U table up to index n (for sharing read-only afterwards)."""
        self.u(n - n % 2)
        return self


_default_store: SeqStore | None = None


def default_store() -> SeqStore:
    global _default_store
    if _default_store is None or _default_store.max_index != budget_from_env():
        _default_store = SeqStore()
    return _default_store


def u(n: int) -> int:
    return default_store().u(n)


def euler_number(n: int) -> int:
    return default_store().euler_number(n)


def bernoulli_number(n: int) -> Fraction:
    return default_store().bernoulli_number(n)


def bernoulli_poly(n: int, x) -> Fraction:
    return default_store().bernoulli_poly(n, x)


def euler_poly(n: int, x) -> Fraction:
    return default_store().euler_poly(n, x)


def lucas_v(m: int) -> int:
    return default_store().lucas_v(m)


def companion_a(n: int) -> int:
    return default_store().companion_a(n)


def u_mod(n: int, m: int) -> int:
    """U_n mod m with machine-size arithmetic (no exact table, no budget)."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    return kernels.u_residues(n, m)[n]
