"""Exact identities for U_n: generating function, Euler/Bernoulli forms,
the binomial inversion pair, the polynomial identities and the
recursions, plus the Dirichlet-type series for odd powers."""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from math import comb, factorial, isqrt
from typing import Sequence

from .errors import PrecisionTooLow
from .exactnum import TruncatedSeries
from .report import ClaimReport, exact_report, text_report
from .sequences import SeqStore, default_store

GUARD_DIGITS = 10


def _store(store: SeqStore | None) -> SeqStore:
    return store if store is not None else default_store()


# -- pi and sqrt(3) -------------------------------------------------------

def _arctan_inv(x: int, scale: int) -> int:
    """``arctan(1/x) * scale`` in truncated fixed point."""
    total = term = scale // x
    x2 = x * x
    k = 1
    while term:
        term //= x2
        total += -(term // (2 * k + 1)) if k % 2 else term // (2 * k + 1)
        k += 1
    return total


def pi_fixed(digits: int) -> int:
    """``P`` with ``|pi - P / 10^digits| < 10^-digits`` (Machin's formula)."""
    scale = 10 ** (digits + GUARD_DIGITS)
    raw = 4 * (4 * _arctan_inv(5, scale) - _arctan_inv(239, scale))
    return (raw + 10**GUARD_DIGITS // 2) // 10**GUARD_DIGITS


def pi_interval(digits: int) -> tuple[Fraction, Fraction]:
    """Rational bounds ``lo < pi < hi`` of width 2 * 10^-digits."""
    p = pi_fixed(digits)
    return Fraction(p - 1, 10**digits), Fraction(p + 1, 10**digits)


def sqrt3_interval(digits: int) -> tuple[Fraction, Fraction]:
    s = isqrt(3 * 10 ** (2 * digits))
    return Fraction(s, 10**digits), Fraction(s + 1, 10**digits)


def pi_decimal(digits: int) -> Decimal:
    """pi as a Decimal correct to ``digits`` places after the point."""
    # exact construction; scaleb would round to the ambient context
    return Decimal((0, tuple(int(c) for c in str(pi_fixed(digits))), -digits))


# -- generating function ----------------------------------------------------

def check_generating_function(order: int, store: SeqStore | None = None) -> ClaimReport:
    """``(e^t + e^-t - 1) * sum U_n t^n/n!`` must equal 1 up to ``t^order``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    s = _store(store)
    kernel = TruncatedSeries(
        [1] + [Fraction(2, factorial(k)) if k % 2 == 0 else 0 for k in range(1, order + 1)]
    )
    ogf = TruncatedSeries(Fraction(s.u(k), factorial(k)) for k in range(order + 1))
    prod = kernel * ogf
    pairs = [(prod[k], 1 if k == 0 else 0) for k in range(order + 1)]
    return exact_report("lem2.1", [("order", order)], pairs)


# -- Euler / Bernoulli forms ---------------------------------------------------

def check_thm21(n: int, store: SeqStore | None = None) -> ClaimReport:
    if n < 1:
        raise ValueError("n must be >= 1")
    s = _store(store)
    third, sixth = Fraction(1, 3), Fraction(1, 6)
    m = 2 * n
    value = s.u(m)
    via_euler = 3**m * s.euler_poly(m, third)
    via_b13 = Fraction(-2 * (2 ** (m + 1) + 1) * 3**m, m + 1) * s.bernoulli_poly(m + 1, third)
    via_b16 = (
        Fraction(-2 * (2 ** (m + 1) + 1) * 6**m, (2**m + 1) * (m + 1))
        * s.bernoulli_poly(m + 1, sixth)
    )
    pairs = [(value, via_euler), (value, via_b13), (value, via_b16)]
    return exact_report("thm2.1", [("n", n)], pairs)


def check_bernoulli_forms(n: int, store: SeqStore | None = None) -> ClaimReport:
    """E_n(1/3) against its two Bernoulli-polynomial expressions."""
    if n < 1:
        raise ValueError("n must be >= 1")
    s = _store(store)
    e = s.euler_poly(n, Fraction(1, 3))
    f = (-2) ** (n + 1) - 1
    first = Fraction(2 * f, n + 1) * s.bernoulli_poly(n + 1, Fraction(1, 3))
    second = Fraction(2 ** (n + 1) * f, (n + 1) * ((-2) ** n + 1)) * s.bernoulli_poly(
        n + 1, Fraction(1, 6)
    )
    return exact_report("lem2.2", [("n", n)], [(e, first), (e, second)])


# -- inversion pair ----------------------------------------------------------------

def _b_from_a(a: Sequence[Fraction]) -> list[Fraction]:
    return [
        2 * sum((comb(n, 2 * k) * a[n - 2 * k] for k in range(n // 2 + 1)), Fraction(0)) - a[n]
        for n in range(len(a))
    ]


def _a_from_b(b: Sequence[Fraction], s: SeqStore) -> list[Fraction]:
    return [
        sum((comb(n, 2 * k) * s.u(2 * k) * b[n - 2 * k] for k in range(n // 2 + 1)), Fraction(0))
        for n in range(len(b))
    ]


def check_inversion(
    seq: Sequence, reverse: bool = False, store: SeqStore | None = None, label=None
) -> ClaimReport:
    """Round trip through the inversion pair.

    Forward: ``a -> b -> a``.  With ``reverse`` the input is read as ``b``
    and sent ``b -> a -> b``.
    """
    s = _store(store)
    x = [Fraction(v) for v in seq]
    if not x:
        raise ValueError("empty sequence")
    back = _a_from_b(_b_from_a(x), s) if not reverse else _b_from_a(_a_from_b(x, s))
    params = [("N", len(x) - 1), ("direction", "reverse" if reverse else "forward")]
    if label is not None:
        params.append(("seed", label))
    return exact_report("thm2.2", params, list(zip(x, back)))


# -- polynomial identities ---------------------------------------------------------

def _thm23_sides(n: int, x: Fraction, variant: str, s: SeqStore) -> tuple[Fraction, Fraction]:
    def weighted(g):
        return sum(
            (comb(n, 2 * k) * s.u(2 * k) * g(n - 2 * k) for k in range(n // 2 + 1)), Fraction(0)
        )

    if variant == "i":
        lhs = weighted(lambda j: (x - 1) ** j - x**j + (x + 1) ** j)
        rhs = x**n
    elif variant == "ii":
        lhs = weighted(lambda j: x**j + (x + 3) ** j)
        rhs = (x + 1) ** n + (x + 2) ** n
    elif variant == "iii":
        lhs = weighted(lambda j: (x + 3) ** j - (x - 3) ** j)
        rhs = (x + 2) ** n + (x + 1) ** n - (x - 1) ** n - (x - 2) ** n
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return lhs, rhs


def check_thm23(n: int, x, variant: str, store: SeqStore | None = None) -> ClaimReport:
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(x)
    lhs, rhs = _thm23_sides(n, x, variant, _store(store))
    return exact_report(f"thm2.3.{variant}", [("n", n), ("x", x)], [(lhs, rhs)])


def check_thm24(n: int, variant: str, store: SeqStore | None = None) -> ClaimReport:
    if n < 1:
        raise ValueError("n must be >= 1")
    s = _store(store)
    u = s.u
    if variant == "i":
        lhs = sum(comb(n, 2 * k) * (2 ** (n - 2 * k) - 1) * u(2 * k) for k in range(n // 2 + 1))
        rhs = 1 - u(n)
    elif variant == "ii":
        lhs = sum(comb(n, 2 * k) * 6 ** (n - 2 * k) * u(2 * k) for k in range((n - 1) // 2 + 1))
        rhs = 5**n + 4**n - 2**n - 1
    elif variant == "iii":
        # Moved to the form sum + U_2n = 1 + 4^n so that both sides coincide
        # with the polynomial identity (ii) at x = 0 and index 2n.
        lhs = u(2 * n) + sum(
            comb(2 * n, 2 * k) * 3 ** (2 * n - 2 * k) * u(2 * k) for k in range(n + 1)
        )
        rhs = 1 + 2 ** (2 * n)
    elif variant == "iv":
        lhs = u(2 * n)
        rhs = 2 * (-1) ** n - 4 * sum(
            comb(2 * n, 4 * k) * ((-4) ** k - 1) * u(2 * n - 4 * k) for k in range(1, n // 2 + 1)
        )
    elif variant == "v":
        lhs = u(2 * n)
        tail = sum(comb(2 * n, 6 * k) * 3 ** (6 * k) * u(2 * n - 6 * k) for k in range(1, n // 3 + 1))
        rhs = 4 ** (n - 1) + Fraction(1 + s.lucas_v(2 * n), 4) - Fraction(3, 4) * tail
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return exact_report(f"thm2.4.{variant}", [("n", n)], [(lhs, rhs)])


def check_cor21(n: int, store: SeqStore | None = None) -> ClaimReport:
    """Sign alternation: (-1)^n U_2n > 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    v = (-1) ** n * _store(store).u(2 * n)
    return text_report("cor2.1", [("n", n)], "positive" if v > 0 else "nonpositive", "positive")


# -- odd-power series ------------------------------------------------------------

@dataclass(frozen=True)
class SeriesCheck:
    n: int
    terms: int
    precision: int
    partial_sum: Decimal
    closed_form: Decimal
    residual: Decimal
    bound: Decimal

    @property
    def passed(self) -> bool:
        return self.residual < self.bound


def thm25_sides(n: int, terms: int, precision: int, store: SeqStore | None = None) -> SeriesCheck:
    """Partial sum of ``sum_k (6k+1)^-s - (6k+5)^-s`` (s = 2n+1) and its closed form.

    The allowed residual is the tail bound ``(6T+1)^-s`` (the omitted terms
    alternate in sign with decreasing size) plus ``10^-(precision-10)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    if precision < 30:
        raise PrecisionTooLow(f"precision {precision} < 30 digits")
    s = _store(store)
    power = 2 * n + 1
    ctx = decimal.Context(prec=precision + GUARD_DIGITS)
    with decimal.localcontext(ctx):
        one = Decimal(1)
        partial = Decimal(0)
        for k in range(terms):
            partial += one / Decimal(6 * k + 1) ** power - one / Decimal(6 * k + 5) ** power
        pi = pi_decimal(precision + GUARD_DIGITS)
        sqrt3 = Decimal(3).sqrt()
        closed = (
            Decimal((-1) ** n * s.u(2 * n))
            * pi**power
            / (2 * sqrt3 * Decimal(3 ** (2 * n)) * Decimal(factorial(2 * n)))
        )
        residual = abs(closed - partial)
        bound = one / Decimal(6 * terms + 1) ** power + Decimal(10) ** -(precision - 10)
    with decimal.localcontext(decimal.Context(prec=precision)):
        return SeriesCheck(n, terms, precision, +partial, +closed, +residual, +bound)


def check_thm25(n: int, terms: int, precision: int, store: SeqStore | None = None) -> ClaimReport:
    sc = thm25_sides(n, terms, precision, store)
    return ClaimReport(
        "thm2.5",
        (("n", n), ("terms", terms), ("precision", precision)),
        str(sc.partial_sum),
        str(sc.closed_form),
        sc.passed,
        note=f"residual={sc.residual:.3E} bound={sc.bound:.3E}",
    )
