"""Newton-Euler and realizability criteria for integer sequences.

Every check takes the sequence as a callable ``b(d)`` for d >= 1 and
defaults to ``b(d) = U_2d``, so that other sequences (for instance
negative controls such as ``b(d) = d + 1``) go through the same code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Optional

from .errors import IntegralityViolation, NegativityViolation
from .exactnum import TruncatedSeries, divisors, factorize, mobius
from .identities import pi_interval, sqrt3_interval
from .report import ClaimReport, text_report
from .sequences import SeqStore, default_store

Sequence_ = Callable[[int], int]


def _seq(b: Optional[Sequence_], store: SeqStore | None) -> Sequence_:
    if b is not None:
        return b
    s = store if store is not None else default_store()
    return s.u_even()


def _params(n: int, label: Optional[str]) -> list:
    params: list = [("n", n)]
    if label is not None:
        params.append(("sequence", label))
    return params


def mobius_sum(n: int, b: Sequence_) -> int:
    """``sum_{d | n} mu(n/d) b(d)``."""
    return sum(mobius(n // d) * b(d) for d in divisors(n))


@dataclass(frozen=True)
class MobiusTransform:
    n: int
    raw_sum: int
    quotient: int

    def __post_init__(self):
        if self.n * self.quotient != self.raw_sum:
            raise IntegralityViolation(f"{self.n} * {self.quotient} != {self.raw_sum}")


def mobius_transform(n: int, b: Sequence_) -> MobiusTransform:
    if n < 1:
        raise ValueError("n must be >= 1")
    raw = mobius_sum(n, b)
    q, r = divmod(raw, n)
    if r:
        raise IntegralityViolation(f"{n} does not divide {raw}")
    return MobiusTransform(n, raw, q)


def check_newton_euler(
    n: int, b: Optional[Sequence_] = None, store: SeqStore | None = None, label: Optional[str] = None
) -> ClaimReport:
    """n divides the Moebius sum of b at n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    raw = mobius_sum(n, _seq(b, store))
    return text_report("lem5.1.ii", _params(n, label), str(raw % n), "0", modulus=str(n))


def check_prime_power_condition(
    n: int, b: Optional[Sequence_] = None, store: SeqStore | None = None, label: Optional[str] = None
) -> ClaimReport:
    """``b(n) == b(n/p) (mod p^t)`` for each prime power p^t exactly dividing n.

    For n = 1 there is no prime divisor and the condition holds vacuously.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    seq = _seq(b, store)
    lhs, rhs = [], []
    for p, t in sorted(factorize(n).items()) if n > 1 else []:
        mod = p**t
        lhs.append(f"{seq(n) % mod}@{p}^{t}")
        rhs.append(f"{seq(n // p) % mod}@{p}^{t}")
    return text_report(
        "lem5.1.iv", _params(n, label), ";".join(lhs) or "vacuous", ";".join(rhs) or "vacuous"
    )


def c_sequence(n: int, b: Optional[Sequence_] = None, store: SeqStore | None = None) -> int:
    """c_n with ``b(n) = sum_{d | n} d c_d`` (Moebius inversion)."""
    seq = _seq(b, store)
    c = mobius_transform(n, seq).quotient
    back = sum(d * mobius_transform(d, seq).quotient for d in divisors(n))
    if back != seq(n):
        raise ArithmeticError(f"round trip gives {back}, expected {seq(n)}")
    return c


def check_c_sequence(
    n: int, b: Optional[Sequence_] = None, store: SeqStore | None = None, label: Optional[str] = None
) -> ClaimReport:
    seq = _seq(b, store)
    try:
        cs = {d: mobius_transform(d, seq).quotient for d in divisors(n)}
    except IntegralityViolation as exc:
        return ClaimReport(
            "lem5.1.v", tuple(_params(n, label)), "non-integral", str(seq(n)), False, note=str(exc)
        )
    back = sum(d * c for d, c in cs.items())
    return text_report("lem5.1.v", _params(n, label), str(back), str(seq(n)))


def partition_sum(n: int, b: Sequence_) -> Fraction:
    """The weighted partition sum, as the t^n coefficient of ``exp(sum b_k t^k / k)``."""
    log_side = TruncatedSeries([0] + [Fraction(b(k), k) for k in range(1, n + 1)])
    return log_side.exp()[n]


def check_partition_sum(
    n: int, b: Optional[Sequence_] = None, store: SeqStore | None = None, label: Optional[str] = None
) -> ClaimReport:
    if n < 1:
        raise ValueError("n must be >= 1")
    value = partition_sum(n, _seq(b, store))
    return text_report(
        "lem5.1.vi", _params(n, label), f"den={value.denominator}", "den=1"
    )


def newton_matrix(n: int, b: Sequence_) -> list[list[int]]:
    """Row i holds ``-i`` below the diagonal and ``b(1) .. b(n-i)`` from it on."""
    rows = []
    for i in range(n):
        row = [0] * n
        if i:
            row[i - 1] = -i
        for j in range(i, n):
            row[j] = b(j - i + 1)
        rows.append(row)
    return rows


def bareiss_det(matrix: list[list[int]]) -> int:
    """Exact determinant by fraction-free elimination."""
    a = [row[:] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def check_determinant(
    n: int, b: Optional[Sequence_] = None, store: SeqStore | None = None, label: Optional[str] = None
) -> ClaimReport:
    if n < 1:
        raise ValueError("n must be >= 1")
    det = bareiss_det(newton_matrix(n, _seq(b, store)))
    return text_report(
        "lem5.1.vii", _params(n, label), str(det % factorial(n)), "0", modulus=f"{n}!"
    )


def signed_u_even(store: SeqStore | None = None) -> Sequence_:
    s = store if store is not None else default_store()
    return lambda d: (-1) ** d * s.u(2 * d)


def realizability_quotient(n: int, store: SeqStore | None = None) -> int:
    """``(1/n) sum_{d | n} mu(n/d) (-1)^d U_2d``, which must be a nonnegative integer."""
    q = mobius_transform(n, signed_u_even(store)).quotient
    if q < 0:
        raise NegativityViolation(f"quotient {q} at n={n} is negative")
    return q


def check_thm51(n: int, store: SeqStore | None = None) -> ClaimReport:
    """U_2n is Newton-Euler at n and the signed sequence has a nonnegative integral orbit count."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ne = mobius_sum(n, _seq(None, store)) % n
    raw = mobius_sum(n, signed_u_even(store))
    lhs = f"{ne};{raw % n};{'nonneg' if raw >= 0 else 'neg'}"
    return text_report("thm5.1", [("n", n)], lhs, "0;0;nonneg")


def growth_bounds(m: int, store: SeqStore | None = None) -> tuple[bool, bool]:
    """Whether ``4/5 X < (-1)^m U_2m`` and ``(-1)^m U_2m < X`` hold.

    ``X = 2 sqrt(3) 3^2m (2m)! / pi^(2m+1)`` is bracketed with rational
    bounds on pi and sqrt(3), and each inequality is decided against the
    unfavourable end of the bracket.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    s = store if store is not None else default_store()
    digits = 30 + 2 * m
    pi_lo, pi_hi = pi_interval(digits)
    r_lo, r_hi = sqrt3_interval(digits)
    base = 2 * 3 ** (2 * m) * factorial(2 * m)
    x_lo = base * r_lo / pi_hi ** (2 * m + 1)
    x_hi = base * r_hi / pi_lo ** (2 * m + 1)
    v = (-1) ** m * s.u(2 * m)
    return Fraction(4, 5) * x_hi < v, v < x_lo


def check_growth_bounds(m: int, store: SeqStore | None = None) -> ClaimReport:
    lower, upper = growth_bounds(m, store)
    lhs = f"{'above' if lower else 'not-above'}-4/5X;{'below' if upper else 'not-below'}-X"
    return text_report("thm5.1.bounds", [("m", m)], lhs, "above-4/5X;below-X")
