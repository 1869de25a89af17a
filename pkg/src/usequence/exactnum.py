"""Exact scalar arithmetic.

Python's ``int`` is the arbitrary precision integer and
:class:`fractions.Fraction` the canonical rational (always reduced, positive
denominator, zero stored as 0/1).  On top of those this module provides
p-adic valuations, reduction into ``Z/p^e``, the Kronecker symbol, the
Moebius function, binomials and truncated power series with rational
coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DenominatorNotInvertible

Rat = Fraction
Number = Union[int, Fraction]

INF = math.inf

# Deterministic for n < 3.3e24 (first thirteen primes as witnesses).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_BOUND = 3317044064679887385961981


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test, valid for all ``n < 3.3e24``."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    if n >= _MR_BOUND:
        raise ValueError(f"primality of {n} is outside the deterministic range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` by trial division (n != 0)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1 in increasing order."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def ord_p(x: Number, p: int) -> Union[int, float]:
    """p-adic valuation of an integer or rational; ``math.inf`` for zero."""
    _require_prime(p)
    x = Fraction(x)
    if x == 0:
        return INF
    return _val(x.numerator, p) - _val(x.denominator, p)


def _val(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class PrimePowerModulus:
    """The modulus p^e with p prime and e >= 1."""

    p: int
    e: int = 1

    def __post_init__(self):
        _require_prime(self.p)
        if self.e < 1:
            raise ValueError("exponent must be >= 1")

    @property
    def value(self) -> int:
        return self.p**self.e

    def __str__(self):
        return f"{self.p}^{self.e}"


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: PrimePowerModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.value:
            raise ValueError("residue out of range")

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def _as_modulus(m: Union[PrimePowerModulus, tuple]) -> PrimePowerModulus:
    if isinstance(m, PrimePowerModulus):
        return m
    return PrimePowerModulus(*m)


def reduce_mod(x: Number, m: Union[PrimePowerModulus, tuple]) -> Residue:
    """Image of a p-integral rational ``n/d`` in ``Z/p^e`` (``n * d^-1``)."""
    m = _as_modulus(m)
    x = Fraction(x)
    mod = m.value
    if x.denominator % m.p == 0:
        raise DenominatorNotInvertible(f"{x} has negative {m.p}-adic valuation")
    return Residue(x.numerator * pow(x.denominator, -1, mod) % mod, m)


def congruent(x: Number, y: Number, m: Union[PrimePowerModulus, tuple]) -> bool:
    """``x == y (mod p^e)`` in the sense ``ord_p(x - y) >= e``."""
    m = _as_modulus(m)
    return ord_p(Fraction(x) - Fraction(y), m.p) >= m.e


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for arbitrary integers a, n."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 and a % 8 in (3, 5):
            result = -result
    # n is now odd and positive: Jacobi symbol
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre3(p: int) -> int:
    """(p/3): +1 if p = 1 (mod 3), -1 if p = 2 (mod 3), 0 if 3 | p."""
    return kronecker(p, 3)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    f = factorize(n) if n > 1 else {}
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, polynomial in the upper argument.

    Returns 0 for k < 0 and for 0 <= n < k.  For negative n the value is
    ``(-1)^k C(k-n-1, k)``, the value of ``n(n-1)...(n-k+1)/k!``.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    return (-1) ** k * math.comb(k - n - 1, k)


def symmetric_residue(x: int, mod: int) -> int:
    """Representative of x mod ``mod`` in ``(-mod/2, mod/2]``."""
    r = x % mod
    return r - mod if r > mod // 2 else r


class TruncatedSeries:
    """Power series ``c_0 + c_1 t + ... + c_N t^N`` with rational coefficients.

    The order N is fixed at construction; products and exponentials are
    truncated to it and binary operations refuse mismatched orders.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Number], order: int | None = None):
        c = [Fraction(x) for x in coefficients]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            c = (c + [Fraction(0)] * (order + 1))[: order + 1]
        if not c:
            raise ValueError("a series needs at least the constant term")
        self._c = tuple(c)

    @classmethod
    def constant(cls, value: Number, order: int) -> "TruncatedSeries":
        return cls([value], order)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, k: int) -> Fraction:
        return self._c[k]

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self._c]})"

    def _check(self, other: "TruncatedSeries") -> None:
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(a + b for a, b in zip(self._c, other._c))

    def __neg__(self):
        return TruncatedSeries(-a for a in self._c)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(a * other for a in self._c)
        return NotImplemented

    __rmul__ = __mul__

    def exp(self) -> "TruncatedSeries":
        return series_exp(self)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the common order."""
    a._check(b)
    n = a.order
    ca, cb = a.coefficients, b.coefficients
    return TruncatedSeries(
        sum((ca[i] * cb[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)
    )


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential of a series with zero constant term.

    Uses ``g' = a' g``, i.e. ``k g_k = sum_{j=1..k} j a_j g_{k-j}``.
    """
    if a[0] != 0:
        raise ValueError("exp needs a zero constant term")
    c = a.coefficients
    g = [Fraction(1)]
    for k in range(1, a.order + 1):
        s = sum((j * c[j] * g[k - j] for j in range(1, k + 1)), Fraction(0))
        g.append(s / k)
    return TruncatedSeries(g)
