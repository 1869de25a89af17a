"""p-regularity of ``f(k) = (1 - (p/3) p^(k(p-1)+b)) U_{k(p-1)+b}`` and the
congruences modulo p^n that follow from it, plus the 2-adic results."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .errors import FitMismatch
from .exactnum import (
    PrimePowerModulus,
    binomial,
    is_prime,
    legendre3,
    ord_p,
    symmetric_residue,
)
from .report import ClaimReport, congruence_report, exact_report, text_report
from .sequences import SeqStore, default_store


def _store(store):
    return store if store is not None else default_store()


@dataclass(frozen=True)
class RegularFunctionSpec:
    p: int
    b: int

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.b < 0 or self.b % 2:
            raise ValueError(f"b must be even and >= 0, got {self.b}")

    def index(self, k: int) -> int:
        return k * (self.p - 1) + self.b


def _g(p: int, index: int, store: SeqStore) -> int:
    # (p/3) = 0 for p = 3 removes the p-power factor
    return (1 - legendre3(p) * p**index) * store.u(index)


def f42(spec: RegularFunctionSpec, k: int, store: SeqStore | None = None) -> Fraction:
    if k < 0:
        raise ValueError("k must be >= 0")
    return Fraction(_g(spec.p, spec.index(k), _store(store)))


def alternating_sum(values: Sequence, n: int) -> Fraction:
    """``sum_{k=0..n} C(n, k) (-1)^k values[k]``."""
    return sum((binomial(n, k) * (-1) ** k * Fraction(values[k]) for k in range(n + 1)), Fraction(0))


def check_p_regular(
    spec: RegularFunctionSpec, depth: int, power: int = 1, store: SeqStore | None = None
) -> ClaimReport:
    """``ord_p(sum C(n,k)(-1)^k f(k)^power) >= n`` for n = 1..depth.

    ``power > 1`` tests the pointwise product ``f * ... * f``, which must be
    p-regular again.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    s = _store(store)
    values = [f42(spec, k, s) ** power for k in range(depth + 1)]
    lhs, rhs = [], []
    for n in range(1, depth + 1):
        v = ord_p(alternating_sum(values, n), spec.p)
        lhs.append(f"ord>={n}" if v >= n else f"ord={v}")
        rhs.append(f"ord>={n}")
    params = [("p", spec.p), ("b", spec.b), ("depth", depth)]
    if power != 1:
        params.append(("power", power))
    return text_report("thm4.2", params, ";".join(lhs), ";".join(rhs))


def _phi_prime_power(p: int, m: int) -> int:
    return p ** (m - 1) * (p - 1)


def check_thm43(
    p: int, k: int, m: int, n: int, b: int, store: SeqStore | None = None
) -> ClaimReport:
    """Newton-interpolation congruence modulo p^(mn).

    For k < n the binomial ``C(k-1-r, n-1-r)`` has a negative upper argument
    and is read as the polynomial value; see :func:`exactnum.binomial`.
    """
    RegularFunctionSpec(p, b)
    if min(k, m, n) < 1:
        raise ValueError("k, m, n must be >= 1")
    s = _store(store)
    phi = _phi_prime_power(p, m)
    lhs = _g(p, k * phi + b, s)
    rhs = sum(
        (-1) ** (n - 1 - r) * binomial(k - 1 - r, n - 1 - r) * binomial(k, r) * _g(p, r * phi + b, s)
        for r in range(n)
    )
    pairs = [(lhs, rhs)]
    modulus = PrimePowerModulus(p, m * n)
    params = [("p", p), ("k", k), ("m", m), ("n", n), ("b", b)]
    if n == 1:
        special = s.u(k * phi + b), (1 - legendre3(p) * p**b) * s.u(b)
        pairs.append(special)
    return congruence_report("thm4.3", params, pairs, modulus)


def check_thm45(p: int, k: int, m: int, b: int, store: SeqStore | None = None) -> ClaimReport:
    RegularFunctionSpec(p, b)
    if min(k, m) < 1:
        raise ValueError("k, m must be >= 1")
    s = _store(store)
    chi = legendre3(p)
    t = k * p ** (m - 1)
    lhs = s.u(k * _phi_prime_power(p, m) + b)
    rhs = (1 - t) * (1 - chi * p**b) * s.u(b) + t * (1 - chi * p ** (p - 1 + b)) * s.u(p - 1 + b)
    return congruence_report(
        "thm4.5", [("p", p), ("k", k), ("m", m), ("b", b)], [(lhs, rhs)], PrimePowerModulus(p, m + 1)
    )


# -- polynomial fit ---------------------------------------------------------

@dataclass(frozen=True)
class PolyFit:
    """``f(k) == sum_s coefficients[s] * k^s (mod p^n)`` for every k >= 0."""

    p: int
    n: int
    b: int
    coefficients: tuple[int, ...]

    def __call__(self, k: int) -> int:
        return sum(a * k**s for s, a in enumerate(self.coefficients))


def _falling_poly(shift: int, s: int) -> list[Fraction]:
    """Monomial coefficients of ``C(k - shift, s)`` as a polynomial in k."""
    poly = [Fraction(1)]
    for j in range(s):
        c = -(shift + j)  # multiply by (k - shift - j)
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, a in enumerate(poly):
            nxt[i] += c * a
            nxt[i + 1] += a
        poly = nxt
    return [a / factorial(s) for a in poly]


def fit_thm44(p: int, n: int, b: int, start: int = 0, store: SeqStore | None = None) -> PolyFit:
    """Fit ``f(k) mod p^n`` by a polynomial of degree < n.

    Forward differences of f at the nodes ``start .. start+n-1`` give the
    Newton form, which is expanded exactly and only then reduced to
    symmetric residues modulo p^n.  The fit is checked on k = 0..2n+4 and
    against the valuation bounds ``ord_p(a_s) >= s - ord_p(s!)``.
    """
    spec = RegularFunctionSpec(p, b)
    if n < 1 or p < n:
        raise ValueError(f"need 1 <= n <= p, got n={n}, p={p}")
    s = _store(store)
    mod = p**n
    diffs = [f42(spec, start + j, s) for j in range(n)]
    newton = []
    for _ in range(n):
        newton.append(diffs[0])
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    mono = [Fraction(0)] * n
    for order, d in enumerate(newton):
        for i, c in enumerate(_falling_poly(start, order)):
            mono[i] += d * c
    coeffs = []
    for c in mono:
        r = c.numerator * pow(c.denominator, -1, mod) % mod
        coeffs.append(symmetric_residue(r, mod))
    fit = PolyFit(p, n, b, tuple(coeffs))
    for k in range(2 * n + 5):
        if (f42(spec, k, s) - fit(k)) % mod:
            raise FitMismatch(f"fit misses f({k}) modulo {p}^{n}")
    for i, a in enumerate(coeffs):
        if ord_p(a, p) < i - ord_p(factorial(i), p):
            raise FitMismatch(f"ord_{p}(a_{i}) = {ord_p(a, p)} is below the bound")
    return fit


def check_thm44(p: int, n: int, b: int, store: SeqStore | None = None) -> ClaimReport:
    """Fit from nodes 0..n-1 and from 1..n; both must exist and agree."""
    params = [("p", p), ("n", n), ("b", b)]
    try:
        first = fit_thm44(p, n, b, 0, store).coefficients
        second = fit_thm44(p, n, b, 1, store).coefficients
    except FitMismatch as exc:
        return ClaimReport("thm4.4", tuple(params), "fit-failed", "fit", False, note=str(exc))
    return exact_report("thm4.4", params, list(zip(first, second)))


# -- explicit moduli 27 and 3125 ---------------------------------------------------

_COR42: dict[str, tuple[Callable[[int], int], Callable[[int], int], PrimePowerModulus, int]] = {
    "i": (lambda k: 2 * k, lambda k: -3 * k + 1, PrimePowerModulus(3, 3), 1),
    "ii": (
        lambda k: 4 * k,
        lambda k: 1250 * k**4 + 500 * k**3 + 725 * k**2 - 1205 * k + 2,
        PrimePowerModulus(5, 5),
        2,
    ),
    "iii": (
        lambda k: 4 * k + 2,
        lambda k: 1250 * k**4 - 1125 * k**3 - 675 * k**2 - 52,
        PrimePowerModulus(5, 5),
        1,
    ),
}


def check_cor42(k: int, part: str, store: SeqStore | None = None) -> ClaimReport:
    try:
        index, poly, modulus, kmin = _COR42[part]
    except KeyError:
        raise ValueError(f"unknown part {part!r}") from None
    if k < kmin:
        raise ValueError(f"part {part} needs k >= {kmin}")
    value = _store(store).u(index(k))
    return congruence_report(f"cor4.2.{part}", [("k", k)], [(value, poly(k))], modulus)


# -- 2-adic -------------------------------------------------------------------------

def _two_adic(n: int) -> int:
    return (n & -n).bit_length() - 1


def check_thm41(n: int, store: SeqStore | None = None) -> ClaimReport:
    """U_2n = 2/3 mod 2^(a+4) and the refinement mod 2^(a+7) or 2^7, a = ord_2 n."""
    if n < 3:
        raise ValueError("n must be >= 3")
    value = _store(store).u(2 * n)
    alpha = _two_adic(n)
    pairs = [(value, Fraction(2, 3), PrimePowerModulus(2, alpha + 4))]
    if n % 2 == 0:
        pairs.append((value, 48 * n + Fraction(2, 3), PrimePowerModulus(2, alpha + 7)))
    else:
        pairs.append((value, 48 * n + 22, PrimePowerModulus(2, 7)))
    return _multi_modulus_report("thm4.1", [("n", n), ("alpha", alpha)], pairs)


def check_cor41(n: int, store: SeqStore | None = None) -> ClaimReport:
    if n < 3:
        raise ValueError("n must be >= 3")
    value = _store(store).u(2 * n)
    second = 48 * n - 42 if n % 2 == 0 else -16 * n - 42
    pairs = [(value, 6, PrimePowerModulus(2, 4)), (value, second, PrimePowerModulus(2, 7))]
    return _multi_modulus_report("cor4.1", [("n", n)], pairs)


def _multi_modulus_report(claim_id, params, triples) -> ClaimReport:
    parts = [congruence_report(claim_id, params, [(a, b)], m) for a, b, m in triples]
    return ClaimReport(
        claim_id,
        parts[0].params,
        ";".join(r.lhs for r in parts),
        ";".join(r.rhs for r in parts),
        all(r.passed for r in parts),
        modulus=";".join(r.modulus for r in parts),
    )
