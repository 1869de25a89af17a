"""Congruences for U_n modulo p, p^2 and p^3.

Power sums of inverses are reduced term by term through
:func:`usequence.kernels.inv_power_sum`; the closed-form sides are built as
exact rationals and compared with ``ord_p(lhs - rhs) >= e``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import kernels
from .exactnum import PrimePowerModulus, is_prime, kronecker, legendre3, ord_p
from .report import ClaimReport, congruence_report, text_report
from .sequences import SeqStore, default_store


def _store(store):
    return store if store is not None else default_store()


def _odd_prime(p: int, minimum: int) -> None:
    if not is_prime(p) or p < minimum:
        raise ValueError(f"need a prime >= {minimum}, got {p}")


@dataclass(frozen=True)
class FermatQuotient:
    p: int
    a: int
    value: int

    def __post_init__(self):
        if self.p * self.value != pow(self.a, self.p - 1) - 1:
            raise ArithmeticError("p * q_p(a) != a^(p-1) - 1")


def fermat_quotient(p: int, a: int) -> FermatQuotient:
    """q_p(a) = (a^(p-1) - 1) / p."""
    _odd_prime(p, 2)
    if a % p == 0:
        raise ValueError(f"{a} is not coprime to {p}")
    q, r = divmod(pow(a, p - 1) - 1, p)
    assert r == 0
    return FermatQuotient(p, a, q)


@dataclass(frozen=True)
class ClassNumberH:
    p: int
    value: int

    def __post_init__(self):
        if not 1 <= self.value < self.p:
            raise ArithmeticError(f"h(-3*{self.p}) = {self.value} outside [1, p)")


def class_number_neg3p(p: int) -> ClassNumberH:
    """h(-3p) from the character sum ``2 * sum_{a <= p/3} (p/a)``."""
    _odd_prime(p, 5)
    return ClassNumberH(p, 2 * sum(kronecker(p, a) for a in range(1, p // 3 + 1)))


def _inv_sum(lo: int, hi: int, k: int, mod: int, step: int = 1, alternate=False) -> int:
    """``sum x^-k mod mod`` for x = lo, lo+step, ... <= hi."""
    return kernels.inv_power_sum(lo, hi + 1, step, k, mod, alternate)


# -- class number --------------------------------------------------------

def _require_1mod4(p: int) -> None:
    _odd_prime(p, 5)
    if p % 4 != 1:
        raise ValueError(f"{p} is not 1 mod 4")


def check_thm31(p: int, store: SeqStore | None = None) -> ClaimReport:
    _require_1mod4(p)
    s = _store(store)
    h = class_number_neg3p(p).value
    lhs = s.u((p - 1) // 2)
    rhs = (1 + 2 * (-1) ** ((p - 1) // 4)) * h
    return congruence_report("thm3.1", [("p", p)], [(lhs, rhs)], PrimePowerModulus(p))


def check_cor31(p: int, store: SeqStore | None = None) -> ClaimReport:
    """p does not divide U_{(p-1)/2}."""
    _require_1mod4(p)
    v = ord_p(_store(store).u((p - 1) // 2), p)
    return text_report("cor3.1", [("p", p)], f"ord_p={v}", "ord_p=0", modulus=str(p))


def check_cor33(p: int, store: SeqStore | None = None) -> ClaimReport:
    _require_1mod4(p)
    s = _store(store)
    chi = sum(kronecker(p, 2 * x - 1) for x in range(1, (p + 3) // 6 + 1))
    rhs = -2 * (2 + (-1) ** ((p - 1) // 4)) * chi
    return congruence_report(
        "cor3.3", [("p", p)], [(s.u((p - 1) // 2), rhs)], PrimePowerModulus(p)
    )


# -- harmonic sums mod p^2 and binomials mod p^3 -----------------------------

THM32_PARTS = ("i", "ii", "iii", "iv-a", "iv-b")


def check_thm32(p: int, part: str, store: SeqStore | None = None) -> ClaimReport:
    _odd_prime(p, 7)
    s = _store(store)
    q2 = fermat_quotient(p, 2).value
    q3 = fermat_quotient(p, 3).value
    lu = legendre3(p) * s.u(p - 3)
    p2 = p * p
    if part == "i":
        lhs = _inv_sum(1, p // 6, 1, p2)
        rhs = (
            -2 * q2
            - Fraction(3, 2) * q3
            + p * (q2 * q2 + Fraction(3, 4) * q3 * q3)
            - Fraction(5 * p, 2) * lu
        )
        pairs, m = [(lhs, rhs)], PrimePowerModulus(p, 2)
    elif part == "ii":
        lhs = _inv_sum(1, p // 3, 1, p2)
        rhs = -Fraction(3, 2) * q3 + Fraction(3, 4) * p * q3 * q3 - p * lu
        pairs, m = [(lhs, rhs)], PrimePowerModulus(p, 2)
    elif part == "iii":
        alt = _inv_sum(1, 2 * p // 3, 1, p2, alternate=True)
        cls = 9 * _inv_sum((-p) % 3, p - 1, 1, p2, step=3) % p2
        rhs = 3 * p * lu
        pairs, m = [(alt, rhs), (cls, rhs)], PrimePowerModulus(p, 2)
    elif part == "iv-a":
        j = p // 6
        lhs = (-1) ** j * comb(p - 1, j)
        rhs = 1 + p * (2 * q2 + Fraction(3, 2) * q3) + p2 * (
            q2 * q2 + 3 * q2 * q3 + Fraction(3, 8) * q3 * q3 - 5 * lu
        )
        pairs, m = [(lhs, rhs)], PrimePowerModulus(p, 3)
    elif part == "iv-b":
        j = p // 3
        lhs = (-1) ** j * comb(p - 1, j)
        rhs = 1 + Fraction(3, 2) * p * q3 + Fraction(3, 8) * p2 * q3 * q3 - Fraction(p2, 2) * lu
        pairs, m = [(lhs, rhs)], PrimePowerModulus(p, 3)
    else:
        raise ValueError(f"unknown part {part!r}")
    return congruence_report(f"thm3.2.{part}", [("p", p)], pairs, m)


# -- inverse power sums mod p ------------------------------------------------

def _check_k(p: int, k: int) -> None:
    _odd_prime(p, 5)
    if k % 2 or not 2 <= k <= p - 3:
        raise ValueError(f"k must be even with 2 <= k <= p - 3, got k={k}, p={p}")


def even_ks(p: int) -> list[int]:
    return list(range(2, p - 2, 2))


def check_thm33(p: int, k: int, store: SeqStore | None = None) -> ClaimReport:
    """Both three-term chains for the sums up to [p/6] and [p/3]."""
    _check_k(p, k)
    lu = legendre3(p) * _store(store).u(p - 1 - k)
    s6 = _inv_sum(1, p // 6, k, p)
    s6_class = pow(6, k, p) * _inv_sum(p % 6, p - 1, k, p, step=6) % p
    s3 = _inv_sum(1, p // 3, k, p)
    s3_class = pow(3, k, p) * _inv_sum(p % 3, p - 1, k, p, step=3) % p
    r6 = Fraction(6**k * (2**k + 1), 4 * (2 ** (k - 1) + 1)) * lu
    r3 = Fraction(6**k, 4 * (2 ** (k - 1) + 1)) * lu
    pairs = [(s6, r6), (s6_class, r6), (s3, r3), (s3_class, r3)]
    return congruence_report("thm3.3", [("p", p), ("k", k)], pairs, PrimePowerModulus(p))


def check_cor32(p: int, k: int, store: SeqStore | None = None) -> ClaimReport:
    """The band sum over ([p/6], [p/3]] and the two ratio congruences.

    The first ratio divides by 2^k + 1, so the sum up to [p/6] is taken
    modulo ``p^(1 + ord_p(2^k + 1))`` to keep the quotient exact modulo p.
    """
    _check_k(p, k)
    lu = legendre3(p) * _store(store).u(p - 1 - k)
    d1, d2 = 2**k + 1, 2**k
    e1 = 1 + ord_p(d1, p)
    band = _inv_sum(p // 6 + 1, p // 3, k, p)
    s3 = _inv_sum(1, p // 3, k, p)
    s6_wide = _inv_sum(1, p // 6, k, p**e1)
    rb = -Fraction(12**k, 4 * (2 ** (k - 1) + 1)) * lu
    pairs = [
        (band, rb),
        (s3, Fraction(s6_wide, d1)),
        (s3, -Fraction(band, d2)),
    ]
    return congruence_report("cor3.2", [("p", p), ("k", k)], pairs, PrimePowerModulus(p))


def check_thm34(p: int, k: int, store: SeqStore | None = None) -> ClaimReport:
    """Alternating sum up to [p/3] and the odd-denominator sum up to [(p+3)/6]."""
    _odd_prime(p, 5)
    if k % 2 or not 2 <= k <= p - 3:
        raise ValueError(f"k must be even with 2 <= k <= p - 3, got k={k}, p={p}")
    lu = legendre3(p) * _store(store).u(p - 1 - k)
    alt = _inv_sum(1, p // 3, k, p, alternate=True)
    odd = _inv_sum(1, 2 * ((p + 3) // 6) - 1, k, p, step=2)
    pairs = [
        (alt, -Fraction(3**k, 2) * lu),
        (odd, -Fraction(3**k, 2 ** (k + 1) + 4) * lu),
    ]
    return congruence_report("thm3.4", [("p", p), ("k", k)], pairs, PrimePowerModulus(p))


def degenerate_instance(p: int, k: int) -> bool:
    """True when p divides 2^(k-1) + 1 or 2^k + 1.

    There a closed-form coefficient of the power-sum congruences has p in
    its denominator, so the stated congruence cannot hold in Z_p.
    """
    return (2 ** (k - 1) + 1) % p == 0 or (2**k + 1) % p == 0
