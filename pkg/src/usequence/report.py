"""ClaimReport: the outcome of checking one instance of a claim."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from .exactnum import PrimePowerModulus, congruent, ord_p


def render(x: Any) -> str:
    """Canonical text for a scalar: ints in decimal, rationals as ``num/den``."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def render_mod(x: Any, m: PrimePowerModulus) -> str:
    """Residue of ``x`` mod p^e, or the raw rational when ``x`` is not p-integral."""
    x = Fraction(x)
    if ord_p(x, m.p) < 0:
        return render(x)
    mod = m.value
    return str(x.numerator * pow(x.denominator, -1, mod) % mod)


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    params: tuple[tuple[str, Any], ...]
    lhs: str
    rhs: str
    passed: bool
    modulus: Optional[str] = None
    note: Optional[str] = field(default=None, compare=False)

    def param(self, key: str) -> Any:
        return dict(self.params)[key]

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"claim": self.claim_id, "params": dict(self.params)}
        if self.modulus is not None:
            d["modulus"] = self.modulus
        d["lhs"] = self.lhs
        d["rhs"] = self.rhs
        d["pass"] = self.passed
        return d


def _params(params: Iterable[tuple[str, Any]]) -> tuple[tuple[str, Any], ...]:
    return tuple((k, render(v) if isinstance(v, Fraction) else v) for k, v in params)


def exact_report(claim_id: str, params, pairs: Sequence[tuple[Any, Any]]) -> ClaimReport:
    """Report for exact equalities ``lhs_i == rhs_i`` (all must hold)."""
    lhs = ";".join(render(a) for a, _ in pairs)
    rhs = ";".join(render(b) for _, b in pairs)
    ok = all(Fraction(a) == Fraction(b) for a, b in pairs)
    return ClaimReport(claim_id, _params(params), lhs, rhs, ok)


def congruence_report(
    claim_id: str, params, pairs: Sequence[tuple[Any, Any]], m: PrimePowerModulus
) -> ClaimReport:
    """Report for congruences ``lhs_i == rhs_i (mod p^e)`` (all must hold)."""
    lhs = ";".join(render_mod(a, m) for a, _ in pairs)
    rhs = ";".join(render_mod(b, m) for _, b in pairs)
    ok = all(congruent(a, b, m) for a, b in pairs)
    return ClaimReport(claim_id, _params(params), lhs, rhs, ok, modulus=str(m))


def text_report(claim_id: str, params, lhs: str, rhs: str, modulus: Optional[str] = None) -> ClaimReport:
    """Report for structural claims whose sides are already canonical strings."""
    return ClaimReport(claim_id, _params(params), lhs, rhs, lhs == rhs, modulus=modulus)
