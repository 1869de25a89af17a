"""``usequence`` command line: compute tables, run verification sweeps and
evaluate the odd-power series.

Exit codes: 0 when every instance passes, 1 when any instance fails, 2 on
usage errors (unknown claim, malformed range, budget exceeded).
"""

from __future__ import annotations

import argparse
import ast
import csv
import io
import json
import operator
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from . import __version__
from . import congruences as cg
from . import identities as ids
from . import newton_euler as ne
from . import p_regular as pr
from .errors import IndexBudgetExceeded, USequenceError
from .exactnum import is_prime
from .report import ClaimReport, render
from .sequences import default_store


class UsageError(Exception):
    pass


# -- argument parsing helpers ---------------------------------------------------

def parse_range(text: str) -> list[int]:
    """``"a..b"`` (inclusive), ``"a,b,c"`` or a single integer."""
    try:
        out: list[int] = []
        for piece in text.split(","):
            piece = piece.strip()
            if ".." in piece:
                lo, hi = piece.split("..")
                lo_i, hi_i = int(lo), int(hi)
                if hi_i < lo_i:
                    raise ValueError
                out.extend(range(lo_i, hi_i + 1))
            else:
                out.append(int(piece))
    except ValueError:
        raise UsageError(f"malformed range {text!r}") from None
    return out


def parse_rationals(text: str) -> list[Fraction]:
    try:
        return [Fraction(piece.strip()) for piece in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed rational list {text!r}") from None


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Pow: operator.pow,
    ast.FloorDiv: operator.floordiv,
    ast.Mod: operator.mod,
}


class ExprSequence:
    """Integer sequence given by an arithmetic expression in ``n``.

    Only integer literals, ``n`` and ``+ - * ** // %`` are accepted.
    Instances pickle, so they can be shipped to worker processes.
    """

    def __init__(self, expr: str):
        self.expr = expr
        try:
            tree = ast.parse(expr, mode="eval")
        except SyntaxError:
            raise UsageError(f"cannot parse sequence {expr!r}") from None
        self._check(tree.body)

    def _check(self, node):
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            self._check(node.left)
            self._check(node.right)
        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            self._check(node.operand)
        elif isinstance(node, ast.Constant) and isinstance(node.value, int):
            pass
        elif isinstance(node, ast.Name) and node.id == "n":
            pass
        else:
            raise UsageError(f"unsupported syntax in sequence {self.expr!r}")

    def _eval(self, node, n):
        if isinstance(node, ast.BinOp):
            return _BINOPS[type(node.op)](self._eval(node.left, n), self._eval(node.right, n))
        if isinstance(node, ast.UnaryOp):
            v = self._eval(node.operand, n)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.Constant):
            return node.value
        return n

    def __call__(self, n: int) -> int:
        return self._eval(ast.parse(self.expr, mode="eval").body, n)


# -- claim registry ----------------------------------------------------------------

Task = tuple  # (callable, positional args, keyword args)


def _need(args, name: str) -> list[int]:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {args.claim}")
    return parse_range(value)


def _opt(args, name: str, default: str) -> list[int]:
    value = getattr(args, name)
    return parse_range(value if value is not None else default)


def _primes(args, minimum: int, pred: Callable[[int], bool] = lambda p: True) -> list[int]:
    return [p for p in _need(args, "primes") if p >= minimum and is_prime(p) and pred(p)]


def _per_n(func, minimum=1):
    return lambda args: [(func, (n,), {}) for n in _need(args, "n") if n >= minimum]


def _thm22(args):
    tasks = []
    for length in _need(args, "n"):
        for seed in _opt(args, "seed", "0"):
            rng = random.Random(seed)
            seq = [rng.randint(-10**6, 10**6) for _ in range(length + 1)]
            for reverse in (False, True):
                tasks.append((ids.check_inversion, (seq, reverse), {"label": seed}))
    return tasks


def _thm23(variant):
    def build(args):
        xs = parse_rationals(args.x) if args.x else [Fraction(v) for v in ("0", "1", "-1", "1/2", "5/7")]
        return [(ids.check_thm23, (n, x, variant), {}) for n in _need(args, "n") if n >= 0 for x in xs]

    return build


def _thm25(args):
    terms = args.terms if args.terms is not None else 10_000
    precision = args.precision if args.precision is not None else 50
    return [(ids.check_thm25, (n, terms, precision), {}) for n in _need(args, "n") if n >= 1]


def _mod4(func):
    return lambda args: [(func, (p,), {}) for p in _primes(args, 5, lambda p: p % 4 == 1)]


def _thm32(parts):
    return lambda args: [(cg.check_thm32, (p, part), {}) for p in _primes(args, 7) for part in parts]


def _power_sum(func):
    def build(args):
        ks = None if args.k is None else set(parse_range(args.k))
        return [
            (func, (p, k), {})
            for p in _primes(args, 5)
            for k in cg.even_ks(p)
            if ks is None or k in ks
        ]

    return build


def _even(values):
    return [b for b in values if b >= 0 and b % 2 == 0]


def _thm42(args):
    return [
        (pr.check_p_regular, (pr.RegularFunctionSpec(p, b), d), {})
        for p in _primes(args, 3)
        for b in _even(_opt(args, "b", "0"))
        for d in _opt(args, "depth", "4")
    ]


def _thm43(args):
    return [
        (pr.check_thm43, (p, k, m, n, b), {})
        for p in _primes(args, 3)
        for b in _even(_opt(args, "b", "0"))
        for m in _opt(args, "m", "1")
        for k in _need(args, "k")
        for n in _opt(args, "depth", "1")
        if k >= 1 and m >= 1 and n >= 1
    ]


def _thm44(args):
    return [
        (pr.check_thm44, (p, n, b), {})
        for p in _primes(args, 3)
        for b in _even(_opt(args, "b", "0"))
        for n in _need(args, "depth")
        if 1 <= n <= p
    ]


def _thm45(args):
    return [
        (pr.check_thm45, (p, k, m, b), {})
        for p in _primes(args, 3)
        for m in _opt(args, "m", "1")
        for k in _need(args, "k")
        for b in _even(_opt(args, "b", "0"))
        if k >= 1 and m >= 1
    ]


def _cor42(part, minimum):
    return lambda args: [(pr.check_cor42, (k, part), {}) for k in _need(args, "k") if k >= minimum]


REGISTRY: dict[str, Callable[[Any], list[Task]]] = {
    "lem2.1": _per_n(ids.check_generating_function),
    "thm2.1": _per_n(ids.check_thm21),
    "lem2.2": _per_n(ids.check_bernoulli_forms),
    "thm2.2": _thm22,
    "thm2.3.i": _thm23("i"),
    "thm2.3.ii": _thm23("ii"),
    "thm2.3.iii": _thm23("iii"),
    **{f"thm2.4.{v}": (lambda v: lambda args: [(ids.check_thm24, (n, v), {}) for n in _need(args, "n") if n >= 1])(v)
       for v in ("i", "ii", "iii", "iv", "v")},
    "thm2.5": _thm25,
    "cor2.1": _per_n(ids.check_cor21),
    "thm3.1": _mod4(cg.check_thm31),
    "cor3.1": _mod4(cg.check_cor31),
    "thm3.2.i": _thm32(["i"]),
    "thm3.2.ii": _thm32(["ii"]),
    "thm3.2.iii": _thm32(["iii"]),
    "thm3.2.iv": _thm32(["iv-a", "iv-b"]),
    "thm3.3": _power_sum(cg.check_thm33),
    "cor3.2": _power_sum(cg.check_cor32),
    "thm3.4": _power_sum(cg.check_thm34),
    "cor3.3": _mod4(cg.check_cor33),
    "thm4.1": _per_n(pr.check_thm41, 3),
    "cor4.1": _per_n(pr.check_cor41, 3),
    "thm4.2": _thm42,
    "thm4.3": _thm43,
    "thm4.4": _thm44,
    "thm4.5": _thm45,
    "cor4.2.i": _cor42("i", 1),
    "cor4.2.ii": _cor42("ii", 2),
    "cor4.2.iii": _cor42("iii", 1),
    "lem5.1.ii": _per_n(ne.check_newton_euler),
    "lem5.1.iv": _per_n(ne.check_prime_power_condition),
    "lem5.1.v": _per_n(ne.check_c_sequence),
    "lem5.1.vi": _per_n(ne.check_partition_sum),
    "lem5.1.vii": _per_n(ne.check_determinant),
    "thm5.1": _per_n(ne.check_thm51),
}

CONTROL_CLAIMS = {k for k in REGISTRY if k.startswith("lem5.1.")}


def _run_task(task: Task) -> ClaimReport:
    func, pos, kw = task
    return func(*pos, **kw)


def run_tasks(tasks: list[Task], jobs: int = 1) -> list[ClaimReport]:
    """Evaluate tasks, returning reports in task order regardless of ``jobs``."""
    if jobs <= 1 or len(tasks) < 2:
        return [_run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


# -- manifest and rendering ------------------------------------------------------------

@dataclass
class RunManifest:
    command: str
    parameters: dict
    reports: list[ClaimReport]
    controls: list[ClaimReport] = field(default_factory=list)
    wall_time: Optional[float] = None
    version: str = __version__

    @property
    def summary(self) -> dict:
        passed = sum(r.passed for r in self.reports)
        return {"total": len(self.reports), "pass": passed, "fail": len(self.reports) - passed}

    @property
    def control_summary(self) -> dict:
        passed = sum(r.passed for r in self.controls)
        return {"total": len(self.controls), "pass": passed, "fail": len(self.controls) - passed}

    @property
    def ok(self) -> bool:
        if any(not r.passed for r in self.reports):
            return False
        # a negative control must be rejected at least once
        return not self.controls or any(not r.passed for r in self.controls)

    def to_dict(self, include_time: bool = True) -> dict:
        d: dict[str, Any] = {
            "command": self.command,
            "parameters": self.parameters,
            "version": self.version,
            "reports": [r.to_dict() for r in self.reports],
            "summary": self.summary,
        }
        if self.controls:
            d["controls"] = [r.to_dict() for r in self.controls]
            d["control_summary"] = self.control_summary
        if include_time and self.wall_time is not None:
            d["wall_time_s"] = round(self.wall_time, 6)
        return d


def _flat_params(r: ClaimReport) -> str:
    return ";".join(f"{k}={render(v)}" for k, v in r.params)


def _clip(text: str, width: int = 48) -> str:
    return text if len(text) <= width else text[: width - 3] + "..."


def render_table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows)
    return "\n".join(lines)


def format_manifest(m: RunManifest, fmt: str, include_time: bool = True) -> str:
    if fmt == "json":
        return json.dumps(m.to_dict(include_time), indent=2)
    everything = m.reports + m.controls
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim", "params", "lhs", "rhs", "pass"])
        for r in everything:
            w.writerow([r.claim_id, _flat_params(r), r.lhs, r.rhs, "true" if r.passed else "false"])
        return buf.getvalue().rstrip("\n")
    rows = [
        [r.claim_id, _flat_params(r), r.modulus or "", _clip(r.lhs), _clip(r.rhs), "PASS" if r.passed else "FAIL"]
        for r in everything
    ]
    out = render_table(rows, ["claim", "params", "modulus", "lhs", "rhs", "result"])
    s = m.summary
    tail = f"{s['pass']} passed, {s['fail']} failed"
    if m.controls:
        c = m.control_summary
        tail += f"; control: {c['fail']} of {c['total']} rejected"
    if include_time and m.wall_time is not None:
        tail += f" ({m.wall_time:.2f} s)"
    return out + "\n" + tail


# -- subcommands ---------------------------------------------------------------------

SEQUENCES = ("u", "euler", "bernoulli", "v", "a", "c")


def compute_rows(seq: str, max_index: int) -> list[tuple[int, str]]:
    store = default_store()
    need = 2 * max_index if seq in ("a", "c") else max_index
    if need > store.max_index:
        raise IndexBudgetExceeded(
            f"{seq} up to {max_index} needs index {need} > budget {store.max_index} (set USEQ_MAX_INDEX)"
        )
    getters = {
        "u": store.u,
        "euler": store.euler_number,
        "bernoulli": store.bernoulli_number,
        "v": store.lucas_v,
        "a": store.companion_a,
        "c": lambda n: ne.c_sequence(n, store=store),
    }
    start = 1 if seq in ("a", "c") else 0
    return [(n, render(getters[seq](n))) for n in range(start, max_index + 1)]


def cmd_compute(args) -> int:
    rows = compute_rows(args.sequence, args.max)
    if args.format == "json":
        print(json.dumps({"sequence": args.sequence, "max": args.max,
                          "values": [{"index": i, "value": v} for i, v in rows]}, indent=2))
    elif args.format == "csv":
        print("index,value")
        for i, v in rows:
            print(f"{i},{v}")
    else:
        print(render_table([[str(i), v] for i, v in rows], ["index", args.sequence]))
    return 0


_VERIFY_OPTIONS = ("n", "primes", "k", "m", "b", "depth", "seed", "x", "terms", "precision",
                   "negative_control")


def build_manifest(args) -> RunManifest:
    if args.claim not in REGISTRY:
        raise UsageError(f"unknown claim {args.claim!r}; see 'usequence claims'")
    params = {k: getattr(args, k) for k in _VERIFY_OPTIONS if getattr(args, k) is not None}
    start = time.perf_counter()
    tasks = REGISTRY[args.claim](args)
    if not tasks:
        raise UsageError("the given ranges select no instances")
    controls: list[Task] = []
    if args.negative_control:
        if args.claim not in CONTROL_CLAIMS:
            raise UsageError("--negative-control applies to lem5.1.* claims only")
        seq = ExprSequence(args.negative_control)
        controls = [(f, pos, {"b": seq, "label": args.negative_control}) for f, pos, _ in tasks]
    reports = run_tasks(tasks, args.jobs)
    control_reports = run_tasks(controls, args.jobs)
    return RunManifest("verify", {"claim": args.claim, **params}, reports, control_reports,
                       wall_time=time.perf_counter() - start)


def cmd_verify(args) -> int:
    manifest = build_manifest(args)
    print(format_manifest(manifest, args.format, include_time=not args.no_wall_time))
    return 0 if manifest.ok else 1


def cmd_series(args) -> int:
    sc = ids.thm25_sides(args.n, args.terms, args.precision)
    if args.format == "json":
        print(json.dumps({
            "n": sc.n, "terms": sc.terms, "precision": sc.precision,
            "partial_sum": str(sc.partial_sum), "closed_form": str(sc.closed_form),
            "residual": str(sc.residual), "bound": str(sc.bound), "pass": sc.passed,
        }, indent=2))
    else:
        print(f"partial sum : {sc.partial_sum}")
        print(f"closed form : {sc.closed_form}")
        print(f"residual    : {sc.residual:.6E}")
        print(f"bound       : {sc.bound:.6E}")
        print("PASS" if sc.passed else "FAIL")
    return 0 if sc.passed else 1


def cmd_claims(args) -> int:
    print("\n".join(REGISTRY))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="usequence", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print exact sequence values")
    p.add_argument("sequence", choices=SEQUENCES)
    p.add_argument("--max", type=int, required=True, help="largest index")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check a claim over parameter ranges")
    p.add_argument("claim")
    p.add_argument("--n", help="index range, e.g. 1..40")
    p.add_argument("--primes", help="range scanned for primes, e.g. 5..199")
    p.add_argument("--k", help="k range")
    p.add_argument("--m", help="m range (prime-power exponent)")
    p.add_argument("--b", help="even offsets, e.g. 0,2,4")
    p.add_argument("--depth", help="depth n of the p-regular or fit checks")
    p.add_argument("--seed", help="seed range for random inversion inputs")
    p.add_argument("--x", help="comma separated rational sample points")
    p.add_argument("--terms", type=int)
    p.add_argument("--precision", type=int)
    p.add_argument("--negative-control", help="control sequence in n, e.g. 'n+1'")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-wall-time", action="store_true", help="omit wall time from the output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="partial sum against closed form for odd powers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--precision", type=int, default=50)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("claims", help="list registered claim ids")
    p.set_defaults(func=cmd_claims)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, USequenceError, ValueError) as exc:
        print(f"usequence: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
