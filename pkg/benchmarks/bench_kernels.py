"""Compiled vs pure-Python modular kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Also times the full power-sum sweep (primes 5..199, all even k) with each
backend, which is the workload the kernels exist for.
"""

import argparse
import os
import subprocess
import sys
import timeit

from usequence import _pykernels

try:
    from usequence import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    ("inv_power_sum p=199 k=100", lambda m: m.inv_power_sum(1, 199, 1, 100, 199, False)),
    ("inv_power_sum p=9973^2 k=2", lambda m: m.inv_power_sum(1, 9973 // 3 + 1, 1, 2, 9973**2, True)),
    ("inv_power_sum p=65521 k=30", lambda m: m.inv_power_sum(1, 65521, 1, 30, 65521, False)),
    ("u_residues n=400 mod 5^5", lambda m: m.u_residues(400, 3125)),
    ("u_residues n=1500 mod 2^31-1", lambda m: m.u_residues(1500, 2**31 - 1)),
]

SWEEP = """
from usequence import congruences as cg, kernels
from usequence.exactnum import primes_in
import time
t = time.perf_counter()
for p in primes_in(5, 199):
    for k in cg.even_ks(p):
        cg.check_thm33(p, k); cg.check_thm34(p, k); cg.check_cor32(p, k)
print(kernels.BACKEND, time.perf_counter() - t)
"""


def best(func, repeat):
    return min(timeit.repeat(func, number=1, repeat=repeat))


def sweep(pure):
    env = dict(os.environ)
    env.pop("USEQ_PURE_PYTHON", None)
    if pure:
        env["USEQ_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True, text=True, check=True)
    backend, seconds = out.stdout.split()
    return backend, float(seconds)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        sys.exit("compiled kernels are not built; run pip install -e . first")

    print(f"{'kernel':32} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, call in CASES:
        assert call(_pykernels) == call(_ckernels), name
        py = best(lambda: call(_pykernels), args.repeat)
        cy = best(lambda: call(_ckernels), args.repeat)
        print(f"{name:32} {py * 1e3:10.2f} {cy * 1e3:10.2f} {py / cy:7.1f}x")

    print()
    for pure in (True, False):
        backend, seconds = sweep(pure)
        print(f"power-sum sweep p <= 199 [{backend}]: {seconds:.2f} s")


if __name__ == "__main__":
    main()
