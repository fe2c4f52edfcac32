"""Compare the numba and numpy F_p kernels, and the Hom solver end to end.

    python benchmarks/bench_kernels.py --sizes 16,64,128 --p 3

The end-to-end timing reruns itself with KRONREP_DISABLE_JIT=1 to get the
numpy path through the whole package.
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from kronrep.kernels import matmul_numba, matmul_numpy, rref_numba, rref_numpy


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_kernels(sizes, p, repeat, seed):
    rng = np.random.default_rng(seed)
    print(f"{'kernel':<8}{'size':>6}{'numba ms':>12}{'numpy ms':>12}")
    for size in sizes:
        a = rng.integers(0, p, size=(size, size)).astype(np.int64)
        b = rng.integers(0, p, size=(size, size)).astype(np.int64)
        rref_numba(a.copy(), p)
        matmul_numba(a, b, p)  # compile outside the timing
        for name, fast, slow in (
            ("rref", lambda: rref_numba(a.copy(), p), lambda: rref_numpy(a.copy(), p)),
            ("matmul", lambda: matmul_numba(a, b, p), lambda: matmul_numpy(a, b, p)),
        ):
            tf, ts = best_of(fast, repeat), best_of(slow, repeat)
            print(f"{name:<8}{size:>6}{tf * 1e3:>12.3f}{ts * 1e3:>12.3f}")


HOM_SNIPPET = """
import itertools, time
from kronrep.cover import enumerate_subtrees
from kronrep.linalg import F3
from kronrep.representation import hom_space, pushdown
mods = [pushdown(t, F3) for x in range(1, 5) for t in enumerate_subtrees(3, x, 8 - x)][:{count}]
hom_space(mods[0], mods[0])
t0 = time.perf_counter()
for a, b in itertools.product(mods, repeat=2):
    hom_space(a, b)
print(time.perf_counter() - t0)
"""


def bench_hom(count):
    out = {}
    for label, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, KRONREP_DISABLE_JIT=flag)
        proc = subprocess.run(
            [sys.executable, "-c", HOM_SNIPPET.format(count=count)], env=env, capture_output=True, text=True, check=True
        )
        out[label] = float(proc.stdout)
    print(f"hom_space on {count}x{count} pairs of size-8 modules over F3: numba {out['numba']:.2f} s, numpy {out['numpy']:.2f} s")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="16,64,128")
    parser.add_argument("--p", type=int, default=3)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--hom-count", type=int, default=60)
    args = parser.parse_args(argv)
    bench_kernels([int(s) for s in args.sizes.split(",")], args.p, args.repeat, args.seed)
    bench_hom(args.hom_count)


if __name__ == "__main__":
    main()
