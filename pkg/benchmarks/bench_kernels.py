"""Time the compiled and pure-Python kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import importlib
import time

from dikroma import _backend
from dikroma.digraph import random_digraph


def workloads():
    dense = [list(random_digraph(9, p, f"bench:{p}:{i}").out)
             for p in (0.3, 0.5, 0.7) for i in range(40)]
    mid = [list(random_digraph(12, 0.5, f"bench12:{i}").out) for i in range(10)]
    return {
        "exhaustive n=4 (4096 digraphs)": lambda k: k.exhaustive_params(4, 0, 4096, True),
        "exhaustive n=5 slice (16384)": lambda k: k.exhaustive_params(5, 0, 16384, True),
        "batch params n=9 (120)": lambda k: k.batch_params(9, dense, True),
        "digrundy spectrum n=12 (10)": lambda k: [k.digrundy_spectrum(12, o, 0.0) for o in mid],
        "diochromatic n=6 (40)": lambda k: [k.diochromatic(6, list(random_digraph(
            6, 0.5, f"dco:{i}").out), 0.0) for i in range(40)],
    }


def best_of(fn, kern, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(kern)
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = _backend.available()
    kerns = {name: importlib.import_module(_backend._MODULES[name]) for name in names}
    print(f"{'workload':34}" + "".join(f"{n:>12}" for n in names) + "     speedup")
    for label, fn in workloads().items():
        secs = {n: best_of(fn, k, args.repeat) for n, k in kerns.items()}
        row = f"{label:34}" + "".join(f"{secs[n]:11.3f}s" for n in names)
        if len(secs) == 2:
            row += f"  {secs['python'] / secs['cython']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
