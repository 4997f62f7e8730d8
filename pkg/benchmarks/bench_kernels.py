"""Compare the compiled and pure-Python elimination kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case eliminates the same integer matrix with every available kernel and
reports the best wall time of N runs.
"""
import argparse
import random
import time

from eeespline import _kernels
from eeespline.conformality import assemble_conformality
from eeespline.exact import _integer_rows
from eeespline.extend import extend
from eeespline.fixtures import load_fixture


def conformality_rows(name, d, mu, strategy):
    p = extend(load_fixture(name), strategy).extended
    m = assemble_conformality(p, d, mu).matrix
    return _integer_rows(m.row(i) for i in range(m.rows)), m.cols


def random_rows(n, cols, seed=0):
    rng = random.Random(seed)
    return [[rng.randint(-99, 99) for _ in range(cols)] for _ in range(n)], cols


CASES = {
    "ms crosscut ext, d=3 mu=1": lambda: conformality_rows("ms_symmetric", 3, 1, "crosscut"),
    "ms crosscut ext, d=4 mu=1": lambda: conformality_rows("ms_symmetric", 4, 1, "crosscut"),
    "frame qcc ext, d=5 mu=2": lambda: conformality_rows("frame", 5, 2, "qcc"),
    "random 60x60 integers": lambda: random_rows(60, 60),
}


def best_time(fn, rows, ncols, repeat):
    best = float("inf")
    for _ in range(repeat):
        work = [list(r) for r in rows]
        t = time.perf_counter()
        fn(work, ncols)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    kernels = _kernels.available_kernels()
    names = sorted(kernels)
    print(f"{'case':32s} {'shape':>10s} " + " ".join(f"{n:>10s}" for n in names) + "   speedup")
    for label, build in CASES.items():
        rows, ncols = build()
        times = {n: best_time(kernels[n], rows, ncols, args.repeat) for n in names}
        speed = f"{times['python'] / times['cython']:8.2f}x" if "cython" in times else "       -"
        shape = f"{len(rows)}x{ncols}"
        print(f"{label:32s} {shape:>10s} " + " ".join(f"{times[n]:9.4f}s" for n in names) + "  " + speed)


if __name__ == "__main__":
    main()
