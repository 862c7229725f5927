"""Compare the compiled and pure-Python expansion kernels.

Runs the same batch of product and skew expansions through both kernel
implementations (bypassing the memo caches in schurhopf.lr) and reports
best-of-N wall times.  Usage::

    python3 benchmarks/bench_lr.py [--weight 8] [--repeats 3]
"""

import argparse
import time

from schurhopf import _lrkernel_py
from schurhopf.partition import partitions_of

try:
    from schurhopf import _lrkernel
except ImportError:
    _lrkernel = None


def best_of(fn, batch, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in batch:
            fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def report(label, batch, repeats):
    print(f"{label} ({len(batch)} calls)")
    py = best_of(getattr(_lrkernel_py, label), batch, repeats)
    print(f"  python: {py:8.3f}s")
    if _lrkernel is None:
        print("  cython: not built")
        return
    cy = best_of(getattr(_lrkernel, label), batch, repeats)
    print(f"  cython: {cy:8.3f}s")
    print(f"  speedup: {py / cy:.1f}x")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--weight", type=int, default=8,
                    help="weight of each factor shape (default 8)")
    ap.add_argument("--repeats", type=int, default=3,
                    help="take the best of this many passes (default 3)")
    args = ap.parse_args()

    shapes = [tuple(p) for p in partitions_of(args.weight)]
    products = [(a, b) for a in shapes for b in shapes]
    outers = [tuple(p) for p in partitions_of(2 * args.weight)]
    skews = [(o, a) for o in outers for a in shapes]

    if _lrkernel is not None:
        for a, b in products[:20]:
            assert _lrkernel.expand_product(a, b) == _lrkernel_py.expand_product(a, b)

    report("expand_product", products, args.repeats)
    report("expand_skew", skews, args.repeats)


if __name__ == "__main__":
    main()
