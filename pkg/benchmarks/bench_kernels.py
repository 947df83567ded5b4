"""Time the compiled kernels against the numpy fallback on the same tables.

    python3 benchmarks/bench_kernels.py [ring ...]
"""

import sys
import time

import numpy as np

from bcinv import _kernels_py, build_ring
from bcinv.kernels import tables_for

try:
    from bcinv import _kernels
except ImportError:
    _kernels = None

RINGS = ["zmod:64", "mat:2:zmod:3", "prod:(zmod:4;zmod:12)"]


def best_of(fn, repeat=3):
    out = None
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def bench(spec):
    ring = build_ring(spec)
    mul = tables_for(ring).mul_table
    rows = []
    impls = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])
    for name in ("left_ideal_matrix", "right_ann_subset", "least_yab_eq_b", "least_cay_eq_c"):
        results = {}
        for label, impl in impls:
            fn = getattr(impl, name)
            if name.startswith("least"):
                mask = impl.left_ideal_matrix(mul).astype(bool).T
                results[label] = best_of(lambda: fn(mul, mask))
            else:
                results[label] = best_of(lambda: fn(mul))
        outs = [np.asarray(r[1]).astype(np.int64) for r in results.values()]
        same = all(np.array_equal(o, outs[0]) for o in outs)
        rows.append((spec, name, results, same))
    return rows


def main(argv):
    specs = argv or RINGS
    print(f"{'ring':24} {'kernel':18} {'python ms':>10} {'cython ms':>10} {'speedup':>8} agree")
    for spec in specs:
        for spec_, name, res, same in bench(spec):
            py = res["python"][0] * 1e3
            cy = res["cython"][0] * 1e3 if "cython" in res else float("nan")
            print(f"{spec_:24} {name:18} {py:10.2f} {cy:10.2f} {py / cy:8.1f} {same}")


if __name__ == "__main__":
    main(sys.argv[1:])
