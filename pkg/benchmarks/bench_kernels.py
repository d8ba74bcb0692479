#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Both implementations are imported side by side (the package-level backend
selection is bypassed), so a single run produces a comparison table.
Workloads mirror the places the kernels are actually hot: exact rank
computations inside the Wedderburn oracle, the exhaustive associativity
scan at algebra construction, and the GL4(2) Singer-normalizer sweep.
"""

import random
import time

import numpy as np

from bismash._kernels import _pyref

try:
    from bismash._kernels import _core
except ImportError:
    _core = None


def timeit(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_rref():
    rng = random.Random(0)
    p = 241
    mat = np.array(
        [[rng.randrange(p) for _ in range(200)] for _ in range(200)],
        dtype=np.int64,
    )
    return "rref_mod 200x200 mod 241", [
        (lambda backend: lambda: backend.rref_mod(mat.copy(), p))(b)
        for b in (_pyref, _core)
        if b is not None
    ]


def bench_table_assoc():
    from bismash.bismash import build_algebra, factorize
    from bismash.lingrp import build_pgl2

    pkg = build_pgl2(5)
    fg = factorize(pkg.G, pkg.C, pkg.S)
    table = build_algebra(fg).table  # dim 120, monomial
    return "assoc scan bismash PGL2(5) dim 120", [
        (lambda backend: lambda: backend.table_assoc_violation(table))(b)
        for b in (_pyref, _core)
        if b is not None
    ]


def bench_sparse_assoc():
    from bismash.bismash import group_algebra
    from bismash.families import symmetric_group

    alg = group_algebra(symmetric_group(4), 13, check=False)
    ptr, idx, coef = alg._csr()
    return "sparse assoc scan kS4 dim 24", [
        (lambda backend: lambda: backend.sparse_assoc_violation(
            ptr, idx, coef, alg.dim, 13))(b)
        for b in (_pyref, _core)
        if b is not None
    ]


def bench_conjugate():
    from bismash.lingrp import build_gln2

    pkg = build_gln2(4)
    elems = np.array([g.images for g in pkg.G.elements()], dtype=np.int32)
    target = np.array(pkg.singer_generator.images, dtype=np.int32)
    return "conjugate_rows GL4(2) 20160x15", [
        (lambda backend: lambda: backend.conjugate_rows(elems, target))(b)
        for b in (_pyref, _core)
        if b is not None
    ]


def main():
    benches = [bench_rref(), bench_table_assoc(), bench_sparse_assoc(),
               bench_conjugate()]
    names = ["python"] + (["cython"] if _core is not None else [])
    header = f"{'workload':38s}" + "".join(f"{n:>12s}" for n in names)
    if _core is not None:
        header += f"{'speedup':>10s}"
    print(header)
    print("-" * len(header))
    for label, fns in benches:
        times = [timeit(fn) for fn in fns]
        row = f"{label:38s}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)
    if _core is None:
        print("\ncompiled backend unavailable; showing the fallback only")


if __name__ == "__main__":
    main()
