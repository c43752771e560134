"""Time the sparse numba kernels against the dense numpy fallback on representative spaces.

    python3 benchmarks/bench_kernels.py [--repeat 200]

Also times one full flow with each backend by toggling ``_kernels.USE_NUMBA``
(the same switch ``LAGORB_DISABLE_NUMBA`` sets at import).
"""
import argparse
import time

import numpy as np

from lagorb import _kernels
from lagorb.classification import build_representation
from lagorb.momentmap import kempf_ness_flow

CASES = [(8, None, "SU(7) on Λ3, dim 35"), (9, None, "SU(8) on Λ3, dim 56"), (18, None, "Spin(14) half-spin, dim 64")]


def _time(fn, repeat):
    fn()  # warm-up (and JIT compile)
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t0) / repeat


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--skip-flow", action="store_true")
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        print("numba not importable; only the numpy path can be timed")
        return
    rng = np.random.default_rng(0)
    print(f"{'case':32s} {'kernel':16s} {'numpy us':>10s} {'numba us':>10s} {'speedup':>8s}")
    for row, n, label in CASES:
        op = build_representation(row, n).operator
        dim = op.mats.shape[1]
        v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        v /= np.linalg.norm(v)
        c = rng.normal(size=op.d)
        for name, fnp, nargs, fnb, bargs in (
            ("moment_coeffs", _kernels.numpy_moment_coeffs, (op.mats, v),
             _kernels.numba_moment_coeffs, (*op.coo, op.d, v)),
            ("weighted_apply", _kernels.numpy_weighted_apply, (op.mats, c, v),
             _kernels.numba_weighted_apply, (*op.coo, c, v)),
            ("action_columns", _kernels.numpy_action_columns, (op.mats, v),
             _kernels.numba_action_columns, (*op.coo, op.d, v)),
        ):
            assert np.allclose(fnp(*nargs), fnb(*bargs), atol=1e-12)
            tp = _time(lambda: fnp(*nargs), args.repeat) * 1e6
            tb = _time(lambda: fnb(*bargs), args.repeat) * 1e6
            print(f"{label:32s} {name:16s} {tp:10.1f} {tb:10.1f} {tp / tb:8.2f}")
    if args.skip_flow:
        return
    print()
    rep = build_representation(18)
    saved = _kernels.USE_NUMBA
    try:
        for flag in (False, True):
            _kernels.USE_NUMBA = flag
            kempf_ness_flow(rep, seed=1, tol=1e-6)  # warm-up
            t0 = time.perf_counter()
            for _ in range(5):
                res = kempf_ness_flow(rep, seed=0, tol=1e-12)
            dt = (time.perf_counter() - t0) / 5
            print(f"flow Spin(14), backend={'numba' if flag else 'numpy':5s}: {res.iterations} steps, "
                  f"|mu|={res.final_norm:.2e}, {dt:.2f} s")
    finally:
        _kernels.USE_NUMBA = saved


if __name__ == "__main__":
    main()
