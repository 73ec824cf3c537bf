"""Compiled vs pure-Python Hessenberg QR on the truncated Mathieu operators.

    python benchmarks/bench_hqr.py [--ell 27] [--repeat 20]

Prints per-call timings for both kernels, the speedup, and the largest
eigenvalue disagreement between them (they run the same algorithm, so it
should sit at rounding level).
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from e2qes import _hqr_py
from e2qes.mathieu import Kind, TruncatedOperator

try:
    from e2qes import _hqr_ext
except ImportError:
    _hqr_ext = None


def _time(fn, mats, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for m in mats:
            fn(m, True, 60)
        best = min(best, time.perf_counter() - t0)
    return best / len(mats)


def _sorted(wr, wi):
    w = np.asarray(wr) + 1j * np.asarray(wi)
    return w[np.lexsort((w.imag, w.real))]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ell", type=int, default=27)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    gs = np.linspace(0.5, 400.0, 16)
    mats = [TruncatedOperator(k, args.ell, g).matrix() for k in (Kind.XI, Kind.THETA) for g in gs]
    t_py = _time(_hqr_py.hessenberg_eigvals, mats, args.repeat)
    print(f"matrices: {len(mats)} of size {args.ell}x{args.ell}")
    print(f"python  : {t_py * 1e3:9.3f} ms/call")
    if _hqr_ext is None:
        print("cython  : extension not built (pip install -e . --no-build-isolation)")
        return 0
    t_cy = _time(_hqr_ext.hessenberg_eigvals, mats, args.repeat)
    worst = 0.0
    for m in mats:
        a = _sorted(*_hqr_py.hessenberg_eigvals(m, True, 60)[:2])
        b = _sorted(*_hqr_ext.hessenberg_eigvals(m, True, 60)[:2])
        worst = max(worst, float(np.max(np.abs(a - b) / np.maximum(1.0, np.abs(a)))))
    print(f"cython  : {t_cy * 1e3:9.3f} ms/call")
    print(f"speedup : {t_py / t_cy:9.1f}x")
    print(f"max rel eigenvalue difference: {worst:.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
