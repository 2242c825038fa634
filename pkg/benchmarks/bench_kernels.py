"""Compare the numba and numpy backends of the hot kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel is run once to warm up (numba compiles on first call), then
timed; outputs of the two backends are asserted identical.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from redvar import exterior, kernels
from redvar._accel import ENABLE_NUMBA


def _time(fn, repeat: int) -> float:
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    pts = exterior.t4_sample_points(640)
    lattice = exterior.lattice_points()[:4000]
    V = kernels.t4_eval_batch(pts, "numpy")
    rng = np.random.default_rng(0)
    a = rng.integers(-50, 50, size=(300, 455))
    b = rng.integers(-50, 50, size=(455, 300))
    p_big, p_small = kernels.BIG_PRIMES[0], kernels.SMALL_PRIMES[0]
    yield "t4_eval_batch (640 pts)", lambda be: kernels.t4_eval_batch(pts, be)
    yield "t4_eval_batch (4000 lattice pts)", lambda be: kernels.t4_eval_batch(lattice, be)
    yield "rank_mod_p (640 x 455)", lambda be: kernels.rank_mod_p(V, p_big, be)
    yield "matmul_mod_p (300x455x300)", lambda be: kernels.matmul_mod_p(a, b, p_small, be)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = ["numpy"] + (["numba"] if ENABLE_NUMBA else [])
    print(f"{'kernel':<34}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in cases():
        outs = {be: fn(be) for be in backends}
        if len(backends) == 2:
            x, y = outs["numpy"], outs["numba"]
            assert np.array_equal(np.asarray(x, dtype=object), np.asarray(y, dtype=object)), name
        times = {be: _time(lambda be=be: fn(be), args.repeat) for be in backends}
        row = f"{name:<34}" + "".join(f"{times[be] * 1e3:>10.1f}ms" for be in backends)
        if len(backends) == 2:
            row += f"{times['numpy'] / times['numba']:>11.1f}x"
        print(row)
    if not ENABLE_NUMBA:
        print("numba disabled (REDVAR_NO_NUMBA set or numba missing): numpy timings only")


if __name__ == "__main__":
    main()
