#!/usr/bin/env python3
"""Benchmark the numba kernels against the Python/NumPy fallbacks.

Runs the tanh-sinh action sum and the two Numerov sweeps on realistic
problem sizes, plus one full shooting eigenvalue solve per backend.

    python3 benchmarks/benchmark_kernels.py [--repeat N]
"""

import argparse
import math
import time

from abwkb import PowerLaw, ShootingConfig
from abwkb._kernels import NUMBA_IMPLS, PY_IMPLS


def _time(fn, args, repeat):
    fn(*args)  # warm-up (and jit compile)
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


CASES = [
    ("action_sum level 8 (coulomb)", "action_sum", (-0.25, -1.0, -1.0, 4.0, 1.0 / 256.0, 1537)),
    ("action_sum level 10 (nu=-1.5)", "action_sum", (-0.3, -1.0, -1.5, 0.3 ** (-1 / 1.5), 1.0 / 1024.0, 6145)),
    ("numerov_count 100k pts", "numerov_count", (-0.01, -1.0, -1.0, 1.5, 0.01, 0.005, 100_000)),
    ("numerov_match 100k pts", "numerov_match", (-0.01, -1.0, -1.0, 1.5, 0.01, 0.005, 100_000, 20_000)),
]


def run_shoot(backend_impls):
    import abwkb._kernels as kernels
    from abwkb import oracles

    saved = (kernels.action_sum, kernels.numerov_count, kernels.numerov_match)
    kernels.action_sum = backend_impls["action_sum"]
    kernels.numerov_count = backend_impls["numerov_count"]
    kernels.numerov_match = backend_impls["numerov_match"]
    try:
        cfg = ShootingConfig(step=0.005, energy_tol=1e-8)
        t0 = time.perf_counter()
        e = oracles.shoot_eigenvalue(PowerLaw(-1.0, -1.0), 1.5, 0, cfg)
        return time.perf_counter() - t0, e
    finally:
        kernels.action_sum, kernels.numerov_count, kernels.numerov_match = saved


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if NUMBA_IMPLS is None:
        print("numba unavailable or disabled; nothing to compare")
        return

    print(f"{'kernel':36s} {'numpy/python':>14s} {'numba':>12s} {'speedup':>9s}")
    for label, name, call_args in CASES:
        t_py = _time(PY_IMPLS[name], call_args, args.repeat)
        t_nb = _time(NUMBA_IMPLS[name], call_args, args.repeat)
        print(f"{label:36s} {t_py * 1e3:11.2f} ms {t_nb * 1e3:9.3f} ms {t_py / t_nb:8.1f}x")

    t_py, e_py = run_shoot(PY_IMPLS)
    t_nb, e_nb = run_shoot(NUMBA_IMPLS)
    print(
        f"{'shoot_eigenvalue (coulomb, g=1.5)':36s} {t_py * 1e3:11.2f} ms "
        f"{t_nb * 1e3:9.3f} ms {t_py / t_nb:8.1f}x"
    )
    assert abs(e_py - e_nb) < 1e-9, "backends disagree"
    print(f"\nboth backends return E = {e_nb:.10f} (agreement < 1e-9)")


if __name__ == "__main__":
    main()
