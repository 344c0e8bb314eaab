#!/usr/bin/env python3
"""Benchmark the int64 kernel lanes (numba @njit vs pure numpy).

Both lanes are always importable; the package selects one at import time via
CHARFACTOR_NUMBA.  This script times the three kernels on both lanes at a few
sizes, cross-checks that they return identical results, and reports a
workload-level comparison (a full identity verification) per lane.

Usage:
    python benchmarks/bench_kernels.py [--order N] [--repeat K]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from charfactor import _kernels


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _inputs(order: int, seed: int = 3):
    rng = np.random.default_rng(seed)
    a = rng.integers(-40, 40, size=order + 1).astype(np.int64)
    b = rng.integers(-40, 40, size=order + 1).astype(np.int64)
    unit = np.zeros(order + 1, np.int64)
    unit[0] = 1
    nz = rng.choice(order, size=max(2, order // 8), replace=False) + 1
    unit[nz] = rng.choice(np.array([1, -1], np.int64), size=len(nz))
    shifts = rng.integers(1, max(2, order // 12), size=3 * order // 4 or 1).astype(np.int64)
    signs = rng.choice(np.array([1, -1], np.int64), size=len(shifts))
    return a, b, unit, shifts, signs


def bench_kernels(order: int, repeat: int) -> None:
    lanes = {"numpy": _kernels.NUMPY_LANE}
    if _kernels.HAVE_NUMBA:
        lanes["numba"] = _kernels.NUMBA_LANE
    else:
        print("numba unavailable; timing the numpy lane only")
    a, b, unit, shifts, signs = _inputs(order)
    n_out = order + 1

    results: dict[tuple[str, str], float] = {}
    outputs: dict[tuple[str, str], np.ndarray] = {}
    for name, lane in lanes.items():
        # warm up (JIT compilation for the numba lane)
        lane["convolve"](a[:4], b[:4], 4)
        lane["invert_unit"](unit[:4], 4)
        lane["binomial_product"](shifts[:2], signs[:2], 8)

        results[(name, "convolve")] = _time(lambda: lane["convolve"](a, b, n_out), repeat)
        outputs[(name, "convolve")] = lane["convolve"](a, b, n_out)
        results[(name, "invert_unit")] = _time(lambda: lane["invert_unit"](unit, n_out), repeat)
        outputs[(name, "invert_unit")] = lane["invert_unit"](unit, n_out)[0]
        results[(name, "binomial_product")] = _time(
            lambda: lane["binomial_product"](shifts, signs, n_out), repeat
        )
        outputs[(name, "binomial_product")] = lane["binomial_product"](shifts, signs, n_out)[0]

    print(f"\nkernel timings at order {order} (best of {repeat}):")
    print(f"{'kernel':<18} " + " ".join(f"{name:>12}" for name in lanes))
    for kernel in ("convolve", "invert_unit", "binomial_product"):
        row = [f"{results[(name, kernel)] * 1e3:>10.3f}ms" for name in lanes]
        print(f"{kernel:<18} " + " ".join(row))
        if len(lanes) == 2:
            assert np.array_equal(outputs[("numpy", kernel)], outputs[("numba", kernel)]), kernel
    if len(lanes) == 2:
        print("lane outputs identical: yes")
        for kernel in ("convolve", "invert_unit", "binomial_product"):
            speed = results[("numpy", kernel)] / results[("numba", kernel)]
            print(f"  {kernel}: numba is {speed:.1f}x vs numpy")


def bench_workload(repeat: int) -> None:
    from charfactor.params import Scheme, validate
    from charfactor.series import euler_product, inverse_euler_power, partition_series
    from charfactor.verifier import IdentityKind, verify

    fp = validate(Scheme.TRIPLE, 2, 9, 3, 1, 1, 1)

    def job():
        euler_product.cache_clear()
        partition_series.cache_clear()
        inverse_euler_power.cache_clear()
        cert = verify(IdentityKind.MAIN, fp, 400)
        assert cert.match

    print(f"\nworkload: verify the (2,9) identity at order 400, cold caches "
          f"(active lane: {_kernels.LANE})")
    print(f"  best of {repeat}: {_time(job, repeat) * 1e3:.1f} ms")
    print("  rerun with CHARFACTOR_NUMBA=0 to time the numpy lane end to end")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--order", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    bench_kernels(args.order, args.repeat)
    bench_workload(args.repeat)


if __name__ == "__main__":
    main()
