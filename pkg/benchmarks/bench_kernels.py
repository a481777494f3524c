"""Compare the compiled and pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import time

from hibicx import build_hat, fixtures
from hibicx.canonical import degree_cap, lower_bounds, _upper_bounds
from hibicx.kernels import available_backends


def workloads():
    segre = build_hat(fixtures.load("segre_3_2"))
    s5 = build_hat(fixtures.load("section5"))
    lx2 = build_hat(fixtures.load("levelex2"))

    def enum(h, n):
        lb, ub = lower_bounds(h, n), _upper_bounds(h, n, degree_cap(h, n))
        return lambda k: k.enumerate_module(h.order, h.up, h.down, n, lb, ub, True)

    def split_all(h, p, e):
        n = p**e - 1
        lb, ub = lower_bounds(h, n), _upper_bounds(h, n, degree_cap(h, n))
        gens = None
        cov_a = [a for a, _ in h.covers_hat]
        cov_b = [b for _, b in h.covers_hat]

        def run(k):
            nonlocal gens
            if gens is None:
                gens = k.enumerate_module(h.order, h.up, h.down, n, lb, ub, True)
            return [k.least_split(g, cov_a, cov_b, p - 1, p - 1, p) for g in gens]

        return run

    return [
        ("enumerate section5 n=24", enum(s5, 24)),
        ("enumerate levelex2 n=6", enum(lx2, 6)),
        ("enumerate segre_3_2 n=120", enum(segre, 120)),
        ("split segre_3_2 p=11 e=2", split_all(segre, 11, 2)),
    ]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = available_backends()
    print(f"{'workload':32s}" + "".join(f"{k.NAME:>12s}" for k in backends) + "   speedup")
    for name, job in workloads():
        times = []
        ref = None
        for k in backends:
            best = float("inf")
            for _ in range(args.repeat):
                t = time.perf_counter()
                out = job(k)
                best = min(best, time.perf_counter() - t)
            if ref is None:
                ref = sorted(out, key=repr)
            elif sorted(out, key=repr) != ref:
                raise SystemExit(f"backends disagree on {name}")
            times.append(best)
        speed = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else ""
        print(f"{name:32s}" + "".join(f"{t:12.4f}" for t in times) + speed)


if __name__ == "__main__":
    main()
