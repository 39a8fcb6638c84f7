"""Compare the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py
"""

import random
import time

from untangle import kernels


def time_call(fn, repeats=5):
    best = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best.append(time.perf_counter() - t0)
    return result, min(best)


def random_tangle(rng, n):
    pts = set()
    while len(pts) < n:
        pts.add((rng.randrange(-10 * n, 10 * n), rng.randrange(-10 * n, 10 * n)))
    pts = list(pts)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    edges = set()
    while len(edges) < 3 * n - 6:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    return xs, ys, eu, ev


def bench_crossings():
    rng = random.Random(7)
    print("crossing counting (random drawings, 3n-6 edges)")
    print(f"{'n':>5} {'edges':>6} {'python':>12} {'compiled':>12} {'speedup':>8}")
    for n in (30, 60, 120, 200):
        xs, ys, eu, ev = random_tangle(rng, n)
        slow_val, slow = time_call(
            lambda: kernels.count_crossings_ints(xs, ys, eu, ev, force="python"), 3
        )
        if kernels.HAVE_SPEEDUPS:
            fast_val, fast = time_call(
                lambda: kernels.count_crossings_ints(xs, ys, eu, ev, force="speedups")
            )
            assert fast_val == slow_val
            print(f"{n:>5} {len(eu):>6} {slow*1e3:>10.2f}ms {fast*1e3:>10.2f}ms {slow/fast:>7.1f}x")
        else:
            print(f"{n:>5} {len(eu):>6} {slow*1e3:>10.2f}ms {'n/a':>12} {'':>8}")


def bench_xyxy():
    print("\nxyxy-free subset search (block sequences)")
    print(f"{'k':>3} {'s':>3} {'n':>4} {'python':>12} {'compiled':>12} {'speedup':>8}")
    for k, s in ((4, 4), (4, 5), (5, 4), (4, 6), (6, 4)):
        labels = list(range(1, k + 1)) * s
        slow_val, slow = time_call(
            lambda: kernels.max_xyxy_free(labels, force="python"), 3
        )
        if kernels.HAVE_SPEEDUPS:
            fast_val, fast = time_call(lambda: kernels.max_xyxy_free(labels, force="speedups"))
            assert fast_val[0] == slow_val[0]
            print(
                f"{k:>3} {s:>3} {len(labels):>4} {slow*1e3:>10.2f}ms "
                f"{fast*1e3:>10.2f}ms {slow/fast:>7.1f}x"
            )
        else:
            print(f"{k:>3} {s:>3} {len(labels):>4} {slow*1e3:>10.2f}ms {'n/a':>12}")


if __name__ == "__main__":
    print(f"compiled kernels available: {kernels.HAVE_SPEEDUPS}\n")
    bench_crossings()
    bench_xyxy()
