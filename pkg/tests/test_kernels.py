"""Compiled and pure kernels must agree everywhere, and the dispatcher must
route oversized coordinates to the big-int path."""

import random

import pytest

from helpers import naive_circular_contains_xyxy, naive_max_xyxy_free
from untangle import _pykernels, kernels


def _random_drawing(rng, n, span):
    pts = set()
    while len(pts) < n:
        pts.add((rng.randrange(-span, span), rng.randrange(-span, span)))
    pts = list(pts)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return xs, ys


def _random_edges(rng, n, m):
    edges = set()
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    return eu, ev


requires_speedups = pytest.mark.skipif(
    not kernels.HAVE_SPEEDUPS, reason="compiled extension not built"
)


@requires_speedups
def test_crossing_counts_agree_on_random_drawings():
    rng = random.Random(20240901)
    for trial in range(60):
        n = rng.randrange(4, 14)
        xs, ys = _random_drawing(rng, n, 12)  # small span forces degeneracies
        eu, ev = _random_edges(rng, n, min(2 * n, n * (n - 1) // 2))
        fast = kernels.count_crossings_ints(xs, ys, eu, ev, force="speedups")
        slow = kernels.count_crossings_ints(xs, ys, eu, ev, force="python")
        assert fast == slow, (xs, ys, eu, ev)


@requires_speedups
def test_crossing_counts_agree_near_collinear():
    # grid points create many exactly-collinear configurations
    rng = random.Random(7)
    for trial in range(40):
        n = rng.randrange(4, 10)
        xs = [rng.randrange(0, 4) for _ in range(n)]
        ys = [rng.randrange(0, 4) for _ in range(n)]
        # allow coincident points here: kernels do not require injectivity
        eu, ev = _random_edges(rng, n, min(2 * n, n * (n - 1) // 2))
        fast = kernels.count_crossings_ints(xs, ys, eu, ev, force="speedups")
        slow = kernels.count_crossings_ints(xs, ys, eu, ev, force="python")
        assert fast == slow


def test_dispatch_falls_back_on_huge_coordinates():
    big = 1 << 200
    xs = [0, big, big, 0]
    ys = [0, big, 0, big]
    eu = [0, 2]
    ev = [1, 3]
    assert kernels.crossing_backend(xs, ys) == "python"
    assert kernels.count_crossings_ints(xs, ys, eu, ev) == 1


@requires_speedups
def test_dispatch_uses_speedups_for_small_coordinates():
    xs = [0, 5, 5, 0]
    ys = [0, 5, 0, 5]
    assert kernels.crossing_backend(xs, ys) == "speedups"


def test_xyxy_helpers_match_naive_enumeration():
    rng = random.Random(99)
    for trial in range(300):
        n = rng.randrange(0, 9)
        labels = [rng.randrange(1, 4) for _ in range(n)]
        assert kernels.circular_has_xyxy(labels) == naive_circular_contains_xyxy(labels)
        assert _pykernels.linear_has_xyxy(labels) == _naive_linear(labels)


def _naive_linear(labels):
    from itertools import combinations

    for combo in combinations(range(len(labels)), 4):
        a, b, c, d = (labels[i] for i in combo)
        if a == c and b == d and a != b:
            return True
    return False


def test_max_xyxy_free_matches_naive_enumeration():
    rng = random.Random(1234)
    for trial in range(120):
        n = rng.randrange(0, 9)
        labels = [rng.randrange(1, 4) for _ in range(n)]
        expected = naive_max_xyxy_free(labels)
        got_py, wit_py = kernels.max_xyxy_free(labels, force="python")
        assert got_py == expected, labels
        if kernels.HAVE_SPEEDUPS:
            got_c, wit_c = kernels.max_xyxy_free(labels, force="speedups")
            assert got_c == expected
            assert wit_py == wit_c


@requires_speedups
def test_max_xyxy_free_backends_agree_on_block_sequences():
    for k in range(1, 5):
        for s in range(1, 5):
            labels = list(range(1, k + 1)) * s
            if len(labels) > 24:
                continue
            assert kernels.max_xyxy_free(labels, force="python") == kernels.max_xyxy_free(
                labels, force="speedups"
            )


def test_crossings_involving_decomposition():
    # moving vertex v changes exactly the crossings_involving(v) share
    rng = random.Random(5)
    for trial in range(40):
        n = rng.randrange(4, 10)
        xs, ys = _random_drawing(rng, n, 15)
        eu, ev = _random_edges(rng, n, min(2 * n, n * (n - 1) // 2))
        total = _pykernels.count_crossings(xs, ys, eu, ev)
        v = rng.randrange(n)
        inv = _pykernels.crossings_involving(xs, ys, eu, ev, v)
        xs2 = list(xs)
        ys2 = list(ys)
        while True:
            cand = (rng.randrange(-15, 15), rng.randrange(-15, 15))
            if cand not in set(zip(xs2, ys2)):
                xs2[v], ys2[v] = cand
                break
        inv2 = _pykernels.crossings_involving(xs2, ys2, eu, ev, v)
        total2 = _pykernels.count_crossings(xs2, ys2, eu, ev)
        assert total - inv + inv2 == total2
