"""Shared test fixtures-in-spirit: tiny graphs and the independent
pattern-checking oracle used to freeze expected sequence values.

The naive checkers here deliberately use a different algorithm (explicit
rotations + 4-subset enumeration) from the production run-counting kernels,
so the two routes cross-validate each other.
"""

from itertools import combinations

from untangle.graph import PlanarGraph


def complete_graph(n: int) -> PlanarGraph:
    return PlanarGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> PlanarGraph:
    return PlanarGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def naive_linear_contains_xyxy(labels) -> bool:
    n = len(labels)
    for combo in combinations(range(n), 4):
        a, b, c, d = (labels[i] for i in combo)
        if a == c and b == d and a != b:
            return True
    return False


def naive_circular_contains_xyxy(labels) -> bool:
    labels = list(labels)
    n = len(labels)
    if n < 4:
        return False
    return any(
        naive_linear_contains_xyxy(labels[r:] + labels[:r]) for r in range(n)
    )


def naive_max_xyxy_free(labels) -> int:
    """Reference extremal length by plain subset enumeration."""
    labels = list(labels)
    n = len(labels)
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            if not naive_circular_contains_xyxy([labels[i] for i in subset]):
                return size
    return 0
