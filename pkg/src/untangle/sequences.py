"""Circular block sequences and the forbidden-alternation machinery.

A circular sequence is a finite label list considered up to rotation. The
forbidden pattern is a 4-term subsequence x y x y with x != y, read
circularly: the sequence contains it iff some rotation contains it as an
ordinary (not necessarily contiguous) subsequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import kernels
from .errors import CapacityError, ValidationError

EXHAUSTIVE_CAP = 24


@dataclass(frozen=True)
class CircularSequence:
    """Label sequence with rotation-invariant equality and hashing."""

    labels: tuple[int, ...]

    def __init__(self, labels: Iterable[int]):
        object.__setattr__(self, "labels", tuple(int(t) for t in labels))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def rotate(self, r: int) -> "CircularSequence":
        n = len(self.labels)
        if n == 0:
            return self
        r %= n
        return CircularSequence(self.labels[r:] + self.labels[:r])

    def canonical(self) -> tuple[int, ...]:
        """Lexicographically smallest rotation (the equality representative)."""
        n = len(self.labels)
        if n == 0:
            return ()
        doubled = self.labels + self.labels
        return min(doubled[i:i + n] for i in range(n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CircularSequence):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __repr__(self) -> str:
        return "CircularSequence(%s)" % " ".join(map(str, self.labels))


@dataclass(frozen=True)
class BlockParams:
    """Parameters of the block sequence: alphabet size k, block count s."""

    k: int
    s: int

    def __post_init__(self):
        if self.k < 1 or self.s < 1:
            raise ValidationError("block sequence needs k >= 1 and s >= 1")


def make_block_sequence(k: int, s: int) -> CircularSequence:
    """s successive blocks 1 2 ... k (length k*s)."""
    p = BlockParams(k, s)
    return CircularSequence(tuple(range(1, p.k + 1)) * p.s)


def contains_xyxy(seq: CircularSequence) -> bool:
    """True iff some rotation of seq contains a subsequence x y x y, x != y."""
    return kernels.circular_has_xyxy(seq.labels)


@dataclass(frozen=True)
class XyxyFreeMax:
    """Exhaustive-search result: the extremal length plus one witness."""

    length: int
    witness_positions: tuple[int, ...]
    witness: CircularSequence = field(compare=False)


def max_xyxy_free_length(seq: CircularSequence, cap: int = EXHAUSTIVE_CAP,
                         force_backend: str | None = None) -> XyxyFreeMax:
    """Length of the longest circular subsequence with contains_xyxy false.

    Exhaustive subset enumeration with pruning; sequences longer than `cap`
    are rejected rather than silently approximated. This is the brute-force
    oracle the certified bounds are checked against, so it must stay
    independent of any closed-form bound.
    """
    if len(seq) > cap:
        raise CapacityError(
            f"sequence length {len(seq)} exceeds the exhaustive cap {cap}"
        )
    length, positions = kernels.max_xyxy_free(seq.labels, force=force_backend)
    witness = CircularSequence(seq.labels[i] for i in positions)
    return XyxyFreeMax(length, positions, witness)


def verify_circle_lemma(k: int, s: int, cap: int = EXHAUSTIVE_CAP) -> bool:
    """Check by brute force that every xyxy-free circular subsequence of the
    block sequence on (k, s) is shorter than k + s."""
    seq = make_block_sequence(k, s)
    return max_xyxy_free_length(seq, cap=cap).length < k + s


@dataclass(frozen=True)
class LemmaRow:
    k: int
    s: int
    n: int
    max_free_length: int
    bound: int  # k + s
    passed: bool


def lemma_table(kmax: int, smax: int, cap: int = EXHAUSTIVE_CAP) -> list[LemmaRow]:
    """verify_circle_lemma over the full (k, s) grid that fits under the cap."""
    if kmax < 1 or smax < 1:
        raise ValidationError("kmax and smax must be >= 1")
    rows = []
    for k in range(1, kmax + 1):
        for s in range(1, smax + 1):
            if k * s > cap:
                continue
            res = max_xyxy_free_length(make_block_sequence(k, s), cap=cap)
            rows.append(LemmaRow(k, s, k * s, res.length, k + s, res.length < k + s))
    return rows
