"""Rank cardinality vectors and their partial order.

A vector is written top-first, ``(x_a, ..., x_1)``: the first entry counts the
vertices of highest corner rank, the last entry counts the rank-1 vertices.
``x(k)`` reads the entry for rank ``k`` (1-based from the bottom).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "RankVector",
    "parse_vector",
    "is_augmentation",
    "initial_segment",
    "is_extension",
    "standard_extension",
    "leq",
    "predecessors",
    "compositions",
    "candidate_vectors",
]


@dataclass(frozen=True)
class RankVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if not entries:
            raise ValueError("a rank vector has at least one entry")
        if any(e < 1 for e in entries):
            raise ValueError(f"rank vector entries must be positive: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *entries: int) -> "RankVector":
        return cls(tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def x(self, k: int) -> int:
        """Number of vertices of rank ``k``."""
        if not 1 <= k <= len(self.entries):
            raise IndexError(f"rank {k} outside 1..{len(self.entries)}")
        return self.entries[len(self.entries) - k]

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def sort_key(self) -> tuple:
        """Deterministic output order: by length, then entries."""
        return (len(self.entries), self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


_VEC = re.compile(r"^\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*$")


def parse_vector(text: str) -> RankVector:
    """Parse the parenthesised syntax ``(a,b,...)``."""
    m = _VEC.match(text)
    if not m:
        raise ValueError(f"not a vector: {text!r}")
    return RankVector(tuple(int(t) for t in m.group(1).split(",")))


def _vec(x) -> RankVector:
    if isinstance(x, RankVector):
        return x
    if isinstance(x, str):
        return parse_vector(x)
    return RankVector(tuple(x))


def is_augmentation(y, x) -> bool:
    """True iff ``y`` has the length of ``x`` and dominates it entrywise."""
    x, y = _vec(x), _vec(y)
    return len(x) == len(y) and all(a <= b for a, b in zip(x, y))


def initial_segment(x, k: int) -> RankVector:
    """``(x_a, ..., x_k)``: drop the entries for ranks below ``k``."""
    x = _vec(x)
    if not 1 <= k <= len(x):
        raise ValueError(f"k={k} outside 1..{len(x)}")
    return RankVector(x.entries[: len(x) - k + 1])


def is_extension(y, x) -> bool:
    """True iff ``y`` starts with all of ``x`` (trivial case included)."""
    x, y = _vec(x), _vec(y)
    return len(y) >= len(x) and y.entries[: len(x)] == x.entries


def standard_extension(x, l: int) -> RankVector:
    """Append ``l`` copies of the last entry."""
    x = _vec(x)
    if l < 0:
        raise ValueError("extension length must be non-negative")
    return RankVector(x.entries + (x.entries[-1],) * l)


def leq(x, y) -> bool:
    """The order on vectors: ``y`` augments some standard extension of ``x``."""
    x, y = _vec(x), _vec(y)
    if len(y) < len(x):
        return False
    last = x.entries[-1]
    for p, b in enumerate(y.entries):
        a = x.entries[p] if p < len(x) else last
        if b < a:
            return False
    return True


def predecessors(x, min_len: int = 1) -> set[RankVector]:
    """All ``y`` with ``leq(y, x)`` and ``len(y) >= min_len``."""
    x = _vec(x)
    if min_len < 1:
        raise ValueError("min_len must be at least 1")
    out = set()
    for m in range(min_len, len(x) + 1):
        bounds = list(x.entries[: m - 1]) + [min(x.entries[m - 1:])]
        for ys in itertools.product(*(range(1, b + 1) for b in bounds)):
            out.add(RankVector(ys))
    return out


def compositions(n: int, length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to ``n``."""
    if n < 1:
        return
    lengths = range(1, n + 1) if length is None else [length]
    for k in lengths:
        if not 1 <= k <= n:
            continue
        for cuts in itertools.combinations(range(1, n), k - 1):
            bounds = (0,) + cuts + (n,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(k))


def candidate_vectors(n: int, min_len: int = 1) -> set[RankVector]:
    """Vectors of sum ``n`` and length >= ``min_len`` whose second and third
    entries are at least 2 (checked only when the length is 3 or more)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = set()
    for c in compositions(n):
        if len(c) < min_len:
            continue
        if len(c) >= 3 and (c[1] < 2 or c[2] < 2):
            continue
        out.add(RankVector(c))
    return out


def sorted_vectors(vectors: Iterable[RankVector]) -> list[RankVector]:
    return sorted(vectors, key=lambda v: v.sort_key)
