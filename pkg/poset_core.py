#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""poset_core.py

Boxed Young's lattices L(m,n): partitions whose Young diagram fits in the
m x n rectangle, ordered by containment.

Partitions are plain tuples of length m, trailing zeros included, so
(3,2,0) in L(3,n) is written ``(3, 2, 0)``. Python's tuple comparison is
exactly the lexicographic order used by the greedy matcher (the first
differing coordinate decides), so sorting a level needs no key.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

import sympy

from errors import (
    CrossCheckFailure,
    InvalidBox,
    NotWeaklyDecreasing,
    OutOfBox,
    RankOutOfRange,
    WrongLength,
)

log = logging.getLogger(__name__)

Partition = Tuple[int, ...]

_Q = sympy.Symbol("q")


# ------------------------------- Types -------------------------------------

@dataclass(frozen=True)
class BoxShape:
    m: int
    n: int

    def __post_init__(self) -> None:
        for name in ("m", "n"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidBox(f"box {name} must be a positive integer, got {v!r}")

    @property
    def middle_rank(self) -> int:
        return (self.m * self.n) // 2

    @property
    def u_rank(self) -> int:
        """d_{m,n}: top rank of the half lattice."""
        return (self.m * self.n + 1) // 2

    @property
    def top_rank(self) -> int:
        return self.m * self.n

    @property
    def cardinality(self) -> int:
        return math.comb(self.m + self.n, self.m)

    @property
    def bottom(self) -> Partition:
        return (0,) * self.m

    @property
    def top(self) -> Partition:
        return (self.n,) * self.m

    def contains(self, parts: Sequence[int]) -> bool:
        if len(parts) != self.m:
            return False
        if any(p < 0 for p in parts) or (parts and parts[0] > self.n):
            return False
        return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))

    def as_list(self) -> List[int]:
        return [self.m, self.n]


@dataclass(frozen=True)
class RankProfile:
    box: BoxShape
    sizes: Tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.sizes[i]

    def __len__(self) -> int:
        return len(self.sizes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def is_symmetric(self) -> bool:
        return self.sizes == self.sizes[::-1]

    def is_unimodal(self) -> bool:
        mid = self.box.middle_rank
        up = all(self.sizes[i] <= self.sizes[i + 1] for i in range(mid))
        down = all(self.sizes[i] >= self.sizes[i + 1] for i in range(mid, len(self.sizes) - 1))
        return up and down

    @property
    def peak(self) -> int:
        return max(self.sizes)

    @property
    def peak_ranks(self) -> List[int]:
        top = self.peak
        return [i for i, s in enumerate(self.sizes) if s == top]

    def to_json(self) -> List[str]:
        return [str(s) for s in self.sizes]


# ---------------------------- Partitions -----------------------------------

def make_partition(parts: Sequence[int], box: BoxShape) -> Partition:
    lam = tuple(int(p) for p in parts)
    if len(lam) != box.m:
        raise WrongLength(f"partition {lam} has length {len(lam)}, box {box.m}x{box.n} needs {box.m}")
    for i in range(len(lam) - 1):
        if lam[i] < lam[i + 1]:
            raise NotWeaklyDecreasing(
                f"partition {lam} increases at row {i + 2} ({lam[i]} < {lam[i + 1]})"
            )
    if lam and lam[-1] < 0:
        raise OutOfBox(f"partition {lam} has a negative entry")
    if lam and lam[0] > box.n:
        raise OutOfBox(f"partition {lam} has first row {lam[0]} > box width {box.n}")
    return lam


def rank(lam: Sequence[int]) -> int:
    return sum(lam)


def _require_fit(lam: Sequence[int], box: BoxShape) -> None:
    if not box.contains(lam):
        raise OutOfBox(f"{tuple(lam)} does not fit in the {box.m}x{box.n} box")


def dual(lam: Sequence[int], box: BoxShape) -> Partition:
    """Complement in the box: (n - lam_m, ..., n - lam_1)."""
    _require_fit(lam, box)
    return tuple(box.n - p for p in reversed(lam))


def prefix(first: int, lam: Sequence[int]) -> Partition:
    """first (+) lam = (first, lam_1, ..., lam_k)."""
    return (first,) + tuple(lam)


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    return 0


def is_cover(lower: Sequence[int], upper: Sequence[int]) -> bool:
    """upper is lower plus exactly one cell."""
    if len(lower) != len(upper):
        return False
    diff = [u - v for u, v in zip(upper, lower)]
    return sorted(diff) == [0] * (len(diff) - 1) + [1]


def covers(lam: Sequence[int], box: BoxShape) -> List[Partition]:
    _require_fit(lam, box)
    out = []
    for i, p in enumerate(lam):
        if p + 1 > box.n:
            continue
        if i > 0 and lam[i - 1] <= p:
            continue
        out.append(tuple(lam[:i]) + (p + 1,) + tuple(lam[i + 1:]))
    return sorted(out)


def cocovers(lam: Sequence[int], box: BoxShape) -> List[Partition]:
    _require_fit(lam, box)
    out = []
    last = len(lam) - 1
    for i, p in enumerate(lam):
        if p == 0:
            continue
        if i < last and lam[i + 1] >= p:
            continue
        out.append(tuple(lam[:i]) + (p - 1,) + tuple(lam[i + 1:]))
    return sorted(out)


# ------------------------------ Levels -------------------------------------

def _fill(total: int, rows: int, cap: int) -> Iterator[Partition]:
    """Weakly decreasing rows summing to total, each <= cap, ascending lex order."""
    if rows == 0:
        if total == 0:
            yield ()
        return
    lo = -(-total // rows)
    for first in range(lo, min(cap, total) + 1):
        for rest in _fill(total - first, rows - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _level(m: int, n: int, i: int) -> Tuple[Partition, ...]:
    return tuple(_fill(i, m, n))


def enumerate_level(box: BoxShape, i: int) -> List[Partition]:
    if not 0 <= i <= box.top_rank:
        raise RankOutOfRange(f"rank {i} outside 0..{box.top_rank} for box {box.m}x{box.n}")
    return list(_level(box.m, box.n, i))


def enumerate_box(box: BoxShape) -> Iterator[Partition]:
    """Every partition in the box, rank by rank, lex order within a rank."""
    for i in range(box.top_rank + 1):
        yield from _level(box.m, box.n, i)


def gaussian_coefficients(box: BoxShape) -> List[int]:
    """Coefficients of [m+n choose m]_q by exact polynomial division."""
    num = sympy.Poly(1, _Q)
    den = sympy.Poly(1, _Q)
    for i in range(1, box.m + 1):
        num *= sympy.Poly(1 - _Q ** (box.n + i), _Q)
        den *= sympy.Poly(1 - _Q ** i, _Q)
    quotient, remainder = num.div(den)
    if not remainder.is_zero:
        raise CrossCheckFailure(f"q-binomial division left remainder {remainder} for box {box.m}x{box.n}")
    coeffs = [int(c) for c in reversed(quotient.all_coeffs())]
    coeffs += [0] * (box.top_rank + 1 - len(coeffs))
    return coeffs


def rank_profile(box: BoxShape) -> RankProfile:
    counted = [len(_level(box.m, box.n, i)) for i in range(box.top_rank + 1)]
    gauss = gaussian_coefficients(box)
    if counted != gauss:
        raise CrossCheckFailure(
            f"rank profile of {box.m}x{box.n}: enumeration {counted} != Gaussian coefficients {gauss}"
        )
    log.debug("rank profile %sx%s: %s", box.m, box.n, counted)
    return RankProfile(box=box, sizes=tuple(counted))
