#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""order_matching_l3.py

The explicit order matching phi of L(3,n).

Starting set S_{3,n} = {(4k+l, 2k, 0) : l != 1, 4k+l <= n, 6k+l <= 3n/2}
and end set E_{3,n} = duals of S_{3,n}. phi maps L(3,n) minus E_{3,n}
bijectively onto L(3,n) minus S_{3,n}, adding one cell each time; the row
that grows is decided by the F-class of the partition:

    F1   lam in E_{3,lam1}                                   -> row 1
    F2e  lam2+lam3 even, (lam1-1, lam2+1, lam3) not in E     -> row 2
    F2o  lam2+lam3 odd,  (lam1-1, lam2, lam3+1) in E         -> row 2
    F3o  lam2+lam3 odd,  (lam1-1, lam2, lam3+1) not in E     -> row 3

The fifth combination (even sum, neighbour in E) never happens.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from errors import ExhaustiveCaseViolation, NotInDomain, NotInRange
from poset_core import BoxShape, Partition, dual, enumerate_box, make_partition

log = logging.getLogger(__name__)


class FClass(enum.Enum):
    F1 = "F1"
    F2E = "F2e"
    F2O = "F2o"
    F3O = "F3o"

    @property
    def row(self) -> int:
        """1-based row that phi increments."""
        return {"F1": 1, "F2e": 2, "F2o": 2, "F3o": 3}[self.value]


@dataclass(frozen=True)
class BoundarySets:
    n: int
    starts: FrozenSet[Partition]
    ends: FrozenSet[Partition]

    def sorted_starts(self) -> List[Partition]:
        return sorted(self.starts)

    def sorted_ends(self) -> List[Partition]:
        return sorted(self.ends)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "starts": [list(p) for p in self.sorted_starts()],
            "ends": [list(p) for p in self.sorted_ends()],
        }


def box3(n: int) -> BoxShape:
    return BoxShape(3, n)


# ------------------------------ E membership --------------------------------

def in_E3(triple: Sequence[int], width: int) -> bool:
    """Membership in E_{3,width}; non-partitions are never members."""
    if len(triple) != 3:
        return False
    a, b, c = triple
    if not (a >= b >= c >= 0):
        return False
    if a != width:
        return False
    if (a - b) % 2:
        return False
    v = 2 * b - a - c
    return v >= 0 and v != 1


def _in_E_own(triple: Sequence[int]) -> bool:
    return in_E3(triple, triple[0])


def boundary_sets(n: int) -> BoundarySets:
    box = box3(n)
    starts = set()
    for k in range(n // 4 + 1):
        for ell in range(n - 4 * k + 1):
            if ell == 1:
                continue
            # 6k+l <= 3n/2, doubled to stay in integers
            if 2 * (6 * k + ell) > 3 * n:
                continue
            starts.add((4 * k + ell, 2 * k, 0))
    ends = {dual(s, box) for s in starts}
    return BoundarySets(n=n, starts=frozenset(starts), ends=frozenset(ends))


def is_start(lam: Sequence[int], n: int) -> bool:
    if len(lam) != 3 or not box3(n).contains(lam):
        return False
    a, b, c = lam
    if c != 0 or b % 2:
        return False
    k = b // 2
    ell = a - 4 * k
    return ell >= 0 and ell != 1 and 2 * (6 * k + ell) <= 3 * n


def is_end(lam: Sequence[int], n: int) -> bool:
    return box3(n).contains(lam) and in_E3(lam, n)


# ------------------------------- phi ---------------------------------------

def f_classify(lam: Sequence[int]) -> FClass:
    a, b, c = lam
    if _in_E_own(lam):
        return FClass.F1
    if (b + c) % 2 == 0:
        if not in_E3((a - 1, b + 1, c), a - 1):
            return FClass.F2E
        raise ExhaustiveCaseViolation(
            f"{tuple(lam)}: even lam2+lam3 with (lam1-1, lam2+1, lam3) in E_(3,lam1-1)"
        )
    if in_E3((a - 1, b, c + 1), a - 1):
        return FClass.F2O
    return FClass.F3O


def _grow(lam: Sequence[int], row: int) -> Partition:
    out = list(lam)
    out[row - 1] += 1
    return tuple(out)


def phi(lam: Sequence[int], n: int) -> Partition:
    lam = make_partition(lam, box3(n))
    if in_E3(lam, n):
        raise NotInDomain(f"{lam} lies in E_(3,{n}); phi is undefined there")
    return _grow(lam, f_classify(lam).row)


def phi_inverse(mu: Sequence[int], n: int) -> Partition:
    box = box3(n)
    mu = make_partition(mu, box)
    if is_start(mu, n):
        raise NotInRange(f"{mu} lies in S_(3,{n}); it has no phi preimage")
    return dual(phi(dual(mu, box), n), box)


def star_phi(lam: Sequence[int], n: int) -> Partition:
    """lam -> phi(lam)*, an involution of L(3,n) minus E_{3,n}."""
    return dual(phi(lam, n), box3(n))


def phi_trace(lam: Sequence[int], n: int) -> List[Partition]:
    """lam, phi(lam), phi^2(lam), ... up to the first element of E_{3,n}."""
    out = [make_partition(lam, box3(n))]
    while True:
        try:
            out.append(phi(out[-1], n))
        except NotInDomain:
            return out


def phi_table(n: int) -> Dict[Partition, Partition]:
    table = {}
    for lam in enumerate_box(box3(n)):
        if not in_E3(lam, n):
            table[lam] = phi(lam, n)
    return table


# ------------------------------ Facts ---------------------------------------

LEMMA_EXPECTED: Dict[str, FrozenSet[FClass]] = {
    "A1": frozenset({FClass.F1}),
    "A2": frozenset({FClass.F2E}),
    "A3": frozenset({FClass.F3O}),
    "B2": frozenset({FClass.F2E}),
    "B3": frozenset({FClass.F3O}),
    "C1": frozenset({FClass.F1}),
    "C2": frozenset({FClass.F2E, FClass.F2O}),
}


def lemma_family_members(n: int) -> Iterator[Tuple[str, Partition]]:
    """Members of the seven families of the chain lemma with lam1 <= n."""
    for k in range(n + 1):
        for c in range(n + 1):
            yield "A1", (4 * k + c, 2 * k + c, c)
            if k >= 1:
                yield "A2", (4 * k + c + 1, 2 * k + c, c)
                yield "A3", (4 * k + c + 1, 2 * k + c + 1, c)
            for ell in range(2, n + 1):
                if 1 <= c <= ell - 2:
                    yield "B2", (4 * k + ell, 2 * k + c, c)
                if 1 <= c <= ell - 3:
                    yield "B3", (4 * k + ell, 2 * k + c + 1, c)
                yield "C1", (4 * k + ell + c, 2 * k + ell + c, ell - 2)
                yield "C2", (4 * k + ell + c + 1, 2 * k + ell + c, ell - 2)


def lemma_fact_violations(n: int) -> List[Tuple[str, Partition, FClass]]:
    box = box3(n)
    bad = []
    for tag, lam in lemma_family_members(n):
        if not box.contains(lam):
            continue
        got = f_classify(lam)
        if got not in LEMMA_EXPECTED[tag]:
            bad.append((tag, lam, got))
    return bad


def remark_violations(n: int) -> List[Partition]:
    """Partitions outside E_{3,lam1} with even lam2+lam3 whose row-2 neighbour is in E."""
    bad = []
    for lam in enumerate_box(box3(n)):
        a, b, c = lam
        if _in_E_own(lam) or (b + c) % 2:
            continue
        if in_E3((a - 1, b + 1, c), a - 1):
            bad.append(lam)
    return bad
