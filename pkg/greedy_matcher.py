#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""greedy_matcher.py

Greedy level-by-level order matching of L(m,n).

Upward step at rank i: walk L_i in ascending lex order and give each
partition the lex-smallest cover in L_{i+1} nobody has taken yet. A
partition whose covers are all taken stays unmatched.

Above the middle rank the matching runs downward. It is the dual image of
the upward run at rank mn-i-1, since lam -> lam* reverses the order.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import config
from order_matching_l3 import box3, in_E3, is_start, phi
from poset_core import BoxShape, Partition, covers, dual, enumerate_level

log = logging.getLogger(__name__)

SortKey = Optional[Callable[[Partition], object]]


class Direction(enum.Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class LevelMatching:
    """Pairs source -> partner between two adjacent ranks.

    Sources sit at ``from_rank``: the lower rank for UP, the upper rank for DOWN.
    """

    box: BoxShape
    from_rank: int
    direction: Direction
    pairs: Dict[Partition, Partition]
    unmatched: Tuple[Partition, ...] = ()

    @property
    def rank(self) -> int:
        """Lower of the two ranks joined by this level."""
        return self.from_rank if self.direction is Direction.UP else self.from_rank - 1

    @property
    def complete(self) -> bool:
        return not self.unmatched

    def upward_pairs(self) -> List[Tuple[Partition, Partition]]:
        """(lower, upper) pairs, sorted by the lower element."""
        if self.direction is Direction.UP:
            return sorted(self.pairs.items())
        return sorted((lo, hi) for hi, lo in self.pairs.items())

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "direction": self.direction.value,
            "complete": self.complete,
            "pairs": [[list(a), list(b)] for a, b in sorted(self.pairs.items())],
            "unmatched": [list(p) for p in self.unmatched],
        }


@dataclass(frozen=True)
class OrderMatching:
    box: BoxShape
    levels: Tuple[LevelMatching, ...]
    method: str = "greedy"

    @property
    def complete(self) -> bool:
        return all(lv.complete for lv in self.levels)

    def incomplete_levels(self) -> List[LevelMatching]:
        return [lv for lv in self.levels if not lv.complete]

    def successor_map(self) -> Dict[Partition, Partition]:
        """lower -> upper over every level, whichever way the level was built."""
        out: Dict[Partition, Partition] = {}
        for lv in self.levels:
            out.update(lv.upward_pairs())
        return out

    def to_json(self) -> dict:
        return {
            "box": self.box.as_list(),
            "method": self.method,
            "complete": self.complete,
            "levels": [lv.to_json() for lv in self.levels],
        }


@dataclass
class AgreementReport:
    n: int
    checked: int = 0
    disagreements: List[Tuple[int, Partition, Optional[Partition], Optional[Partition]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "checked": self.checked,
            "ok": self.ok,
            "disagreements": [
                {
                    "rank": r,
                    "partition": list(lam),
                    "greedy": list(g) if g is not None else None,
                    "phi": list(p) if p is not None else None,
                }
                for r, lam, g, p in self.disagreements
            ],
        }


# ------------------------------- GA ----------------------------------------

def ga_level(box: BoxShape, i: int, key: SortKey = None) -> LevelMatching:
    """Upward greedy step from rank i to rank i+1."""
    sources = enumerate_level(box, i)
    if key is not None:
        sources = sorted(sources, key=key)
    used = set()
    pairs: Dict[Partition, Partition] = {}
    unmatched: List[Partition] = []
    for lam in sources:
        options = covers(lam, box)
        if key is not None:
            options = sorted(options, key=key)
        for mu in options:
            if mu not in used:
                used.add(mu)
                pairs[lam] = mu
                break
        else:
            unmatched.append(lam)
    log.debug("GA %sx%s rank %s: %s pairs, %s unmatched", box.m, box.n, i, len(pairs), len(unmatched))
    return LevelMatching(box=box, from_rank=i, direction=Direction.UP, pairs=pairs, unmatched=tuple(unmatched))


def ga_level_down(box: BoxShape, i: int, key: SortKey = None) -> LevelMatching:
    """Downward step from rank i+1 to rank i, dual of the upward step at mn-i-1."""
    up = ga_level(box, box.top_rank - i - 1, key=key)
    pairs = {dual(lam, box): dual(mu, box) for lam, mu in up.pairs.items()}
    unmatched = tuple(sorted(dual(lam, box) for lam in up.unmatched))
    return LevelMatching(box=box, from_rank=i + 1, direction=Direction.DOWN, pairs=pairs, unmatched=unmatched)


def ga_full(box: BoxShape, key: SortKey = None) -> OrderMatching:
    mid = box.middle_rank
    levels = []
    for i in range(box.top_rank):
        if i < mid:
            levels.append(ga_level(box, i, key=key))
        else:
            levels.append(ga_level_down(box, i, key=key))
    om = OrderMatching(box=box, levels=tuple(levels), method="greedy")
    bad = om.incomplete_levels()
    if not bad:
        log.info("GA (%s,%s): %s levels, complete", box.m, box.n, len(levels))
    elif box.m > config.GREEDY_ASSERTED_MAX_M:
        first = bad[0]
        log.warning(
            "GA (%s,%s): %s incomplete level(s); first at rank %s (%s), unmatched %s",
            box.m, box.n, len(bad), first.rank, first.direction.value, first.unmatched[0],
        )
    else:
        log.info("GA (%s,%s): %s incomplete level(s)", box.m, box.n, len(bad))
    return om


# ------------------------------ phi ----------------------------------------

def phi_order_matching(n: int) -> OrderMatching:
    """phi laid out level by level: upward below the middle, phi^-1 downward above."""
    box = box3(n)
    mid = box.middle_rank
    levels = []
    for i in range(box.top_rank):
        if i < mid:
            pairs = {}
            unmatched = []
            for lam in enumerate_level(box, i):
                if in_E3(lam, n):
                    unmatched.append(lam)
                else:
                    pairs[lam] = phi(lam, n)
            levels.append(LevelMatching(box, i, Direction.UP, pairs, tuple(unmatched)))
        else:
            pairs = {}
            unmatched = []
            for lam in enumerate_level(box, i):
                if not in_E3(lam, n):
                    pairs[phi(lam, n)] = lam
            for mu in enumerate_level(box, i + 1):
                if mu not in pairs:
                    unmatched.append(mu)
            levels.append(LevelMatching(box, i + 1, Direction.DOWN, pairs, tuple(unmatched)))
    return OrderMatching(box=box, levels=tuple(levels), method="phi")


def compare_with_phi(n: int, ranks: Optional[Sequence[int]] = None) -> AgreementReport:
    """Greedy versus phi on every rank of L(3,n) (or just ``ranks``).

    Below the middle GA(lam) must exist exactly when lam is outside E_{3,n}
    and then equal phi(lam). At and above the middle the downward pair
    landing on lam must come from phi(lam), and nothing lands on E_{3,n}.
    """
    box = box3(n)
    report = AgreementReport(n=n)
    wanted = range(box.top_rank) if ranks is None else ranks
    for i in wanted:
        if i < box.middle_rank:
            lv = ga_level(box, i)
            for lam in enumerate_level(box, i):
                report.checked += 1
                got = lv.pairs.get(lam)
                want = None if in_E3(lam, n) else phi(lam, n)
                if got != want:
                    report.disagreements.append((i, lam, got, want))
        else:
            lv = ga_level_down(box, i)
            landed = {lo: hi for hi, lo in lv.pairs.items()}
            for lam in enumerate_level(box, i):
                report.checked += 1
                got = landed.get(lam)
                want = None if in_E3(lam, n) else phi(lam, n)
                if got != want:
                    report.disagreements.append((i, lam, got, want))
            for mu in lv.unmatched:
                if not is_start(mu, n):
                    report.disagreements.append((i + 1, mu, None, None))
    if report.ok:
        log.info("GA vs phi on L(3,%s): %s partitions, no disagreement", n, report.checked)
    else:
        log.info("GA vs phi on L(3,%s): %s disagreement(s)", n, len(report.disagreements))
    return report
