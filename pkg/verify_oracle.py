#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""verify_oracle.py

Independent checks on top of the constructions.

The level oracle builds the bipartite cover graph between ranks i and i+1
by plain componentwise comparison (no covers(), no phi, no greedy) and asks
networkx for a maximum matching. Everything else is compared against it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms import bipartite

from chain_decomposition import ChainDecomposition, chains_from_matching, chains_from_phi, chains_l4, validate_decomposition
from errors import LatticeError
from greedy_matcher import Direction, OrderMatching, ga_full
from poset_core import BoxShape, Partition, enumerate_level, rank, rank_profile
from recursive_udec import knead, rec_ud_tower

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatchingCertificate:
    box: BoxShape
    rank: int
    max_matching_size: int
    lower_size: int
    upper_size: int

    @property
    def full(self) -> bool:
        return self.max_matching_size == min(self.lower_size, self.upper_size)

    def to_json(self) -> dict:
        return {"box": self.box.as_list(), "rank": self.rank, "max": self.max_matching_size, "full": self.full}


@dataclass
class LevelCheck:
    rank: int
    direction: str
    pairs: int
    oracle: int
    problems: List[str] = field(default_factory=list)
    witness: Optional[Partition] = None

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "direction": self.direction,
            "pairs": self.pairs,
            "oracle": self.oracle,
            "ok": self.ok,
            "problems": list(self.problems),
            "witness": list(self.witness) if self.witness is not None else None,
        }


@dataclass
class MatchingReport:
    box: BoxShape
    method: str
    levels: List[LevelCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(lv.ok for lv in self.levels)

    @property
    def problems(self) -> List[str]:
        return [f"rank {lv.rank}: {p}" for lv in self.levels for p in lv.problems]

    def to_json(self) -> dict:
        return {
            "box": self.box.as_list(),
            "method": self.method,
            "ok": self.ok,
            "levels": [lv.to_json() for lv in self.levels],
        }


@dataclass
class ProfileReport:
    box: BoxShape
    sizes: Sequence[int]
    symmetric: bool
    unimodal: bool
    peak: int
    peak_ranks: List[int]
    witness_method: Optional[str] = None
    witness_chains: Optional[int] = None
    problems: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        return {
            "box": self.box.as_list(),
            "sizes": [str(s) for s in self.sizes],
            "symmetric": self.symmetric,
            "unimodal": self.unimodal,
            "peak": self.peak,
            "peak_ranks": self.peak_ranks,
            "witness_method": self.witness_method,
            "witness_chains": self.witness_chains,
            "ok": self.ok,
            "problems": list(self.problems),
        }


# ------------------------------ Oracle -------------------------------------

def _below(lower: Sequence[int], upper: Sequence[int]) -> bool:
    return len(lower) == len(upper) and all(a <= b for a, b in zip(lower, upper))


def _is_step(lower: Sequence[int], upper: Sequence[int]) -> bool:
    return rank(upper) == rank(lower) + 1 and _below(lower, upper)


def level_graph(box: BoxShape, i: int) -> nx.Graph:
    """Bipartite graph of containments between ranks i and i+1."""
    lower = enumerate_level(box, i)
    upper = enumerate_level(box, i + 1)
    g = nx.Graph()
    g.add_nodes_from((("lo", lam) for lam in lower), bipartite=0)
    g.add_nodes_from((("hi", mu) for mu in upper), bipartite=1)
    for lam in lower:
        for mu in upper:
            if _below(lam, mu):
                g.add_edge(("lo", lam), ("hi", mu))
    return g


def max_level_matching(box: BoxShape, i: int) -> MatchingCertificate:
    g = level_graph(box, i)
    top = [v for v, side in g.nodes(data="bipartite") if side == 0]
    upper = len(g) - len(top)
    if not top or upper == 0:
        size = 0
    else:
        size = len(bipartite.hopcroft_karp_matching(g, top_nodes=top)) // 2
    cert = MatchingCertificate(box=box, rank=i, max_matching_size=size, lower_size=len(top), upper_size=upper)
    log.debug("oracle %sx%s rank %s: max %s of %s/%s", box.m, box.n, i, size, len(top), upper)
    return cert


def certify_matching(om: OrderMatching) -> MatchingReport:
    """Covers, injectivity and completeness of every level against the oracle."""
    box = om.box
    report = MatchingReport(box=box, method=om.method)
    for lv in om.levels:
        cert = max_level_matching(box, lv.rank)
        check = LevelCheck(rank=lv.rank, direction=lv.direction.value, pairs=len(lv.pairs), oracle=cert.max_matching_size)
        src_rank = lv.from_rank
        dst_rank = lv.rank + 1 if lv.direction is Direction.UP else lv.rank
        targets = {}
        for src, dst in sorted(lv.pairs.items()):
            if rank(src) != src_rank or rank(dst) != dst_rank:
                check.problems.append(f"pair {src} -> {dst} does not join ranks {src_rank} and {dst_rank}")
                check.witness = check.witness or src
                continue
            lo, hi = (src, dst) if lv.direction is Direction.UP else (dst, src)
            if not _is_step(lo, hi):
                check.problems.append(f"{hi} does not cover {lo}")
                check.witness = check.witness or src
            if dst in targets:
                check.problems.append(f"{targets[dst]} and {src} both map to {dst}")
                check.witness = check.witness or dst
            targets[dst] = src
        sources = len(enumerate_level(box, src_rank))
        if len(lv.pairs) + len(lv.unmatched) != sources:
            check.problems.append(f"{len(lv.pairs)} pairs + {len(lv.unmatched)} unmatched != {sources} sources")
        if lv.complete and len(lv.pairs) != cert.max_matching_size:
            check.problems.append(f"complete level has {len(lv.pairs)} pairs, oracle maximum {cert.max_matching_size}")
        if lv.complete and not cert.full:
            check.problems.append("level claims completeness the oracle rules out")
        report.levels.append(check)
    log.info("certify %s on %sx%s: %s", om.method, box.m, box.n, "ok" if report.ok else report.problems[0])
    return report


# ------------------------------ Profile ------------------------------------

def witness_decomposition(box: BoxShape) -> Optional[Tuple[str, ChainDecomposition]]:
    """(method, decomposition) for the first construction that validates, else None."""
    builders = []
    if box.m == 3:
        builders.append(("phi", lambda: chains_from_phi(box.n)))
    if box.m == 4:
        builders.append(("greedy", lambda: chains_l4(box.n)))
    builders.append(("recud", lambda: knead(rec_ud_tower(box.m, box.n))))
    builders.append(("greedy", lambda: chains_from_matching(ga_full(box))))
    for name, build in builders:
        try:
            dec = build()
        except LatticeError as exc:
            log.info("witness %s for %sx%s failed: %s", name, box.m, box.n, exc)
            continue
        if validate_decomposition(dec).ok:
            return name, dec
    return None


def certify_profile(
    box: BoxShape,
    dec: Optional[ChainDecomposition] = None,
    require_witness: bool = True,
) -> ProfileReport:
    """Symmetry and unimodality of the profile, plus a Sperner decomposition with p_middle chains.

    With ``require_witness`` off, a box where no construction succeeds is
    logged instead of failing.
    """
    prof = rank_profile(box)
    report = ProfileReport(
        box=box,
        sizes=prof.sizes,
        symmetric=prof.is_symmetric(),
        unimodal=prof.is_unimodal(),
        peak=prof.peak,
        peak_ranks=prof.peak_ranks,
    )
    if not report.symmetric:
        report.problems.append("rank profile is not symmetric")
    if not report.unimodal:
        report.problems.append("rank profile is not unimodal")
    method = "given"
    if dec is None:
        found = witness_decomposition(box)
        if found is None:
            if require_witness:
                report.problems.append("no Sperner chain decomposition available")
            else:
                log.warning("no construction yields a Sperner decomposition of %sx%s", box.m, box.n)
            return report
        method, dec = found
    val = validate_decomposition(dec)
    report.witness_method = method
    report.witness_chains = len(dec)
    if not val.ok:
        report.problems.append(f"witness decomposition invalid: {val.problems[0]}")
    elif len(dec) != prof[box.middle_rank]:
        report.problems.append(f"{len(dec)} chains, middle rank has {prof[box.middle_rank]} elements")
    return report
