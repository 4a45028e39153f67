#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""recursive_udec.py

Recursive Sperner decompositions through half lattices.

L^U(m,n) holds the partitions of rank <= d = floor((mn+1)/2). A
U-decomposition splits it into saturated chains that all top out at rank d.
Kneading a U-decomposition with its dual gives a Sperner decomposition of
L(m,n). RecUD grows U-decompositions from (m,n-1) and (m-1,n); RecSmn
follows only the starting partitions through the same recursion.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from chain_decomposition import (
    Chain,
    ChainDecomposition,
    DecompositionKind,
    ValidationReport,
    chains_from_phi,
    validate_decomposition,
)
from errors import InvalidBox, KneadFailure, RecUDFailure
from poset_core import BoxShape, Partition, dual, enumerate_level, prefix, rank

log = logging.getLogger(__name__)


# ------------------------------- Types -------------------------------------

@dataclass(frozen=True)
class HalfLattice:
    box: BoxShape
    elements: Tuple[Partition, ...]

    @property
    def d(self) -> int:
        return self.box.u_rank

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def element_set(self) -> FrozenSet[Partition]:
        return frozenset(self.elements)

    def __contains__(self, lam) -> bool:
        return tuple(lam) in self.element_set


@dataclass(frozen=True)
class UDecomposition:
    box: BoxShape
    chains: Tuple[Chain, ...]

    def __len__(self) -> int:
        return len(self.chains)

    def starts(self) -> FrozenSet[Partition]:
        return frozenset(c.start for c in self.chains)

    def as_decomposition(self) -> ChainDecomposition:
        ordered = tuple(sorted(self.chains, key=lambda c: c.start))
        return ChainDecomposition(box=self.box, chains=ordered, kind=DecompositionKind.U_DECOMPOSITION)

    def to_json(self) -> dict:
        return self.as_decomposition().to_json()


@dataclass
class SmnResult:
    box: BoxShape
    starts: Optional[FrozenSet[Partition]] = None
    ends_below: FrozenSet[Partition] = frozenset()
    candidates: FrozenSet[Partition] = frozenset()
    missing: List[Partition] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.starts is not None

    def to_json(self) -> dict:
        return {
            "box": self.box.as_list(),
            "ok": self.ok,
            "starts": [list(p) for p in sorted(self.starts)] if self.starts is not None else None,
            "missing": [list(p) for p in self.missing],
        }


# ------------------------------ Half lattice -------------------------------

def half_lattice(box: BoxShape) -> HalfLattice:
    d = box.u_rank
    elements = tuple(lam for i in range(d + 1) for lam in enumerate_level(box, i))
    return HalfLattice(box=box, elements=elements)


def validate_u_decomposition(u: UDecomposition) -> ValidationReport:
    report = validate_decomposition(u.as_decomposition(), ground=half_lattice(u.box).elements)
    want = len(enumerate_level(u.box, u.box.u_rank))
    if len(u.chains) != want:
        report.fail(f"{len(u.chains)} chains, rank {u.box.u_rank} has {want} elements")
    return report


def chain_u_decomposition(box: BoxShape) -> UDecomposition:
    """L(1,n) and L(m,1) are chains, so the half lattice is one chain."""
    if box.m != 1 and box.n != 1:
        raise InvalidBox(f"box {box.m}x{box.n} is not a chain; only 1xn and mx1 boxes are")
    elements = half_lattice(box).elements
    return UDecomposition(box=box, chains=(Chain(elements),))


def u_decomposition_from(dec: ChainDecomposition) -> UDecomposition:
    """Cut a Sperner decomposition down to the half lattice."""
    d = dec.box.u_rank
    chains = []
    for c in dec.chains:
        kept = tuple(lam for lam in c if rank(lam) <= d)
        if kept:
            chains.append(Chain(kept))
    return UDecomposition(box=dec.box, chains=tuple(chains))


# -------------------------------- Knead ------------------------------------

def _dual_chain(chain: Chain, box: BoxShape) -> Tuple[Partition, ...]:
    return tuple(dual(lam, box) for lam in reversed(chain.elements))


def knead(u: UDecomposition) -> ChainDecomposition:
    """Glue every U-chain to a dual U-chain into a Sperner decomposition.

    mn even: the dual chain whose minimum is this chain's top; the shared
    element appears once. mn odd: the dual chain whose rank-d element is this
    chain's top; that dual chain's minimum (rank d-1) is dropped, it already
    sits in some U-chain.
    """
    box = u.box
    odd = box.top_rank % 2 == 1
    duals = [_dual_chain(c, box) for c in u.chains]
    index: Dict[Partition, int] = {}
    for j, dc in enumerate(duals):
        if odd and len(dc) < 2:
            log.warning("knead %sx%s: singleton U-chain %s at rank %s", box.m, box.n, dc[0], box.u_rank)
            raise KneadFailure(
                f"U-chain {u.chains[j].start} of {box.m}x{box.n} is a single element; "
                f"odd mn gluing needs every chain to reach below rank {box.u_rank}"
            )
        key = dc[1] if odd else dc[0]
        if key in index:
            raise KneadFailure(f"two dual chains of {box.m}x{box.n} share the gluing element {key}")
        index[key] = j

    glued = []
    dropped = []
    for c in u.chains:
        j = index.get(c.end)
        if j is None:
            raise KneadFailure(f"chain from {c.start} tops out at {c.end}; no dual chain to glue it to")
        dc = duals[j]
        if odd:
            dropped.append(dc[0])
            glued.append(Chain(c.elements + dc[2:]))
        else:
            glued.append(Chain(c.elements + dc[1:]))

    glued.sort(key=lambda c: c.start)
    dec = ChainDecomposition(box=box, chains=tuple(glued), kind=DecompositionKind.SPERNER)
    if dropped:
        where: Dict[Partition, int] = {}
        for c in glued:
            for lam in c:
                where[lam] = where.get(lam, 0) + 1
        for lam in dropped:
            if where.get(lam, 0) != 1:
                raise KneadFailure(f"dropped element {lam} lies in {where.get(lam, 0)} chains, expected 1")
    # chains run from a U-start to the dual of a U-start
    stray = set(dec.ends()) - {dual(s, box) for s in u.starts()}
    if stray:
        raise KneadFailure(f"knead {box.m}x{box.n}: chains end at {sorted(stray)}, not duals of U-starts")
    log.debug("knead %sx%s: %s chains", box.m, box.n, len(glued))
    return dec


# -------------------------------- RecUD ------------------------------------

def rec_ud(u_left: UDecomposition, u_top: UDecomposition) -> UDecomposition:
    """U-decomposition of (m,n) from those of (m,n-1) and (m-1,n)."""
    m, n = u_left.box.m, u_left.box.n + 1
    if u_top.box != BoxShape(m - 1, n):
        raise InvalidBox(
            f"rec_ud needs boxes ({m},{n - 1}) and ({m - 1},{n}), got "
            f"({u_left.box.m},{u_left.box.n}) and ({u_top.box.m},{u_top.box.n})"
        )
    box = BoxShape(m, n)
    d = box.u_rank

    # 1) Sperner decomposition of L(m,n-1): short chains are bad, the rest cut at d
    good: List[Chain] = []
    bad: List[Chain] = []
    for c in knead(u_left).chains:
        if c.max_rank < d:
            bad.append(c)
        else:
            good.append(Chain(tuple(lam for lam in c if rank(lam) <= d)))

    # 2) candidate chains n (+) C, cut at d
    candidates: Dict[Partition, Chain] = {}
    for c in u_top.chains:
        kept = tuple(p for p in (prefix(n, lam) for lam in c) if rank(p) <= d)
        if kept:
            candidates[kept[0]] = Chain(kept)

    # 3) each bad end alpha continues at alpha + e_1
    kneaded: List[Chain] = []
    for c in sorted(bad, key=lambda c: c.end):
        alpha = c.end
        beta = (alpha[0] + 1,) + alpha[1:]
        cand = candidates.pop(beta, None)
        if cand is None:
            raise RecUDFailure(
                f"rec_ud ({m},{n}): bad chain ends at {alpha}, but no candidate chain starts at {beta}",
                alpha=alpha,
            )
        kneaded.append(Chain(c.elements + cand.elements))

    # 4) good + kneaded + untouched candidates
    chains = tuple(sorted(good + kneaded + list(candidates.values()), key=lambda c: c.start))
    log.debug("rec_ud (%s,%s): %s good, %s kneaded, %s candidates", m, n, len(good), len(kneaded), len(candidates))
    return UDecomposition(box=box, chains=chains)


def rec_ud_tower(m: int, n: int, seed_phi: bool = False) -> UDecomposition:
    """U-decomposition of (m,n) by recursion from the chain boxes.

    With ``seed_phi`` the three-row level comes from the phi decomposition
    instead of the recursion.
    """
    BoxShape(m, n)

    @lru_cache(maxsize=None)
    def build(mm: int, nn: int) -> UDecomposition:
        if mm == 1 or nn == 1:
            return chain_u_decomposition(BoxShape(mm, nn))
        if seed_phi and mm == 3:
            return u_decomposition_from(chains_from_phi(nn))
        return rec_ud(build(mm, nn - 1), build(mm - 1, nn))

    u = build(m, n)
    log.info("rec_ud (%s,%s)%s: %s chains", m, n, " seeded with phi" if seed_phi else "", len(u))
    return u


# -------------------------------- RecSmn -----------------------------------

def rec_smn(s_left: Iterable[Partition], s_top: Iterable[Partition], box: BoxShape) -> SmnResult:
    """Starting set of (m,n) from the starting sets of (m,n-1) and (m-1,n)."""
    left_box = BoxShape(box.m, box.n - 1) if box.n > 1 else None
    if left_box is None or box.m < 2:
        raise InvalidBox(f"rec_smn needs m >= 2 and n >= 2, got {box.m}x{box.n}")
    d = box.u_rank
    s_left = frozenset(tuple(p) for p in s_left)
    ends_below = frozenset(e for e in (dual(s, left_box) for s in s_left) if rank(e) < d)
    shifted = frozenset((e[0] + 1,) + e[1:] for e in ends_below)
    candidates = frozenset(p for p in (prefix(box.n, b) for b in s_top) if rank(p) <= d)
    result = SmnResult(box=box, ends_below=ends_below, candidates=candidates)
    result.missing = sorted(shifted - candidates)
    if result.missing:
        log.info("rec_smn (%s,%s): %s shifted ends without a candidate", box.m, box.n, len(result.missing))
        return result
    result.starts = s_left | (candidates - shifted)
    return result


def smn_tower(m: int, n: int) -> SmnResult:
    """RecSmn from S_(1,n) = {(0)} and S_(m,1) = {0^m}; stops at the first failure."""
    BoxShape(m, n)
    cache: Dict[Tuple[int, int], SmnResult] = {}

    def build(mm: int, nn: int) -> SmnResult:
        key = (mm, nn)
        if key in cache:
            return cache[key]
        box = BoxShape(mm, nn)
        if mm == 1 or nn == 1:
            res = SmnResult(box=box, starts=frozenset({box.bottom}))
        else:
            left = build(mm, nn - 1)
            if not left.ok:
                return left
            top = build(mm - 1, nn)
            if not top.ok:
                return top
            res = rec_smn(left.starts, top.starts, box)
        cache[key] = res
        return res

    return build(m, n)


def s2_formula(n: int) -> FrozenSet[Partition]:
    return frozenset((2 * k, 0) for k in range(n // 2 + 1))
