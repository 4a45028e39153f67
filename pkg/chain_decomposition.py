#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""chain_decomposition.py

Chains, chain decompositions and chain tableaux of L(m,n).

- chains_from_phi / closed_form_chain_l3: the phi decomposition of L(3,n)
- classify_l3 / classify_l4: unique parametric type of a 3- or 4-row partition
- chains_from_matching / chains_l4: threading any complete order matching
- psi: the pairing of L(3,n) starting partitions through chain ends
- validate_decomposition: disjoint cover, saturation, Sperner / symmetric ranks
- tableau_of_chain: step labels written into the cells each step adds
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from errors import ClassificationFailure, DecompositionInvalid, NotAStart, NotSaturated
from greedy_matcher import OrderMatching, ga_full
from order_matching_l3 import boundary_sets, box3, is_start, phi_trace
from poset_core import BoxShape, Partition, enumerate_box, is_cover, rank

log = logging.getLogger(__name__)


# ------------------------------- Types -------------------------------------

class DecompositionKind(enum.Enum):
    SPERNER = "sperner"
    SYMMETRIC = "symmetric"
    U_DECOMPOSITION = "u_decomposition"


@dataclass(frozen=True)
class Chain:
    elements: Tuple[Partition, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise NotSaturated("a chain needs at least one element")

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def start(self) -> Partition:
        return self.elements[0]

    @property
    def end(self) -> Partition:
        return self.elements[-1]

    @property
    def steps(self) -> int:
        return len(self.elements) - 1

    @property
    def min_rank(self) -> int:
        return rank(self.start)

    @property
    def max_rank(self) -> int:
        return rank(self.end)

    def is_saturated(self) -> bool:
        return all(is_cover(a, b) for a, b in zip(self.elements, self.elements[1:]))

    def to_json(self) -> dict:
        return {"start": list(self.start), "elements": [list(p) for p in self.elements]}


@dataclass(frozen=True)
class ChainDecomposition:
    box: BoxShape
    chains: Tuple[Chain, ...]
    kind: DecompositionKind = DecompositionKind.SPERNER

    def __len__(self) -> int:
        return len(self.chains)

    def __iter__(self) -> Iterator[Chain]:
        return iter(self.chains)

    @property
    def element_count(self) -> int:
        return sum(len(c) for c in self.chains)

    def starts(self) -> List[Partition]:
        return sorted(c.start for c in self.chains)

    def ends(self) -> List[Partition]:
        return sorted(c.end for c in self.chains)

    def chain_from(self, start: Sequence[int]) -> Chain:
        start = tuple(start)
        for c in self.chains:
            if c.start == start:
                return c
        raise NotAStart(f"no chain of this decomposition starts at {start}")

    def sorted_chains(self) -> List[Chain]:
        return sorted(self.chains, key=lambda c: c.start)

    def to_json(self) -> dict:
        return {
            "box": self.box.as_list(),
            "kind": self.kind.value,
            "chains": [c.to_json() for c in self.sorted_chains()],
        }


@dataclass(frozen=True)
class ChainTableau:
    """Base diagram plus step labels; cells are 1-based (row, column)."""

    box: BoxShape
    base: Partition
    labels: Dict[Tuple[int, int], int]

    @property
    def steps(self) -> int:
        return len(self.labels)

    @property
    def top(self) -> Partition:
        rows = list(self.base)
        for (r, _c) in self.labels:
            rows[r - 1] += 1
        return tuple(rows)

    def label_at(self, row: int, col: int) -> Optional[int]:
        return self.labels.get((row, col))

    def to_json(self) -> dict:
        ordered = sorted(self.labels.items(), key=lambda kv: kv[1])
        return {
            "box": self.box.as_list(),
            "base": list(self.base),
            "labels": [[r, c, t] for (r, c), t in ordered],
        }


@dataclass(frozen=True)
class ClassificationL3:
    type_tag: str
    k: int
    c: int
    ell: int
    alpha: int
    beta: int

    def partition(self) -> Partition:
        return reconstruct_l3(self.type_tag, self.k, self.c, self.ell)


@dataclass(frozen=True)
class ClassificationL4:
    type_tag: str
    k: int
    c: int
    ell: int
    r: int
    alpha: int
    beta: int
    gamma: int

    def partition(self) -> Partition:
        return reconstruct_l4(self.type_tag, self.k, self.c, self.ell, self.r)


@dataclass
class ValidationReport:
    kind: DecompositionKind
    chains: int = 0
    elements: int = 0
    problems: List[str] = field(default_factory=list)
    counterexample: Optional[Partition] = None

    @property
    def ok(self) -> bool:
        return not self.problems

    def fail(self, message: str, witness: Optional[Partition] = None) -> None:
        self.problems.append(message)
        if self.counterexample is None and witness is not None:
            self.counterexample = witness

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "ok": self.ok,
            "chains": self.chains,
            "elements": self.elements,
            "problems": list(self.problems),
            "counterexample": list(self.counterexample) if self.counterexample is not None else None,
        }


@dataclass(frozen=True)
class FamilyStepEntry:
    start: Partition
    family: str
    k: int
    s: int
    ell: int
    steps: int
    expected: Optional[int]
    constants: Dict[str, int]

    @property
    def asserted(self) -> bool:
        return self.expected is not None

    @property
    def matches(self) -> bool:
        return self.expected is None or self.expected == self.steps

    def to_json(self) -> dict:
        return {
            "start": list(self.start),
            "family": self.family,
            "k": self.k,
            "s": self.s,
            "ell": self.ell,
            "steps": self.steps,
            "expected": self.expected,
            "constants": dict(self.constants),
        }


# ---------------------------- Chains of L(3,n) -----------------------------

def chains_from_phi(n: int) -> ChainDecomposition:
    box = box3(n)
    chains = []
    for mu in boundary_sets(n).sorted_starts():
        chain = Chain(tuple(phi_trace(mu, n)))
        log.debug("phi chain from %s: %s steps, ends %s", mu, chain.steps, chain.end)
        chains.append(chain)
    log.info("phi decomposition of L(3,%s): %s chains", n, len(chains))
    return ChainDecomposition(box=box, chains=tuple(chains), kind=DecompositionKind.SPERNER)


def _start_params_l3(mu: Sequence[int], n: int) -> Tuple[int, int]:
    if not is_start(mu, n):
        raise NotAStart(f"{tuple(mu)} is not in S_(3,{n})")
    k = mu[1] // 2
    return k, mu[0] - 4 * k


def closed_form_chain_l3(mu: Sequence[int], n: int) -> Chain:
    """Chain from mu written down directly from its (k, l) parameters."""
    k, ell = _start_params_l3(mu, n)
    rows = list(mu)
    out = [tuple(rows)]

    def step(row: int) -> None:
        rows[row - 1] += 1
        out.append(tuple(rows))

    if ell == 0:
        c = 0
        while 4 * k + c + 1 <= n:
            step(1)
            step(2)
            step(3)
            c += 1
    else:
        for _ in range(ell - 2):
            step(2)
            step(3)
        step(2)
        step(2)
        for _ in range(n - 4 * k - ell):
            step(1)
            step(2)
    return Chain(tuple(out))


def closed_form_decomposition_l3(n: int) -> ChainDecomposition:
    chains = [closed_form_chain_l3(mu, n) for mu in boundary_sets(n).sorted_starts()]
    return ChainDecomposition(box=box3(n), chains=tuple(chains), kind=DecompositionKind.SPERNER)


def psi(mu: Sequence[int], n: int) -> Partition:
    k, ell = _start_params_l3(mu, n)
    if ell == 0:
        return tuple(mu)
    return (n - ell + 2, 2 * k, 0)


def psi_fixed_points(n: int) -> FrozenSet[Partition]:
    out = set()
    for mu in boundary_sets(n).starts:
        k = mu[1] // 2
        ell = mu[0] - 4 * k
        if ell == 0 or n == 4 * k + 2 * ell - 2:
            out.add(mu)
    return frozenset(out)


def symmetric_chain_starts(dec: ChainDecomposition) -> List[Partition]:
    top = dec.box.top_rank
    return sorted(c.start for c in dec.chains if c.min_rank + c.max_rank == top)


# ---------------------------- Classification -------------------------------

Rebuild = Callable[..., Partition]

_L3_SHAPES: Dict[str, Rebuild] = {
    "A1": lambda k, c, ell: (4 * k + c, 2 * k + c, c),
    "A2": lambda k, c, ell: (4 * k + c + 1, 2 * k + c, c),
    "A3": lambda k, c, ell: (4 * k + c + 1, 2 * k + c + 1, c),
    "B2": lambda k, c, ell: (4 * k + ell, 2 * k + c, c),
    "B3": lambda k, c, ell: (4 * k + ell, 2 * k + c + 1, c),
    "C1": lambda k, c, ell: (4 * k + ell + c, 2 * k + ell + c, ell - 2),
    "C2": lambda k, c, ell: (4 * k + ell + c + 1, 2 * k + ell + c, ell - 2),
}

# (tag, applies(a, b, d), params(a, b, d) -> (k, c, ell))
_L3_ROWS = (
    ("A1", lambda a, b, d: a == b and a % 2 == 0, lambda a, b, d: (a // 2, d, 0)),
    ("A2", lambda a, b, d: a - b == 1 and b % 2 == 0, lambda a, b, d: (b // 2, d, 0)),
    ("A3", lambda a, b, d: a - b == -1 and a % 2 == 0, lambda a, b, d: (a // 2, d, 0)),
    ("B2", lambda a, b, d: a - b >= 2 and b % 2 == 0, lambda a, b, d: (b // 2, d, a - b + d)),
    ("B3", lambda a, b, d: a - b >= 0 and b % 2 == 1, lambda a, b, d: ((b - 1) // 2, d, a - b + d + 2)),
    ("C1", lambda a, b, d: a - b <= -2 and a % 2 == 0, lambda a, b, d: (a // 2, b - a - 2, d + 2)),
    ("C2", lambda a, b, d: a - b <= -1 and a % 2 == 1, lambda a, b, d: ((a - 1) // 2, b - a - 1, d + 2)),
)


def _l3_params_ok(tag: str, k: int, c: int, ell: int) -> bool:
    if min(k, c, ell) < 0:
        return False
    if tag[0] == "B":
        return ell >= 2 and c <= ell - 2
    if tag[0] == "C":
        return ell >= 2
    return True


def reconstruct_l3(tag: str, k: int, c: int, ell: int = 0) -> Partition:
    try:
        return _L3_SHAPES[tag](k, c, ell)
    except KeyError:
        raise ClassificationFailure(f"unknown L(3,n) type {tag!r}") from None


def classify_l3(lam: Sequence[int]) -> ClassificationL3:
    lam = tuple(lam)
    if len(lam) != 3:
        raise ClassificationFailure(f"{lam} is not a 3-row partition")
    a, b = lam[0] - lam[1], lam[1] - lam[2]
    d = lam[2]
    hits = []
    for tag, applies, params in _L3_ROWS:
        if not applies(a, b, d):
            continue
        k, c, ell = params(a, b, d)
        if _l3_params_ok(tag, k, c, ell) and reconstruct_l3(tag, k, c, ell) == lam:
            hits.append(ClassificationL3(tag, k, c, ell, a, b))
    if len(hits) != 1:
        raise ClassificationFailure(f"{lam}: {len(hits)} L(3,n) types match, expected exactly one")
    return hits[0]


_L4_SHAPES: Dict[str, Rebuild] = {
    "A1": lambda k, c, ell, r: (6 * k + c, 4 * k + c, 2 * k + c, c),
    "A2": lambda k, c, ell, r: (6 * k + c + 1, 4 * k + c, 2 * k + c, c),
    "A3": lambda k, c, ell, r: (6 * k + c + 1, 4 * k + c + 1, 2 * k + c, c),
    "A4": lambda k, c, ell, r: (6 * k + c + 1, 4 * k + c + 1, 2 * k + c + 1, c),
    "B1": lambda k, c, ell, r: (6 * k + ell + c, 4 * k + ell + c, 2 * k + c, c),
    "B3": lambda k, c, ell, r: (6 * k + ell + c + 1, 4 * k + ell + c, 2 * k + c, c),
    "B2": lambda k, c, ell, r: (6 * k + ell + c + 1, 4 * k + ell + c, 2 * k + c + 1, c),
    "B4": lambda k, c, ell, r: (6 * k + ell + c + 1, 4 * k + ell + c + 1, 2 * k + c + 1, c),
    "Ca2": lambda k, c, ell, r: (6 * k + r, 4 * k + c, 2 * k + c, c),
    "Ca3": lambda k, c, ell, r: (6 * k + r, 4 * k + c + 1, 2 * k + c, c),
    "Ca4": lambda k, c, ell, r: (6 * k + r, 4 * k + c + 1, 2 * k + c + 1, c),
    "Cb2": lambda k, c, ell, r: (6 * k + r + c, 4 * k + r - 1 + c, 2 * k + r - 1 + c, r - 2),
    "Cb3": lambda k, c, ell, r: (6 * k + r + c, 4 * k + r + c, 2 * k + r - 1 + c, r - 2),
    "Cb1": lambda k, c, ell, r: (6 * k + r + c, 4 * k + r + c, 2 * k + r + c, r - 2),
    "Da3": lambda k, c, ell, r: (6 * k + ell + r, 4 * k + ell, 2 * k + c, c),
    "Da4": lambda k, c, ell, r: (6 * k + ell + r, 4 * k + ell, 2 * k + c + 1, c),
    "Db2": lambda k, c, ell, r: (6 * k + ell + r, 4 * k + ell + c, 2 * k + ell + c, ell - 2),
    "Db3": lambda k, c, ell, r: (6 * k + ell + r, 4 * k + ell + c + 1, 2 * k + ell + c, ell - 2),
    "Dc1": lambda k, c, ell, r: (6 * k + ell + r + c, 4 * k + ell + r + c, 2 * k + ell + r - 2, ell - 2),
    "Dc2": lambda k, c, ell, r: (6 * k + ell + r + c + 1, 4 * k + ell + r + c, 2 * k + ell + r - 2, ell - 2),
}

# (tag, applies(a, b, g, d), params(a, b, g, d) -> (k, c, ell, r))
_L4_ROWS = (
    ("A1", lambda a, b, g, d: a == b == g and a % 2 == 0,
     lambda a, b, g, d: (a // 2, d, 0, 0)),
    ("A2", lambda a, b, g, d: a % 2 == 1 and b == g == a - 1,
     lambda a, b, g, d: (b // 2, d, 0, 0)),
    ("A3", lambda a, b, g, d: a % 2 == 0 and b == a + 1 and g == a,
     lambda a, b, g, d: (a // 2, d, 0, 0)),
    ("A4", lambda a, b, g, d: a % 2 == 0 and b == a and g == a + 1,
     lambda a, b, g, d: (a // 2, d, 0, 0)),
    ("B1", lambda a, b, g, d: a == g and a % 2 == 0 and b >= a + 2,
     lambda a, b, g, d: (a // 2, d, b - a, 0)),
    ("B3", lambda a, b, g, d: a % 2 == 1 and g == a - 1 and b >= a + 1,
     lambda a, b, g, d: ((a - 1) // 2, d, b - g, 0)),
    ("B2", lambda a, b, g, d: a == g and a % 2 == 1 and b >= a,
     lambda a, b, g, d: ((a - 1) // 2, d, b - a + 2, 0)),
    ("B4", lambda a, b, g, d: a % 2 == 0 and g == a + 1 and b >= a + 2,
     lambda a, b, g, d: (a // 2, d, b - a, 0)),
    ("Ca2", lambda a, b, g, d: b == g and b % 2 == 0 and a >= b + 2,
     lambda a, b, g, d: (b // 2, d, 0, a - b + d)),
    ("Ca3", lambda a, b, g, d: g % 2 == 0 and b == g + 1 and a >= b,
     lambda a, b, g, d: (g // 2, d, 0, a - b + d + 2)),
    ("Ca4", lambda a, b, g, d: b % 2 == 0 and g == b + 1 and a >= b + 2,
     lambda a, b, g, d: (b // 2, d, 0, a - b + d + 1)),
    ("Cb2", lambda a, b, g, d: b % 2 == 0 and a == b + 1 and g >= b + 1,
     lambda a, b, g, d: (b // 2, g - b - 1, 0, d + 2)),
    ("Cb3", lambda a, b, g, d: a % 2 == 0 and b == a + 1 and g >= a + 1,
     lambda a, b, g, d: (a // 2, g - a - 1, 0, d + 2)),
    ("Cb1", lambda a, b, g, d: a == b and a % 2 == 0 and g >= a + 2,
     lambda a, b, g, d: (a // 2, g - a - 2, 0, d + 2)),
    ("Da3", lambda a, b, g, d: g % 2 == 0 and a >= g + 2 and b >= g + 2,
     lambda a, b, g, d: (g // 2, d, b - g + d, a - g)),
    ("Da4", lambda a, b, g, d: g % 2 == 1 and a >= g + 1 and b >= g,
     lambda a, b, g, d: ((g - 1) // 2, d, b - g + d + 2, a - g + 1)),
    ("Db2", lambda a, b, g, d: b % 2 == 0 and a >= b + 2 and g >= b + 2,
     lambda a, b, g, d: (b // 2, g - b - 2, d + 2, a - b + (g - b - 2))),
    ("Db3", lambda a, b, g, d: b % 2 == 1 and a >= b and g >= b + 1,
     lambda a, b, g, d: ((b - 1) // 2, g - b - 1, d + 2, a - b + (g - b - 1) + 2)),
    ("Dc1", lambda a, b, g, d: a % 2 == 0 and b >= a + 2 and g >= a + 2,
     lambda a, b, g, d: (a // 2, b - a - 2, d + 2, g - a)),
    ("Dc2", lambda a, b, g, d: a % 2 == 1 and b >= a + 1 and g >= a + 1,
     lambda a, b, g, d: ((a - 1) // 2, b - a - 1, d + 2, g - a + 1)),
)


def _l4_params_ok(tag: str, k: int, c: int, ell: int, r: int) -> bool:
    if min(k, c, ell, r) < 0:
        return False
    if tag[0] == "B":
        return ell >= 2
    if tag in ("Ca2", "Ca3"):
        return r >= 2 and c <= r - 2
    if tag == "Ca4":
        return r >= 2 and c <= r - 3
    if tag.startswith("Cb"):
        return r >= 2
    if tag.startswith("Da"):
        return ell >= 2 and r >= 2 and c <= ell - 2
    if tag.startswith("Db"):
        return ell >= 2 and r >= 2 and c <= r - 2
    if tag.startswith("Dc"):
        return ell >= 2 and r >= 2
    return True


def reconstruct_l4(tag: str, k: int, c: int, ell: int = 0, r: int = 0) -> Partition:
    try:
        return _L4_SHAPES[tag](k, c, ell, r)
    except KeyError:
        raise ClassificationFailure(f"unknown L(4,n) type {tag!r}") from None


def classify_l4(lam: Sequence[int]) -> ClassificationL4:
    lam = tuple(lam)
    if len(lam) != 4:
        raise ClassificationFailure(f"{lam} is not a 4-row partition")
    a, b, g = lam[0] - lam[1], lam[1] - lam[2], lam[2] - lam[3]
    d = lam[3]
    hits = []
    for tag, applies, params in _L4_ROWS:
        if not applies(a, b, g, d):
            continue
        k, c, ell, r = params(a, b, g, d)
        if _l4_params_ok(tag, k, c, ell, r) and reconstruct_l4(tag, k, c, ell, r) == lam:
            hits.append(ClassificationL4(tag, k, c, ell, r, a, b, g))
    if len(hits) != 1:
        tags = [h.type_tag for h in hits]
        raise ClassificationFailure(f"{lam}: L(4,n) types {tags} match, expected exactly one")
    return hits[0]


# ------------------------------ L(4,n) -------------------------------------

def s4_starting_set(n: int) -> FrozenSet[Partition]:
    out = set()
    for k in range(n // 6 + 1):
        for s in range(n - 6 * k + 1):
            if s == 1:
                continue
            for ell in range(n - 6 * k - s + 1):
                if ell == 1:
                    continue
                out.add((6 * k + s + ell, 4 * k + ell, 2 * k, 0))
    return frozenset(out)


def chains_from_matching(om: OrderMatching, kind: DecompositionKind = DecompositionKind.SPERNER) -> ChainDecomposition:
    """Follow lower -> upper pairs from every element nothing maps onto."""
    succ = om.successor_map()
    hit = set(succ.values())
    chains = []
    for lam in enumerate_box(om.box):
        if lam in hit:
            continue
        run = [lam]
        while run[-1] in succ:
            run.append(succ[run[-1]])
        chains.append(Chain(tuple(run)))
    chains.sort(key=lambda c: c.start)
    log.debug("threaded %s chains from %s matching on %sx%s", len(chains), om.method, om.box.m, om.box.n)
    return ChainDecomposition(box=om.box, chains=tuple(chains), kind=kind)


def _start_params_l4(mu: Sequence[int]) -> Tuple[int, int, int]:
    k = mu[2] // 2
    ell = mu[1] - 4 * k
    s = mu[0] - mu[1] - 2 * k
    return k, s, ell


def family_step_report_l4(dec: ChainDecomposition) -> List[FamilyStepEntry]:
    """Observed step counts per starting family next to the closed constants.

    A (6k,4k,2k,0): 4n-24k; B (6k+l,4k+l,2k,0): 4n-24k-4l;
    C (6k+r,4k,2k,0): 3n-18k-2. The two-parameter family only carries
    D = 2l+2r-7 and E = 2n-12k-5 for comparison.
    """
    n = dec.box.n
    out = []
    for chain in dec.sorted_chains():
        k, s, ell = _start_params_l4(chain.start)
        constants: Dict[str, int] = {}
        if s == 0 and ell == 0:
            family, expected = "A", 4 * n - 24 * k
            constants["A"] = expected
        elif s == 0:
            family, expected = "B", 4 * n - 24 * k - 4 * ell
            constants["B"] = expected
        elif ell == 0:
            family, expected = "C", 3 * n - 18 * k - 2
            constants["C"] = expected
        else:
            family, expected = "D", None
            constants["D"] = 2 * ell + 2 * s - 7
            constants["E"] = 2 * n - 12 * k - 5
        out.append(FamilyStepEntry(chain.start, family, k, s, ell, chain.steps, expected, constants))
    return out


def chains_l4(n: int) -> ChainDecomposition:
    box = BoxShape(4, n)
    om = ga_full(box)
    if not om.complete:
        first = om.incomplete_levels()[0]
        raise DecompositionInvalid(
            f"greedy matching of L(4,{n}) is incomplete at rank {first.rank}: {first.unmatched[0]} unmatched"
        )
    dec = chains_from_matching(om)
    report = validate_decomposition(dec)
    if not report.ok:
        raise DecompositionInvalid(f"L(4,{n}) greedy chains: {report.problems[0]}")
    starts = set(dec.starts())
    want = s4_starting_set(n)
    if starts != want:
        extra = sorted(starts - want)
        missing = sorted(want - starts)
        raise DecompositionInvalid(f"L(4,{n}) chain starts differ from S_(4,{n}): extra {extra}, missing {missing}")
    for entry in family_step_report_l4(dec):
        if not entry.matches:
            raise DecompositionInvalid(
                f"L(4,{n}) chain from {entry.start} ({entry.family} family) has {entry.steps} steps, "
                f"expected {entry.expected}"
            )
    log.info("greedy decomposition of L(4,%s): %s chains", n, len(dec))
    return dec


def type_sequence_l4(chain: Chain) -> List[str]:
    return [classify_l4(lam).type_tag for lam in chain]


# ------------------------------ Validation ---------------------------------

def validate_decomposition(
    dec: ChainDecomposition,
    ground: Optional[Iterable[Partition]] = None,
    kind: Optional[DecompositionKind] = None,
) -> ValidationReport:
    """Disjoint cover of ``ground`` by saturated chains plus the rank rule of ``kind``.

    ``ground`` defaults to the whole box, or to the half lattice for
    U-decompositions; ``kind`` defaults to the decomposition's own.
    """
    box = dec.box
    kind = kind or dec.kind
    mid = box.middle_rank
    if ground is None:
        if kind is DecompositionKind.U_DECOMPOSITION:
            ground = (lam for lam in enumerate_box(box) if rank(lam) <= box.u_rank)
        else:
            ground = enumerate_box(box)
    target: Set[Partition] = set(ground)
    report = ValidationReport(kind=kind, chains=len(dec.chains))

    seen: Set[Partition] = set()
    for chain in dec.chains:
        for lam in chain:
            report.elements += 1
            if lam in seen:
                report.fail(f"duplicate element {lam}", lam)
            seen.add(lam)
        for a, b in zip(chain.elements, chain.elements[1:]):
            if not is_cover(a, b):
                report.fail(f"chain from {chain.start} is not saturated between {a} and {b}", b)
                break
        lo, hi = chain.min_rank, chain.max_rank
        if kind is DecompositionKind.U_DECOMPOSITION:
            if hi != box.u_rank:
                report.fail(f"chain from {chain.start} tops out at rank {hi}, expected {box.u_rank}", chain.end)
        else:
            if not lo <= mid <= hi:
                report.fail(f"chain from {chain.start} spans ranks {lo}..{hi}, misses middle rank {mid}", chain.start)
            if kind is DecompositionKind.SYMMETRIC and lo + hi != box.top_rank:
                report.fail(f"chain from {chain.start} spans ranks {lo}..{hi}, not symmetric about {box.top_rank}/2",
                            chain.start)

    for lam in sorted(target - seen):
        report.fail(f"element {lam} is not covered", lam)
        break
    for lam in sorted(seen - target):
        report.fail(f"element {lam} lies outside the ground set", lam)
        break
    log.debug("validate %s on %sx%s: %s", kind.value, box.m, box.n, "ok" if report.ok else report.problems[0])
    return report


# ------------------------------- Tableaux ----------------------------------

def tableau_of_chain(chain: Chain, box: BoxShape) -> ChainTableau:
    if not box.contains(chain.start) or not box.contains(chain.end):
        raise NotSaturated(f"chain from {chain.start} does not fit in the {box.m}x{box.n} box")
    labels: Dict[Tuple[int, int], int] = {}
    for t, (a, b) in enumerate(zip(chain.elements, chain.elements[1:]), start=1):
        if not is_cover(a, b):
            raise NotSaturated(f"step {t} of chain from {chain.start}: {b} does not cover {a}")
        row = next(i for i in range(len(a)) if a[i] != b[i])
        labels[(row + 1, b[row])] = t
    return ChainTableau(box=box, base=chain.start, labels=labels)


def tableaux(dec: ChainDecomposition) -> List[ChainTableau]:
    """One tableau per chain, in starting-partition lex order."""
    return [tableau_of_chain(c, dec.box) for c in dec.sorted_chains()]
