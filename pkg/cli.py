#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""cli.py

Command line front end.

    python cli.py ranks 3 8
    python cli.py phi 8 --trace 2,0,0
    python cli.py greedy 4 6 [--rank 5]
    python cli.py chains 3 8 --method phi|closed|greedy|recud
    python cli.py tableau 3 8 --method phi --format ascii|svg|json|png [--out PATH]
    python cli.py verify 5 6 [--oracle]
    python cli.py smn 4 6
    python cli.py udec 4 6 [--seed-phi]

Standard output carries only the artifact; the run summary goes to stderr.
Exit status: 0 ok, 1 validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from datetime import datetime
from typing import List, Optional, Sequence

import config
from chain_decomposition import (
    ChainDecomposition,
    chains_from_matching,
    chains_from_phi,
    chains_l4,
    closed_form_decomposition_l3,
    s4_starting_set,
    tableaux,
    validate_decomposition,
)
from errors import (
    InvalidBox,
    LatticeError,
    NotWeaklyDecreasing,
    OutOfBox,
    RankOutOfRange,
    RecUDFailure,
    WrongLength,
)
from greedy_matcher import compare_with_phi, ga_full, ga_level, ga_level_down, phi_order_matching
from order_matching_l3 import boundary_sets, phi_table, phi_trace
from poset_core import BoxShape, make_partition, rank_profile
from recursive_udec import knead, rec_ud_tower, s2_formula, smn_tower, validate_u_decomposition
from render import FORMATS, render_many
from verify_oracle import certify_matching, certify_profile, max_level_matching

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2

METHODS = ("phi", "closed", "greedy", "recud")


class UsageError(Exception):
    pass


class Summary:
    """Lettered end-of-run lines, printed as one block on stderr."""

    def __init__(self, title: str):
        self.title = title
        self.lines: List[str] = []

    def add(self, text: str) -> None:
        letter = chr(ord("a") + len(self.lines))
        self.lines.append(f"{letter}) {text}")

    def emit(self, stream=None) -> None:
        if not config.PRINT_SUMMARY:
            return
        stream = stream or sys.stderr
        stamp = datetime.now().strftime("%d/%m/%Y %H:%M")
        out = ["", "=" * 60, f"📋 RUN SUMMARY: {self.title} ({stamp})", "=" * 60]
        out.extend(self.lines)
        out.append("=" * 60)
        print("\n".join(out), file=stream)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def parse_partition(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"partition must be comma-separated integers, got {text!r}") from None


def _box(args) -> BoxShape:
    return BoxShape(args.m, args.n)


# ------------------------------ Commands -----------------------------------

def cmd_ranks(args, summary: Summary) -> int:
    box = _box(args)
    prof = rank_profile(box)
    _write(_dump({
        "box": box.as_list(),
        "sizes": prof.to_json(),
        "total": str(prof.total),
        "symmetric": prof.is_symmetric(),
        "unimodal": prof.is_unimodal(),
        "peak": str(prof.peak),
        "peak_ranks": prof.peak_ranks,
    }), args.out)
    summary.add(f"BOX: {box.m}x{box.n}, {prof.total} partitions")
    summary.add(f"MIDDLE LEVEL: {prof[box.middle_rank]} at rank {box.middle_rank}")
    return EXIT_OK if prof.is_symmetric() and prof.is_unimodal() else EXIT_INVALID


def cmd_phi(args, summary: Summary) -> int:
    n = args.n
    BoxShape(3, n)
    if args.trace:
        lam = make_partition(parse_partition(args.trace), BoxShape(3, n))
        trace = phi_trace(lam, n)
        _write(_dump({"n": n, "trace": [list(p) for p in trace]}), args.out)
        summary.add(f"TRACE FROM {lam}: {len(trace) - 1} steps, ends {trace[-1]}")
        return EXIT_OK
    table = phi_table(n)
    _write(_dump({"n": n, "table": [[list(a), list(b)] for a, b in sorted(table.items())]}), args.out)
    sets = boundary_sets(n)
    summary.add(f"PHI ON L(3,{n}): {len(table)} arrows")
    summary.add(f"S_(3,{n}): {len(sets.starts)} starts, E_(3,{n}): {len(sets.ends)} ends")
    return EXIT_OK


def cmd_greedy(args, summary: Summary) -> int:
    box = _box(args)
    if args.rank is not None:
        if not 0 <= args.rank < box.top_rank:
            raise UsageError(f"--rank must lie in 0..{box.top_rank - 1}, got {args.rank}")
        lv = ga_level(box, args.rank) if args.rank < box.middle_rank else ga_level_down(box, args.rank)
        _write(_dump({"box": box.as_list(), "levels": [lv.to_json()]}), args.out)
        summary.add(f"GA {box.m}x{box.n} RANK {lv.rank} ({lv.direction.value}): {len(lv.pairs)} pairs, "
                    f"{len(lv.unmatched)} unmatched")
        return EXIT_OK
    om = ga_full(box)
    _write(_dump(om.to_json()), args.out)
    bad = om.incomplete_levels()
    summary.add(f"GA {box.m}x{box.n}: {len(om.levels)} levels, {len(bad)} incomplete")
    for lv in bad[:5]:
        summary.add(f"INCOMPLETE AT RANK {lv.rank} ({lv.direction.value}): first unmatched {lv.unmatched[0]}")
    return EXIT_OK


def build_decomposition(box: BoxShape, method: str) -> ChainDecomposition:
    if method in ("phi", "closed") and box.m != 3:
        raise UsageError(f"--method {method} needs m = 3, got m = {box.m}")
    if method == "phi":
        return chains_from_phi(box.n)
    if method == "closed":
        return closed_form_decomposition_l3(box.n)
    if method == "greedy":
        if box.m == 4:
            return chains_l4(box.n)
        return chains_from_matching(ga_full(box))
    if method == "recud":
        return knead(rec_ud_tower(box.m, box.n))
    raise UsageError(f"unknown method {method!r}")


def _chain_stats(dec: ChainDecomposition, summary: Summary) -> None:
    box = dec.box
    middle = rank_profile(box)[box.middle_rank]
    longest = max(len(c) for c in dec.chains)
    summary.add(f"CHAINS: {len(dec)} ({dec.element_count} elements, middle level {middle})")
    summary.add(f"LONGEST CHAIN: {longest} elements")


def cmd_chains(args, summary: Summary) -> int:
    box = _box(args)
    dec = build_decomposition(box, args.method)
    report = validate_decomposition(dec)
    _write(_dump(dec.to_json()), args.out)
    _chain_stats(dec, summary)
    summary.add(f"SPERNER CHECK: {'ok' if report.ok else report.problems[0]}")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_tableau(args, summary: Summary) -> int:
    box = _box(args)
    if args.format == "png" and not args.out:
        raise UsageError("--format png needs --out PATH")
    dec = build_decomposition(box, args.method)
    tabs = tableaux(dec)
    if args.format == "png":
        render_many(tabs, "png", path=args.out)
    else:
        _write(render_many(tabs, args.format), args.out)
    summary.add(f"TABLEAUX: {len(tabs)} ({args.format})")
    report = validate_decomposition(dec)
    summary.add(f"SPERNER CHECK: {'ok' if report.ok else report.problems[0]}")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_verify(args, summary: Summary) -> int:
    box = _box(args)
    asserted = box.m <= config.GREEDY_ASSERTED_MAX_M
    failed = False
    out = {"box": box.as_list()}

    prof = certify_profile(box, require_witness=asserted)
    out["profile"] = prof.to_json()
    summary.add(f"PROFILE: symmetric={prof.symmetric} unimodal={prof.unimodal} peak={prof.peak} "
                f"at {prof.peak_ranks}, witness={prof.witness_method}")
    failed |= not prof.ok

    om = ga_full(box)
    bad = om.incomplete_levels()
    out["greedy"] = {"complete": om.complete, "incomplete_ranks": [lv.rank for lv in bad]}
    summary.add(f"GA: {'complete' if om.complete else f'{len(bad)} incomplete level(s)'}")
    if bad and asserted:
        failed = True

    if box.m == 3:
        agree = compare_with_phi(box.n)
        out["phi_agreement"] = agree.to_json()
        summary.add(f"GA VS PHI: {agree.checked} partitions, {len(agree.disagreements)} disagreements")
        failed |= not agree.ok
        phi_cert = certify_matching(phi_order_matching(box.n))
        out["phi_certificate"] = phi_cert.to_json()
        summary.add(f"PHI LEVELS CERTIFIED: {'ok' if phi_cert.ok else phi_cert.problems[0]}")
        failed |= not phi_cert.ok

    if args.oracle:
        certs = [max_level_matching(box, i) for i in range(box.middle_rank)]
        out["oracle"] = [c.to_json() for c in certs]
        full = sum(1 for c in certs if c.full)
        summary.add(f"ORACLE: {full}/{len(certs)} levels below the middle admit a full matching")
        failed |= full != len(certs)
        ga_cert = certify_matching(om)
        out["greedy_certificate"] = ga_cert.to_json()
        summary.add(f"GA LEVELS CERTIFIED: {'ok' if ga_cert.ok else ga_cert.problems[0]}")
        failed |= not ga_cert.ok

    out["ok"] = not failed
    _write(_dump(out), args.out)
    return EXIT_INVALID if failed else EXIT_OK


def _closed_starts(box: BoxShape):
    if box.m == 2:
        return s2_formula(box.n)
    if box.m == 3:
        return boundary_sets(box.n).starts
    if box.m == 4:
        return s4_starting_set(box.n)
    return None


def cmd_smn(args, summary: Summary) -> int:
    box = _box(args)
    res = smn_tower(box.m, box.n)
    out = res.to_json()
    if not res.ok:
        out["failed_at"] = res.box.as_list()
        _write(_dump(out), args.out)
        summary.add(f"RECSMN FAILED AT {res.box.m}x{res.box.n}: {len(res.missing)} shifted ends unmatched")
        return EXIT_INVALID
    closed = _closed_starts(box)
    match = None if closed is None else set(res.starts) == set(closed)
    out["closed_form_match"] = match
    _write(_dump(out), args.out)
    summary.add(f"S_({box.m},{box.n}): {len(res.starts)} starting partitions")
    summary.add(f"CLOSED FORM: {'n/a' if match is None else ('match' if match else 'MISMATCH')}")
    return EXIT_INVALID if match is False else EXIT_OK


def cmd_udec(args, summary: Summary) -> int:
    box = _box(args)
    try:
        u = rec_ud_tower(box.m, box.n, seed_phi=args.seed_phi)
    except RecUDFailure as exc:
        _write(_dump({"box": box.as_list(), "ok": False, "alpha": list(exc.alpha) if exc.alpha else None,
                      "error": str(exc)}), args.out)
        summary.add(f"RECUD FAILED: {exc}")
        return EXIT_INVALID
    report = validate_u_decomposition(u)
    _write(_dump(u.to_json()), args.out)
    summary.add(f"U-DECOMPOSITION {box.m}x{box.n}: {len(u)} chains, top rank {box.u_rank}")
    summary.add(f"CHECK: {'ok' if report.ok else report.problems[0]}")
    return EXIT_OK if report.ok else EXIT_INVALID


COMMANDS = {
    "ranks": cmd_ranks,
    "phi": cmd_phi,
    "greedy": cmd_greedy,
    "chains": cmd_chains,
    "tableau": cmd_tableau,
    "verify": cmd_verify,
    "smn": cmd_smn,
    "udec": cmd_udec,
}


# ------------------------------- Parser ------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write the artifact to PATH instead of stdout")
    common.add_argument("--verbose", action="store_true", help="INFO logging")
    common.add_argument("--debug", action="store_true", help="DEBUG logging")

    p = _Parser(prog="cli.py", description="Order matchings and chain decompositions of L(m,n).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def box_cmd(name: str, help_text: str):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("m", type=int)
        sp.add_argument("n", type=int)
        return sp

    box_cmd("ranks", "rank profile")

    sp = sub.add_parser("phi", parents=[common], help="phi table of L(3,n) or one trace")
    sp.add_argument("n", type=int)
    sp.add_argument("--trace", metavar="A,B,C")

    sp = box_cmd("greedy", "greedy order matching")
    sp.add_argument("--rank", type=int)

    sp = box_cmd("chains", "chain decomposition JSON")
    sp.add_argument("--method", choices=METHODS, default="phi")

    sp = box_cmd("tableau", "chain tableaux")
    sp.add_argument("--method", choices=METHODS, default="phi")
    sp.add_argument("--format", choices=FORMATS, default="ascii")

    sp = box_cmd("verify", "profile, greedy and oracle certification")
    sp.add_argument("--oracle", action="store_true")

    box_cmd("smn", "starting set through the recursion")

    sp = box_cmd("udec", "U-decomposition through the recursion")
    sp.add_argument("--seed-phi", action="store_true", help="take the three-row level from phi")
    return p


def run(argv: Sequence[str]) -> int:
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    level = "DEBUG" if args.debug else ("INFO" if args.verbose else None)
    config.setup_logging(level)

    summary = Summary(" ".join([args.command] + [str(a) for a in argv[1:]]))
    try:
        code = COMMANDS[args.command](args, summary)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LatticeError as exc:
        if _is_input_error(exc):
            print(f"usage error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        log.error("%s: %s", type(exc).__name__, exc)
        summary.add(f"ERROR: {type(exc).__name__}: {exc}")
        code = EXIT_INVALID
    summary.add(f"EXIT STATUS: {code}")
    summary.emit()
    return code


def _is_input_error(exc: Exception) -> bool:
    return isinstance(exc, (InvalidBox, NotWeaklyDecreasing, OutOfBox, WrongLength, RankOutOfRange))


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    raise SystemExit(main())
