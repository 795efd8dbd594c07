"""Command-line front end.

Exit codes: 0 = confirmed / pass, 1 = counterexample or violated inequality,
2 = usage or budget error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from typing import Optional

from . import bounds, classify, lemmas
from .errors import BudgetExceededError
from .group import GroupSpec
from .sequences import Sequence
from .sums import sums_by_length

_GROUP_RE = re.compile(r"^C(\d+)(?:xC(\d+))*$")


def parse_group(text: str) -> GroupSpec:
    if not re.fullmatch(r"C\d+(?:xC\d+)*", text):
        raise ValueError(f"malformed group spec {text!r}; expected e.g. C12 or C2xC4")
    orders = [int(part[1:]) for part in text.split("x")]
    if any(m < 2 for m in orders):
        raise ValueError("cyclic factors must have modulus >= 2")
    return GroupSpec(orders)


def _split_atoms(text: str) -> list[str]:
    """Split on commas not nested inside parentheses."""
    atoms, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            atoms.append("".join(cur))
            cur = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses in sequence")
        cur.append(ch)
    if depth:
        raise ValueError("unbalanced parentheses in sequence")
    atoms.append("".join(cur))
    return atoms


def parse_element(G: GroupSpec, text: str) -> int:
    text = text.strip()
    if len(G.orders) > 1:
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError(f"element {text!r} must be a coordinate tuple for {G.spec_string()}")
        coords = [int(c) for c in text[1:-1].split(",")]
        return G.encode(coords)
    g = int(text)
    G.check_element(g)
    return g


def parse_sequence(G: GroupSpec, text: str) -> Sequence:
    pairs = []
    for atom in _split_atoms(text):
        atom = atom.strip()
        if not atom:
            raise ValueError("empty atom in sequence literal")
        if "^" in atom:
            elem_text, mult_text = atom.rsplit("^", 1)
            mult = int(mult_text)
            if mult < 0:
                raise ValueError("negative multiplicity")
        else:
            elem_text, mult = atom, 1
        pairs.append((parse_element(G, elem_text), mult))
    return Sequence.from_pairs(G, pairs)


def _emit(report: dict, json_path: Optional[str], human_lines: list[str]) -> None:
    for line in human_lines:
        print(line)
    if json_path:
        payload = json.dumps(report, indent=2, sort_keys=True) + "\n"
        if json_path == "-":
            sys.stdout.write(payload)
        else:
            with open(json_path, "w") as fh:
                fh.write(payload)


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("ZEROSUM_JOBS", "1")))
    except ValueError:
        return 1


def _cmd_analyze(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    S = parse_sequence(G, args.sequence)
    table = sums_by_length(S)
    lengths = sorted(table.zero_lengths())
    report = {
        "schema": "1",
        "group": G.spec_string(),
        "sequence": S.to_text(),
        "length": S.length,
        "lengths": lengths,
        "unique_r": lengths[0] if len(lengths) == 1 else None,
        "support": [G.format_element(g) for g in S.support()],
        "row_cardinalities": list(table.cardinalities()),
    }
    _emit(report, args.json, [
        f"group {report['group']}  sequence {report['sequence']}  |S|={report['length']}",
        f"zero-sum lengths: {lengths}  unique_r: {report['unique_r']}",
        f"support: {report['support']}",
    ])
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    rep = classify.verify_theorem(
        G, up_to_automorphism=not args.no_aut, jobs=args.jobs
    )
    d = rep.to_dict()
    _emit(d, args.json, [
        f"group {rep.group}: {rep.total} multisets, {rep.representatives} representatives",
        f"qualifying {rep.qualifying}, matched {rep.matched}, "
        f"mismatches {len(rep.mismatches)}, support violations {len(rep.support_violations)}",
        "theorem confirmed" if rep.ok else "DISCREPANCY FOUND",
    ])
    return 0 if rep.ok else 1


def _cmd_families(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    instances = classify.enumerate_families(G)
    report = {
        "schema": "1",
        "group": G.spec_string(),
        "count": len(instances),
        "instances": [inst.describe(G) for inst in instances],
    }
    lines = [f"group {G.spec_string()}: {len(instances)} family instances"]
    lines += [
        f"  {d['tag']:<15} g={d['g']} aux={d['aux']} x={d['x']} r={d['r']}  {d['sequence']}"
        for d in report["instances"]
    ]
    _emit(report, args.json, lines)
    return 0


def _cmd_davenport(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    start = time.perf_counter()
    d = bounds.davenport(G)
    report = {
        "schema": "1",
        "group": G.spec_string(),
        "davenport": d,
        "upper_bound_ok": d <= G.n,
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
    }
    _emit(report, args.json, [f"D({G.spec_string()}) = {d}"])
    return 0 if report["upper_bound_ok"] else 1


def _cmd_bounds_dgm(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    report = bounds.dgm_random_trials(G, args.trials, args.seed)
    report["schema"] = "1"
    _emit(report, args.json, [
        f"dgm {G.spec_string()}: {args.trials} trials, {len(report['failures'])} failures"
    ])
    return 0 if report["ok"] else 1


def _cmd_bounds_cd(args: argparse.Namespace) -> int:
    if args.exhaustive:
        report = bounds.cd_exhaustive(args.p)
        summary = f"cd p={args.p} exhaustive: {report['pairs']} pairs"
    else:
        report = bounds.cd_random_trials(args.p, args.trials, args.seed)
        summary = f"cd p={args.p}: {args.trials} trials"
    report["schema"] = "1"
    _emit(report, args.json, [f"{summary}, {len(report['failures'])} failures"])
    return 0 if report["ok"] else 1


def _cmd_bounds_prop21(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    report = bounds.prop21_exhaustive(G)
    report["schema"] = "1"
    _emit(report, args.json, [
        f"prop21 {G.spec_string()}: {report['pairs']} pairs, {len(report['failures'])} failures"
    ])
    return 0 if report["ok"] else 1


def _cmd_lemmas(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    if args.which == "31":
        report = lemmas.check_lemma31(G, max_len=args.max_len)
    elif args.which == "32":
        if len(G.orders) != 1:
            raise ValueError("lemma 32 is stated over a single cyclic group")
        report = lemmas.check_lemma32(G.n)
    else:
        report = lemmas.check_lemma33(G)
    report["schema"] = "1"
    _emit(report, args.json, [
        f"lemma {args.which} over {G.spec_string()}: "
        f"{report['satisfying']} hypothesis-satisfying, "
        f"{len(report['counterexamples'])} counterexamples"
    ])
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerosum",
        description="Zero-sum sequence tools: subsequence-sum analysis, "
        "Davenport constants, inequality checkers, and exhaustive "
        "verification of the unique-zero-sum-length classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="zero-sum profile of one sequence")
    p.add_argument("group")
    p.add_argument("sequence")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="exhaustive classification sweep")
    p.add_argument("group")
    p.add_argument("--no-aut", action="store_true", help="disable automorphism dedup")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("families", help="list all classification family members")
    p.add_argument("group")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser("davenport", help="Davenport constant by brute force")
    p.add_argument("group")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_davenport)

    pb = sub.add_parser("bounds", help="inequality checkers")
    bsub = pb.add_subparsers(dest="bounds_command", required=True)

    p = bsub.add_parser("dgm", help="stabilizer lower bound, random trials")
    p.add_argument("group")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_bounds_dgm)

    p = bsub.add_parser("cd", help="Cauchy-Davenport over a prime")
    p.add_argument("p", type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_bounds_cd)

    p = bsub.add_parser("prop21", help="representation-count proposition, exhaustive")
    p.add_argument("group")
    p.add_argument("--exhaustive", action="store_true", default=True)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_bounds_prop21)

    p = sub.add_parser("lemmas", help="lemma implication oracles")
    p.add_argument("which", choices=["31", "32", "33"])
    p.add_argument("group")
    p.add_argument("--max-len", type=int, default=lemmas.DEFAULT_LEMMA31_MAX_LEN)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_lemmas)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
