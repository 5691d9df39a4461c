"""Command-line surface: check, fill, lift, laws, gp.

Exit codes: 0 — all checks pass; 1 — a mathematical identity fails (axiom
violation, unfillable horn, law failure); 2 — input error (unreadable or
malformed documents, bad arguments).  Reports are deterministic: the same
inputs and seed produce byte-identical output, in both text and JSON form.
"""

from __future__ import annotations

import argparse
import json
import os
import pathlib
import sys
import tempfile
from typing import Any, Mapping, Sequence

from . import jsonio, laws
from .dgcat import DgCategory, Violation, check_axioms
from .fixtures import fixture_by_name, standard_fixtures
from .horn import (CannotFillOuterHorn, HornError, IncompatibleHorn,
                   check_gp, check_horn, complete_horn, fill_horn,
                   lift_filler)
from .mc import check_mc, reduce_category
from .nerve import validate_simplex, validate_star

PASS, FAIL, USAGE = 0, 1, 2


class CliInputError(Exception):
    """Unparseable or inconsistent input: exit code 2."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dgnerve",
        description="Exact checks, horn filling, and square-zero lifting "
                    "for finite dg-categories and their coherent nerves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, category: bool = True) -> None:
        if category:
            p.add_argument("--category", default="three_term",
                           help="category JSON path, or a fixture name "
                                "(default: three_term; known fixtures: "
                                + ", ".join(n for n, _ in standard_fixtures())
                                + ")")
        p.add_argument("--out", help="write the JSON report/document here")
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="stdout format (default: text)")

    p = sub.add_parser("check", help="check a category, simplex, or horn "
                                     "document against the exact identities")
    p.add_argument("input", help="path to a JSON document")
    p.add_argument("--star", action="store_true",
                   help="for simplices: also require equivalence witnesses "
                        "on every edge")
    common(p)

    p = sub.add_parser("fill", help="fill a horn document")
    p.add_argument("input", help="path to a horn JSON document")
    p.add_argument("--n", type=int, help="expected dimension (consistency "
                                         "check against the document)")
    p.add_argument("--k", type=int, help="expected horn index")
    common(p)

    p = sub.add_parser("lift", help="lift a mod-ideal filler through a "
                                    "square-zero extension")
    p.add_argument("input", help="path to a horn JSON document over the "
                                 "extended ring")
    p.add_argument("filler", help="path to the mod-ideal filler JSON")
    common(p)

    p = sub.add_parser("laws", help="run the randomized identity battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    common(p)

    p = sub.add_parser("gp", help="randomized horn-extension sweep at (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    common(p)

    return parser


# -- plumbing -------------------------------------------------------------------

def _load_doc(path: str) -> Mapping:
    try:
        text = pathlib.Path(path).read_text()
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliInputError(f"{path}: invalid JSON at line {exc.lineno}, "
                            f"column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, Mapping):
        raise CliInputError(f"{path}: top-level JSON value must be an object")
    return doc


def _load_category(source: str) -> DgCategory:
    if not os.path.exists(source):
        try:
            return fixture_by_name(source)
        except KeyError as exc:
            raise CliInputError(
                f"--category {source!r} is neither a readable file nor a "
                f"fixture name ({exc.args[0]})") from exc
    doc = _load_doc(source)
    try:
        return jsonio.category_from_json(doc)
    except ValueError as exc:
        raise CliInputError(f"{source}: {exc}") from exc


def _write_out(path: str, payload: str) -> None:
    target = pathlib.Path(path)
    fd, tmp = tempfile.mkstemp(dir=str(target.parent or "."),
                               prefix=target.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(payload)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(args: argparse.Namespace, doc: dict, text_lines: list[str]) -> None:
    payload = jsonio.canonical_dumps(doc)
    if args.out:
        _write_out(args.out, payload)
    if args.format == "json":
        sys.stdout.write(payload)
    else:
        sys.stdout.write("".join(line + "\n" for line in text_lines))


def _violations_doc(violations: Sequence[Violation]) -> list[dict]:
    return [v.to_json() for v in
            sorted(violations, key=lambda v: (v.kind, str(v.location)))]


def _violation_lines(violations: Sequence[Violation]) -> list[str]:
    return [f"FAIL {v['kind']} @ ({', '.join(v['location'])}): {v['detail']}"
            for v in violations]


# -- commands --------------------------------------------------------------------

def cmd_check(args: argparse.Namespace) -> int:
    doc = _load_doc(args.input)
    try:
        kind = jsonio.detect_kind(doc)
        if kind == "category":
            subject = jsonio.category_from_json(doc)
            violations = check_axioms(subject)
        elif kind == "simplex":
            cat = _load_category(args.category)
            simplex = jsonio.simplex_from_json(doc, cat)
            checker = validate_star if args.star else validate_simplex
            violations = checker(cat, simplex)
        elif kind == "horn":
            cat = _load_category(args.category)
            violations = check_horn(cat, jsonio.horn_from_json(doc, cat))
        elif kind == "mc":
            cat = _load_category(args.category)
            violations = check_mc(cat, jsonio.mc_from_json(doc, cat))
        else:
            raise CliInputError(f"cannot check a {kind!r} document on its "
                                "own; check the completed simplex instead")
    except ValueError as exc:
        raise CliInputError(f"{args.input}: {exc}") from exc
    vio = _violations_doc(violations)
    report = {"kind": "check_report", "subject": kind,
              "ok": not vio, "violations": vio}
    lines = ([f"ok: {kind} passes all checks"] if not vio
             else _violation_lines(vio))
    _emit(args, report, lines)
    return PASS if not vio else FAIL


def cmd_fill(args: argparse.Namespace) -> int:
    doc = _load_doc(args.input)
    cat = _load_category(args.category)
    try:
        horn = jsonio.horn_from_json(doc, cat)
    except ValueError as exc:
        raise CliInputError(f"{args.input}: {exc}") from exc
    if args.n is not None and args.n != horn.n:
        raise CliInputError(f"--n {args.n} does not match the document "
                            f"(n = {horn.n})")
    if args.k is not None and args.k != horn.k:
        raise CliInputError(f"--k {args.k} does not match the document "
                            f"(k = {horn.k})")
    try:
        filler = fill_horn(cat, horn)
    except IncompatibleHorn as exc:
        report = {"kind": "fill_report", "ok": False,
                  "error": "incompatible_horn",
                  "violations": _violations_doc(exc.violations)}
        _emit(args, report, ["FAIL incompatible horn:"]
              + _violation_lines(report["violations"]))
        return FAIL
    except CannotFillOuterHorn as exc:
        report = {"kind": "fill_report", "ok": False,
                  "error": "cannot_fill_outer_horn", "detail": str(exc)}
        _emit(args, report, [f"FAIL {exc}"])
        return FAIL
    out_doc = jsonio.filler_to_json(filler, horn.objects)
    residues = validate_simplex(cat, complete_horn(horn, filler))
    if residues:  # defensive: should be unreachable
        _emit(args, {"kind": "fill_report", "ok": False,
                     "error": "filler_failed_validation",
                     "violations": _violations_doc(residues)},
              ["FAIL filler failed validation"])
        return FAIL
    _emit(args, out_doc,
          [f"filled ({horn.n}, {horn.k}) horn; completed simplex validates"])
    return PASS


def cmd_lift(args: argparse.Namespace) -> int:
    cat = _load_category(args.category)
    horn_doc = _load_doc(args.input)
    filler_doc = _load_doc(args.filler)
    reduced = reduce_category(cat)
    try:
        horn = jsonio.horn_from_json(horn_doc, cat)
        filler_mod = jsonio.filler_from_json(filler_doc, reduced)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    try:
        lifted = lift_filler(cat, horn, filler_mod)
    except HornError as exc:
        _emit(args, {"kind": "lift_report", "ok": False,
                     "error": type(exc).__name__, "detail": str(exc)},
              [f"FAIL {exc}"])
        return FAIL
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    _emit(args, jsonio.filler_to_json(lifted, horn.objects),
          [f"lifted ({horn.n}, {horn.k}) filler through the rank-"
           f"{cat.ring.ideal_rank} square-zero ideal"])
    return PASS


def cmd_laws(args: argparse.Namespace) -> int:
    if args.trials < 0:
        raise CliInputError("--trials must be nonnegative")
    cat = _load_category(args.category)
    axioms = check_axioms(cat)
    if axioms:
        vio = _violations_doc(axioms)
        _emit(args, {"kind": "laws_report", "ok": False,
                     "error": "category_axioms", "violations": vio},
              ["FAIL category axioms:"] + _violation_lines(vio))
        return FAIL
    report = laws.run_laws(cat, seed=args.seed, trials=args.trials)
    failures = sum(row["fail"] for row in report["laws"])
    lines = [f"{row['name']}: pass {row['pass']} fail {row['fail']}"
             for row in report["laws"]]
    lines.append("all laws hold" if failures == 0
                 else f"{failures} law failures (seeds in JSON report)")
    _emit(args, report, lines)
    return PASS if failures == 0 else FAIL


def cmd_gp(args: argparse.Namespace) -> int:
    cat = _load_category(args.category)
    try:
        report = check_gp(cat, args.n, args.k, trials=args.trials,
                          seed=args.seed)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    lines = []
    failures = 0
    for mode in report["modes"]:
        failures += mode["fill_fail"] + mode["lift_fail"]
        lines.append(
            f"gp n={report['n']} k={report['k']} mode={mode['mode']}: "
            f"fill {mode['fill_pass']}/{report['trials']} "
            f"lift {mode['lift_pass']}/{report['trials']} "
            f"witness_calls={mode['witness_calls']}")
        for failure in mode["failures"]:
            lines.append(f"  FAIL trial {failure['trial']} "
                         f"stage={failure['stage']} seed={failure['seed']}: "
                         f"{failure['detail']}")
    lines.append("all trials pass" if failures == 0
                 else f"{failures} failing trials")
    _emit(args, report, lines)
    return PASS if failures == 0 else FAIL


COMMANDS = {"check": cmd_check, "fill": cmd_fill, "lift": cmd_lift,
            "laws": cmd_laws, "gp": cmd_gp}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
