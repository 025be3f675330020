"""Command-line interface.

Subcommands:
  klreg pair   --v <perm> --w <perm> [--render] [--oracle] [--recurrence]
  klreg ladder --file <path> [--render] [--oracle] [--export-ideal <path>]
  klreg sweep  --n <k> --samples <m> [--seed <s>]

Permutations are JSON arrays or separator-delimited words; compact digit
strings are accepted only below S_10.  The KLREG_BUDGET environment
variable overrides the oracle enumeration budget.  Exit codes: 0 success,
1 oracle disagreement, 2 parse error, 3 validation error, 4 budget
exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import ladder as lad
from . import oracle, zipdiag
from .errors import KlregError, ParseError, ResourceError, ValidationError
from .perm import Permutation, coxeter_length
from .skew import render_diagram

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_RESOURCE = 4


def parse_permutation(text: str) -> Permutation:
    """JSON array, separated word, or (below S_10 only) compact digits."""
    text = text.strip()
    try:
        data = json.loads(text)
        if isinstance(data, list) and all(isinstance(x, int) for x in data):
            return Permutation(tuple(data))
    except (json.JSONDecodeError, ValidationError) as exc:
        if isinstance(exc, ValidationError):
            raise ParseError(str(exc)) from exc
    cleaned = text.replace(",", " ").split()
    if len(cleaned) > 1:
        try:
            return Permutation(tuple(int(x) for x in cleaned))
        except (ValueError, ValidationError) as exc:
            raise ParseError(f"bad permutation word {text!r}: {exc}") from exc
    if text.isdigit():
        if len(text) > 9:
            raise ParseError(
                f"{text!r} is ambiguous: entries above 9 need separators or JSON"
            )
        try:
            return Permutation(tuple(int(ch) for ch in text))
        except ValidationError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"cannot parse permutation from {text!r}")


def _budget(args) -> int:
    env = os.environ.get("KLREG_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError(f"KLREG_BUDGET must be an integer, got {env!r}") from exc
    return oracle.DEFAULT_BUDGET


def run_pair(args) -> tuple[dict, int]:
    v = parse_permutation(args.v)
    w = parse_permutation(args.w)
    result = zipdiag.zip_result(v, w)
    report = {
        "mode": "pair",
        "v": list(v.word),
        "w": list(w.word),
        "ell_v": coxeter_length(v),
        "ell_w": coxeter_length(w),
        "groth_degree": result.degree,
        "regularity": result.regularity,
        "a_invariant": result.a_invariant,
    }
    code = EXIT_OK
    if args.recurrence:
        report["recurrence_degree"] = zipdiag.groth_degree_recursive(v, w)
    if args.oracle:
        closure_max = oracle.max_closure_size(v, w, budget=_budget(args))
        agree = closure_max == result.degree
        report["oracle"] = {
            "closure_max": closure_max,
            "verdict": "AGREE" if agree else "DISAGREE",
        }
        if not agree:
            code = EXIT_DISAGREE
    if args.render:
        extra = result.d_zip_k.pluses - result.d_zip.pluses
        report["render"] = {
            "d_top": render_diagram(result.d_top),
            "d_zip": render_diagram(result.d_zip),
            "d_zip_k": render_diagram(result.d_zip, bold=extra),
        }
    return report, code


def run_ladder(args) -> tuple[dict, int]:
    try:
        with open(args.file, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {args.file}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{args.file} is not valid JSON: {exc}") from exc
    ladder = lad.ladder_from_json(data)
    v, w = lad.perm_of(ladder)
    bp = lad.boundary_points(ladder)
    bot = lad.p_bot(ladder)
    zipped = lad.p_zip(ladder)
    reg = len(lad.elbows(ladder, zipped))
    wt = lad.weight(ladder)
    report = {
        "mode": "ladder",
        "cells": lad.cell_count(ladder),
        "weight": wt,
        "blanks_bot": len(lad.blanks(ladder, bot)),
        "elbows": reg,
        "regularity": reg,
        "a_invariant": reg - wt,
        "ell_v": coxeter_length(v),
        "ell_w": coxeter_length(w),
        "v": list(v.word),
        "w": list(w.word),
        "boundary": {
            "H": [list(p) for p in bp.h],
            "V": [list(p) for p in bp.v],
        },
        "minimal": lad.validate_minimal(ladder).passed,
    }
    code = EXIT_OK
    if args.oracle:
        zip_reg = zipdiag.regularity(v, w)
        zip_a = zipdiag.a_invariant(v, w)
        agree = (zip_reg, zip_a) == (reg, reg - wt)
        report["oracle"] = {
            "pair_regularity": zip_reg,
            "pair_a_invariant": zip_a,
            "verdict": "AGREE" if agree else "DISAGREE",
        }
        if not agree:
            code = EXIT_DISAGREE
    if args.render:
        report["render"] = lad.render_paths(ladder, zipped)
    if args.export_ideal:
        from .ideals import ideal_script, ladder_generators

        gens = ladder_generators(ladder)
        variables = {c for g in gens for m, _ in g.terms for c in m}
        with open(args.export_ideal, "w", encoding="utf-8") as fh:
            fh.write(ideal_script(gens, variables))
        report["exported_ideal"] = args.export_ideal
    return report, code


def run_sweep(args) -> tuple[dict, int]:
    rng = random.Random(args.seed)
    budget = _budget(args)
    disagreements = []
    checked = 0
    for _ in range(args.samples):
        v, w = oracle.random_avoiding_pair(rng, args.n)
        by_zip = zipdiag.groth_degree(v, w)
        by_rec = zipdiag.groth_degree_recursive(v, w)
        by_closure = oracle.max_closure_size(v, w, budget=budget)
        checked += 1
        if not by_zip == by_rec == by_closure:
            disagreements.append(
                {
                    "v": list(v.word),
                    "w": list(w.word),
                    "zip": by_zip,
                    "recurrence": by_rec,
                    "closure": by_closure,
                }
            )
    report = {
        "mode": "sweep",
        "n": args.n,
        "samples": args.samples,
        "checked": checked,
        "disagreements": disagreements,
    }
    return report, EXIT_DISAGREE if disagreements else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="klreg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    pair = sub.add_parser("pair", help="regularity data for a permutation pair")
    pair.add_argument("--v", required=True)
    pair.add_argument("--w", required=True)
    pair.add_argument("--render", action="store_true")
    pair.add_argument("--oracle", action="store_true")
    pair.add_argument("--recurrence", action="store_true")
    pair.set_defaults(run=run_pair)

    ladd = sub.add_parser("ladder", help="regularity data for a ladder file")
    ladd.add_argument("--file", required=True)
    ladd.add_argument("--render", action="store_true")
    ladd.add_argument("--oracle", action="store_true")
    ladd.add_argument("--export-ideal", dest="export_ideal")
    ladd.set_defaults(run=run_ladder)

    sweep = sub.add_parser("sweep", help="randomized three-route degree check")
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--samples", type=int, required=True)
    sweep.add_argument("--seed", type=int, default=2023)
    sweep.set_defaults(run=run_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValidationError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except KlregError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    print(json.dumps(report, sort_keys=True, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
