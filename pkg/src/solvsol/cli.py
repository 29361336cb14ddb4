"""Command-line surface: check, sweep, export, oracles.

Exit codes: 0 success (for `check`, regardless of the verdict sign), 1 a
sweep row disagreed with its expected column, 2 grammar error, 3 the normal's
orthocomplement is not a subalgebra (a meaningful outcome distinct from "not
a soliton").
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hypersurface, soliton, spaces, sweeps


def _print_json(doc: dict, pretty: bool):
    if pretty:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(json.dumps(doc, sort_keys=True))


def cmd_check(args) -> int:
    space = spaces.parse_space(args.space)
    xi = spaces.xi_from_spec(space, args.xi)
    try:
        surf = hypersurface.construct(space.base, xi)
    except hypersurface.NotSubalgebraError:
        _print_json(
            {"space": spaces.space_name(space), "xi_spec": args.xi, "subalgebra": False},
            args.pretty,
        )
        return 3
    verdict = soliton.decide(surf.sub)
    if not soliton.verify_certificate(surf.sub, verdict):
        raise AssertionError("verdict failed its own re-verification")
    doc = {
        "space": spaces.space_name(space),
        "xi_spec": args.xi,
        "subalgebra": True,
        "dim_hypersurface": surf.sub.dim,
    }
    doc.update(verdict.to_json_dict())
    _print_json(doc, args.pretty)
    return 0


def cmd_sweep(args) -> int:
    report = sweeps.run_sweep(args.suite, seed=args.seed)
    text = sweeps.report_json(report, pretty=args.pretty)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failed = report["summary"]["failed"]
    if failed:
        print(f"{failed} row(s) disagreed", file=sys.stderr)
        return 1
    return 0


def cmd_export(args) -> int:
    space = spaces.parse_space(args.space)
    doc = space.base.to_json_dict()
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracles(args) -> int:
    args.suite = "oracles"
    return cmd_sweep(args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solvsol",
        description=(
            "Exact soliton verdicts for codimension-one subgroups of generalized "
            "Heisenberg groups N(m,k), Damek-Ricci spaces AN(m,k), and the "
            "Iwasawa groups of SL(n,R)/SO(n)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide one (space, normal) pair")
    p_check.add_argument("space", help="N(m,k) | N(m,k+,k-) | AN(...) | SL(n)")
    p_check.add_argument("xi", help="normal spec, e.g. v:basis:0 or aHX:t=1/3")
    p_check.add_argument("--pretty", action="store_true")
    p_check.set_defaults(fn=cmd_check)

    p_sweep = sub.add_parser("sweep", help="run a full suite and emit a JSON report")
    p_sweep.add_argument("suite", choices=sweeps.SUITES)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--out", default=None)
    p_sweep.add_argument("--pretty", action="store_true")
    p_sweep.set_defaults(fn=cmd_sweep)

    p_export = sub.add_parser("export", help="write a space as structure constants + Gram")
    p_export.add_argument("space")
    p_export.add_argument("--out", default=None)
    p_export.set_defaults(fn=cmd_export)

    p_or = sub.add_parser("oracles", help="run the closed-form cross-check battery")
    p_or.add_argument("--seed", type=int, default=0)
    p_or.add_argument("--out", default=None)
    p_or.add_argument("--pretty", action="store_true")
    p_or.set_defaults(fn=cmd_oracles)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except spaces.GrammarError as exc:
        print(f"grammar error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
