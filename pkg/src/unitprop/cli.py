"""Command-line front end.

Subcommands mirror the library: propagate and trace run the engines on a
DIMACS file, reduce-c2p / reduce-p2c / compose-upac build the derived
formulas, and verify-upi / verify-upac / verify-hm sweep assignments and
report verdicts.  Exit status: 0 success or HOLDS, 1 conflict or FAILS,
2 usage, parse, or domain errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cnf import CnfFormula, DimacsError, assignment, emit_dimacs, parse_dimacs, restrict
from .constraints import enumerate_partials, parse_constraint
from .propagate import (
    propagate_fixpoint,
    propagate_staged,
    render_outcome,
    render_trace,
    trace_records,
)
from .reductions import compose_upac, contra_to_prop, prop_to_contra, render_simulation_map
from .verify import (
    Verdict,
    check_stage_correspondence,
    is_upac,
    is_upi,
    render_verdict,
)


def _read_formula(path: str) -> CnfFormula:
    return parse_dimacs(Path(path).read_text())


def _parse_assign(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        literals = [int(tok) for tok in text.split()]
    except ValueError:
        raise ValueError(f"bad assignment syntax {text!r}: expected signed integers")
    return assignment(literals)


def _write_or_print(formula: CnfFormula, output: str | None) -> bool:
    """Write DIMACS to the output path, or to stdout when none given.
    Returns whether a path was written (stdout then stays free for a
    summary line)."""
    text = emit_dimacs(formula)
    if output:
        Path(output).write_text(text)
        return True
    print(text, end="")
    return False


def _cmd_propagate(args: argparse.Namespace) -> int:
    formula = _read_formula(args.cnf)
    assn = _parse_assign(args.assign)
    if args.seed:
        outcome = propagate_fixpoint(formula, assn)
    else:
        outcome = propagate_fixpoint(restrict(formula, assn))
    print(render_outcome(outcome))
    return 1 if outcome.conflicted else 0


def _cmd_trace(args: argparse.Namespace) -> int:
    formula = _read_formula(args.cnf)
    assn = _parse_assign(args.assign)
    if args.records and not args.staged:
        print("error: --records requires --staged", file=sys.stderr)
        return 2
    if args.staged:
        if args.seed:
            trace = propagate_staged(formula, assn, max_stages=args.max_stages)
        else:
            trace = propagate_staged(
                restrict(formula, assn), max_stages=args.max_stages
            )
        if args.records:
            for record in trace_records(trace):
                print(f"RECORD {record}")
        else:
            print(render_trace(trace))
        return 0
    if args.seed:
        outcome = propagate_fixpoint(formula, assn)
    else:
        outcome = propagate_fixpoint(restrict(formula, assn))
    print(render_outcome(outcome))
    return 0


def _cmd_reduce_c2p(args: argparse.Namespace) -> int:
    source = _read_formula(args.cnf)
    red = contra_to_prop(source, first_aux=args.first_aux)
    if args.map:
        Path(args.map).write_text(render_simulation_map(red.map))
    wrote = _write_or_print(red.formula, args.output)
    if wrote:
        counts = red.family_counts
        print(
            f"REDUCED clauses={len(source.clauses)}->{len(red.formula.clauses)}"
            f" vars={source.num_vars}->{red.formula.num_vars}"
            f" output={red.map.output_var}"
            f" counts=injection:{counts.injection},replication:{counts.replication},"
            f"deduction:{counts.deduction},unit:{counts.unit},"
            f"collection:{counts.collection}"
        )
    return 0


def _cmd_reduce_p2c(args: argparse.Namespace) -> int:
    source = _read_formula(args.cnf)
    result = prop_to_contra(source, args.omega)
    wrote = _write_or_print(result, args.output)
    if wrote:
        print(
            f"REDUCED clauses={len(source.clauses)}->{len(result.clauses)}"
            f" appended-unit={-args.omega}"
        )
    return 0


def _cmd_compose_upac(args: argparse.Namespace) -> int:
    source = _read_formula(args.cnf)
    variables = None
    if args.vars:
        variables = [int(tok) for tok in args.vars.split()]
    composition = compose_upac(source, variables)
    wrote = _write_or_print(composition.formula, args.output)
    if wrote:
        print(
            f"COMPOSED blocks={len(composition.blocks)}"
            f" clauses={len(composition.formula.clauses)}"
            f" vars={composition.formula.num_vars}"
        )
        for block in composition.blocks:
            print(f"OUTPUT {block.literal} {block.reduction.map.output_var}")
    return 0


def _cmd_verify_upi(args: argparse.Namespace) -> int:
    formula = _read_formula(args.cnf)
    q = parse_constraint(args.constraint)
    verdict = is_upi(formula, q, limit=args.limit)
    print(render_verdict(verdict))
    return 0 if verdict.holds else 1


def _cmd_verify_upac(args: argparse.Namespace) -> int:
    formula = _read_formula(args.cnf)
    q = parse_constraint(args.constraint)
    verdict = is_upac(formula, q, limit=args.limit)
    print(render_verdict(verdict))
    return 0 if verdict.holds else 1


def _cmd_verify_hm(args: argparse.Namespace) -> int:
    formula = _read_formula(args.cnf)
    if args.all:
        reduction = contra_to_prop(formula)
        total = 0
        for assn in enumerate_partials(formula.variables, args.limit):
            verdict = check_stage_correspondence(formula, assn, reduction)
            total += verdict.checked
            if not verdict.holds:
                print(
                    render_verdict(
                        Verdict(False, total, verdict.counterexample, verdict.note)
                    )
                )
                return 1
        print(render_verdict(Verdict(True, total)))
        return 0
    assn = _parse_assign(args.assign)
    verdict = check_stage_correspondence(formula, assn)
    print(render_verdict(verdict))
    return 0 if verdict.holds else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitprop",
        description="Unit propagation engines, reductions, and verifiers over DIMACS CNF.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_assign(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--assign",
            default="",
            metavar="LITS",
            help="partial assignment as DIMACS literals, e.g. \"-2 4\"",
        )

    p = sub.add_parser("propagate", help="run propagation to fixpoint or conflict")
    p.add_argument("cnf", help="DIMACS CNF file")
    add_assign(p)
    p.add_argument(
        "--seed",
        action="store_true",
        help="seed the assignment directly instead of appending unit clauses",
    )
    p.set_defaults(func=_cmd_propagate)

    p = sub.add_parser("trace", help="print a propagation trace table")
    p.add_argument("cnf", help="DIMACS CNF file")
    add_assign(p)
    p.add_argument("--staged", action="store_true", help="round-by-round table")
    p.add_argument(
        "--seed",
        action="store_true",
        help="seed the assignment directly instead of appending unit clauses",
    )
    p.add_argument(
        "--records",
        action="store_true",
        help="machine-readable lines: RECORD <stage> <clause> <literal>",
    )
    p.add_argument("--max-stages", type=int, default=None, metavar="N")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser(
        "reduce-c2p",
        help="build the propagation simulation of a conflict-detecting formula",
    )
    p.add_argument("cnf", help="DIMACS CNF file")
    p.add_argument("-o", "--output", metavar="FILE", help="write DIMACS here instead of stdout")
    p.add_argument("--map", metavar="FILE", help="write the literal/level side map here")
    p.add_argument("--first-aux", type=int, default=None, metavar="VAR")
    p.set_defaults(func=_cmd_reduce_c2p)

    p = sub.add_parser(
        "reduce-p2c", help="append the negated output literal as a unit clause"
    )
    p.add_argument("cnf", help="DIMACS CNF file")
    p.add_argument("--omega", type=int, required=True, metavar="LIT", help="output literal")
    p.add_argument("-o", "--output", metavar="FILE", help="write DIMACS here instead of stdout")
    p.set_defaults(func=_cmd_reduce_p2c)

    p = sub.add_parser(
        "compose-upac",
        help="conjoin per-literal simulations and guards onto an encoding",
    )
    p.add_argument("cnf", help="DIMACS CNF file")
    p.add_argument(
        "--vars",
        default="",
        metavar="VARS",
        help="constraint variables, e.g. \"1 2 3\" (default: whole universe)",
    )
    p.add_argument("-o", "--output", metavar="FILE", help="write DIMACS here instead of stdout")
    p.set_defaults(func=_cmd_compose_upac)

    def add_verify_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("cnf", help="DIMACS CNF file")
        p.add_argument(
            "--constraint",
            required=True,
            metavar="SPEC",
            help="'atmost <k> of <n>', 'table <n> <bits>', or 'cnf <path>'",
        )
        p.add_argument("--limit", type=int, default=None, metavar="N",
                       help="enumeration guard override")

    p = sub.add_parser("verify-upi", help="check conflict-exactness against a constraint")
    add_verify_args(p)
    p.set_defaults(func=_cmd_verify_upi)

    p = sub.add_parser(
        "verify-upac", help="check conflicts plus forced-literal inference"
    )
    add_verify_args(p)
    p.set_defaults(func=_cmd_verify_upac)

    p = sub.add_parser(
        "verify-hm", help="check stage correspondence with the built simulation"
    )
    p.add_argument("cnf", help="DIMACS CNF file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--assign", default=None, metavar="LITS")
    group.add_argument("--all", action="store_true", help="sweep every partial assignment")
    p.add_argument("--limit", type=int, default=None, metavar="N",
                   help="enumeration guard override")
    p.set_defaults(func=_cmd_verify_hm)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (DimacsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
