"""Exhaustive checkers for the claimed propagation behaviors.

Every checker sweeps partial assignments in the deterministic
enumeration order and reports the first mismatch as a counterexample.
Expected values never come from the engine under test: they are brute
forced from constraints or recomputed on the source formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cnf import CnfFormula, restrict
from .constraints import (
    Constraint,
    MatchingFunction,
    enumerate_partials,
    falsifies,
)
from .propagate import (
    propagate_fixpoint,
    propagate_staged,
    stage_assignment,
)
from .reductions import ReductionOutput, contra_to_prop

# Largest measured ratio size(simulation) / (n^2 * size(source)); the
# witness is the one-variable source (v), which blows up 1 literal into
# 12.  The ratio only shrinks as n grows.
SIZE_BOUND_FACTOR = 12


@dataclass(frozen=True)
class Counterexample:
    assignment: frozenset[int]
    expected: str
    observed: str
    literal: int | None = None
    stage: int | None = None


@dataclass(frozen=True)
class Verdict:
    holds: bool
    checked: int
    counterexample: Counterexample | None = None
    note: str = ""


def _fails(
    checked: int,
    assignment: frozenset[int],
    expected: str,
    observed: str,
    literal: int | None = None,
    stage: int | None = None,
    note: str = "",
) -> Verdict:
    return Verdict(
        False,
        checked,
        Counterexample(assignment, expected, observed, literal, stage),
        note,
    )


def computes_by_contradiction(
    formula: CnfFormula, fn: MatchingFunction, limit: int | None = None
) -> Verdict:
    """Does restricting and propagating conflict exactly where the
    function says yes?"""
    checked = 0
    for I in enumerate_partials(fn.variables, limit):
        if not fn.in_domain(I):
            continue
        checked += 1
        expected = bool(fn.evaluate(I))
        observed = propagate_fixpoint(restrict(formula, I)).conflicted
        if expected != observed:
            return _fails(
                checked,
                I,
                expected="conflict" if expected else "no-conflict",
                observed="conflict" if observed else "no-conflict",
            )
    return Verdict(True, checked)


def computes_by_propagation(
    formula: CnfFormula,
    fn: MatchingFunction,
    output_lit: int,
    limit: int | None = None,
) -> Verdict:
    """Does propagation stay conflict-free and infer the output literal
    exactly where the function says yes?"""
    checked = 0
    for I in enumerate_partials(fn.variables, limit):
        if not fn.in_domain(I):
            continue
        checked += 1
        out = propagate_fixpoint(restrict(formula, I))
        if out.conflicted:
            return _fails(
                checked, I, expected="no-conflict", observed="conflict",
                literal=output_lit,
            )
        expected = bool(fn.evaluate(I))
        observed = output_lit in out.final
        if expected != observed:
            return _fails(
                checked,
                I,
                expected="inferred" if expected else "absent",
                observed="inferred" if observed else "absent",
                literal=output_lit,
            )
    return Verdict(True, checked)


def is_upi(
    formula: CnfFormula, q: Constraint, limit: int | None = None
) -> Verdict:
    """Does propagation detect exactly the assignments falsifying q?"""
    from .constraints import inconsistency_fn

    return computes_by_contradiction(formula, inconsistency_fn(q), limit)


def is_upac(
    formula: CnfFormula, q: Constraint, limit: int | None = None
) -> Verdict:
    """Conflict on every falsifying assignment, and on the rest no
    conflict plus exactly the forced literals inferred.

    Only literals of variables unbound in the assignment are checked;
    what propagation says about already-bound variables is not
    constrained.
    """
    checked = 0
    for I in enumerate_partials(q.variables, limit):
        checked += 1
        out = propagate_fixpoint(restrict(formula, I))
        if falsifies(q, I):
            if not out.conflicted:
                return _fails(
                    checked, I, expected="conflict", observed="no-conflict"
                )
            continue
        if out.conflicted:
            return _fails(
                checked, I, expected="no-conflict", observed="conflict"
            )
        for v in q.variables:
            if v in I or -v in I:
                continue
            for lit in (v, -v):
                forced = falsifies(q, I | {-lit})
                inferred = lit in out.final
                if forced != inferred:
                    return _fails(
                        checked,
                        I,
                        expected="inferred" if forced else "absent",
                        observed="inferred" if inferred else "absent",
                        literal=lit,
                    )
    return Verdict(True, checked)


def check_stage_correspondence(
    source: CnfFormula,
    assn: frozenset[int] | tuple[int, ...] = (),
    reduction: ReductionOutput | None = None,
) -> Verdict:
    """Stage-exact agreement between a source run and its simulation.

    The source is restricted by the assignment and staged; the
    simulation is staged with the assignment as its round-0 seed, which
    is what lines the two columns up: a seed literal enters its chain at
    level 1 in round 1, exactly when the restriction unit fires on the
    source side.  Holds iff for every round m in 1..n+1 and every source
    literal w: x(w,m) is known after round m iff w is known after
    round m.
    """
    red = reduction if reduction is not None else contra_to_prop(source)
    t_source = propagate_staged(restrict(source, assn))
    t_sim = propagate_staged(
        red.formula, assignment=assn, max_stages=red.map.levels
    )
    assn = frozenset(assn)
    checked = 0
    for m in range(1, red.map.levels + 1):
        known_source = stage_assignment(t_source, m)
        known_sim = stage_assignment(t_sim, m)
        for v in range(1, red.map.source_num_vars + 1):
            for lit in (v, -v):
                checked += 1
                on_source = lit in known_source
                on_sim = red.map.aux[(lit, m)] in known_sim
                if on_source != on_sim:
                    return _fails(
                        checked,
                        assn,
                        expected="present" if on_source else "absent",
                        observed="present" if on_sim else "absent",
                        literal=lit,
                        stage=m,
                    )
    return Verdict(True, checked)


def check_size_bound(
    output: ReductionOutput, factor: float = SIZE_BOUND_FACTOR
) -> Verdict:
    """Family counts match their closed forms and the total literal
    count stays within factor * n^2 * source size."""
    n = output.source.num_vars
    singles = len({c[0] for c in output.source.clauses if len(c) == 1})
    wide = sum(len(c) for c in output.source.clauses if len(c) >= 2)
    expected = {
        "injection": 2 * n,
        "replication": 2 * n * n,
        "deduction": n * wide,
        "unit": singles,
        "collection": n,
    }
    got = output.family_counts
    for family, want in expected.items():
        have = getattr(got, family)
        if have != want:
            return _fails(
                1,
                frozenset(),
                expected=f"{family}={want}",
                observed=f"{family}={have}",
                note="family count mismatch",
            )
    if got.total() != len(output.formula.clauses):
        return _fails(
            1,
            frozenset(),
            expected=f"total={len(output.formula.clauses)}",
            observed=f"total={got.total()}",
            note="family counts do not sum to clause count",
        )
    size = output.formula.size()
    bound = factor * n * n * output.source.size()
    if size > bound:
        return _fails(
            1,
            frozenset(),
            expected=f"size<={bound:g}",
            observed=f"size={size}",
            note="size bound exceeded",
        )
    return Verdict(True, 1)


def contradiction_fn(
    formula: CnfFormula, variables: tuple[int, ...] | None = None
) -> MatchingFunction:
    """The matching function "restricting this formula conflicts",
    computed by running the fixpoint engine on the formula itself.
    Meant as the reference when validating a formula DERIVED from this
    one, never as its own oracle."""
    vs = tuple(formula.variables) if variables is None else tuple(variables)
    return MatchingFunction(
        variables=vs,
        in_domain=lambda I: True,
        evaluate=lambda I: propagate_fixpoint(restrict(formula, I)).conflicted,
        label="propagation conflicts",
    )


def _format_assignment(assn: frozenset[int]) -> str:
    if not assn:
        return "(empty)"
    parts = [
        f"v{abs(lit)}={'1' if lit > 0 else '0'}"
        for lit in sorted(assn, key=abs)
    ]
    return ", ".join(parts)


def render_verdict(verdict: Verdict) -> str:
    if verdict.holds:
        return f"HOLDS checked={verdict.checked}"
    lines = [f"FAILS checked={verdict.checked}"]
    ce = verdict.counterexample
    if ce is not None:
        lines.append(f"  assignment: {_format_assignment(ce.assignment)}")
        if ce.literal is not None:
            lines.append(f"  literal: {ce.literal}")
        if ce.stage is not None:
            lines.append(f"  stage: {ce.stage}")
        lines.append(f"  expected: {ce.expected}")
        lines.append(f"  observed: {ce.observed}")
    if verdict.note:
        lines.append(f"  note: {verdict.note}")
    return "\n".join(lines)
