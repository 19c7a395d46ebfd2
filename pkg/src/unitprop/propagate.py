"""Unit propagation engines.

Two views of the same inference rule.  ``propagate_fixpoint`` is the usual
queue-driven engine: run unit propagation to closure, stop at the first
contradiction.  ``propagate_staged`` computes the inference in synchronous
rounds and keeps going past a contradiction, which is what the reduction
machinery needs: stage ``m`` fires every literal whose clause has all of
its *other* literals falsified by stage ``m - 1``.

Under that rule a fully falsified clause yields every one of its literals.
That sounds odd for a solver but it is the right saturating semantics here:
round ``m`` of the staged engine is exactly "what can be concluded in one
more step from everything known at round ``m - 1``", contradictions
included.

Both engines accept a seed assignment.  Seeding literals directly and
appending them as unit clauses via ``restrict`` agree on whether a conflict
is reached and, absent conflict, on the final closure; they differ in
staged timing (restriction units fire at stage 1, seeds are stage 0).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .cnf import CnfFormula, assignment as _mk_assignment, restrict

FIXPOINT = "fixpoint"
CONFLICT = "conflict"


@dataclass(frozen=True)
class PropagationOutcome:
    """Result of running propagation to closure or first conflict.

    ``final`` holds the seed plus every derived literal; on a conflict it
    includes the pair of contradictory literals when one was actually
    pushed.  ``steps`` records derived literals in order as
    ``(literal, clause_index)``.  ``conflict_clause`` is the index of the
    clause that closed the run, or None on a fixpoint.
    """

    kind: str
    final: frozenset[int]
    conflict_clause: int | None
    steps: tuple[tuple[int, int], ...]

    @property
    def conflicted(self) -> bool:
        return self.kind == CONFLICT


@dataclass(frozen=True)
class StageRecord:
    """One synchronous round: ``inferred`` pairs each new literal with the
    clause that produced it; ``cumulative`` is everything inferred so far,
    seed excluded."""

    index: int
    inferred: tuple[tuple[int, int], ...]
    cumulative: frozenset[int]


@dataclass(frozen=True)
class StagedTrace:
    initial: frozenset[int]
    stages: tuple[StageRecord, ...]
    conflict: bool
    conflict_stage: int | None
    saturated: bool

    def stage_count(self) -> int:
        return len(self.stages)


def _check_universe(seed: frozenset[int], formula: CnfFormula) -> None:
    for lit in seed:
        if not 1 <= abs(lit) <= formula.num_vars:
            raise ValueError(
                f"literal {lit} outside universe 1..{formula.num_vars}"
            )


@lru_cache(maxsize=4096)
def _occurrences(formula: CnfFormula) -> Mapping[int, tuple[int, ...]]:
    occ: dict[int, list[int]] = {}
    for idx, clause in enumerate(formula.clauses):
        for lit in clause:
            occ.setdefault(lit, []).append(idx)
    return {lit: tuple(idxs) for lit, idxs in occ.items()}


def propagate_fixpoint(
    formula: CnfFormula, assignment: Iterable[int] = ()
) -> PropagationOutcome:
    """Run unit propagation to closure, stopping at the first conflict.

    Falsified-literal counters per clause drive the unit test; the counters
    can lag the assigned set by queued work, so a clause that looks unit may
    in fact be fully falsified, which is reported as the conflict.
    """
    seed = _mk_assignment(assignment)
    _check_universe(seed, formula)
    clauses = formula.clauses
    occ = _occurrences(formula)
    falsified = [0] * len(clauses)
    assigned: set[int] = set(seed)
    steps: list[tuple[int, int]] = []
    queue: deque[int] = deque(sorted(seed, key=abs))

    def outcome(kind: str, conflict_clause: int | None = None) -> PropagationOutcome:
        return PropagationOutcome(kind, frozenset(assigned), conflict_clause, tuple(steps))

    def push(lit: int, idx: int) -> int | None:
        if lit in assigned:
            return None
        steps.append((lit, idx))
        assigned.add(lit)
        if -lit in assigned:
            return idx
        queue.append(lit)
        return None

    for idx, clause in enumerate(clauses):
        if not clause:
            return outcome(CONFLICT, idx)
        if len(clause) == 1:
            bad = push(clause[0], idx)
            if bad is not None:
                return outcome(CONFLICT, bad)

    while queue:
        lit = queue.popleft()
        for idx in occ.get(-lit, ()):
            falsified[idx] += 1
            clause = clauses[idx]
            rem = len(clause) - falsified[idx]
            if rem > 1:
                continue
            if rem == 0:
                return outcome(CONFLICT, idx)
            active = next((l for l in clause if -l not in assigned), None)
            if active is None:
                return outcome(CONFLICT, idx)
            bad = push(active, idx)
            if bad is not None:
                return outcome(CONFLICT, bad)

    return outcome(FIXPOINT)


def propagate_staged(
    formula: CnfFormula,
    assignment: Iterable[int] = (),
    max_stages: int | None = None,
) -> StagedTrace:
    """Propagate in synchronous rounds, saturating past contradictions.

    A literal fires at stage ``m`` when some clause has every *other*
    literal falsified by stage ``m - 1``; a fully falsified clause therefore
    fires all of its literals.  The run stops when a round adds nothing
    (``saturated``) or after ``max_stages`` recorded rounds.  ``conflict``
    reports whether the accumulated set ever binds a variable both ways
    (stage 0 if the formula contains the empty clause).
    """
    seed = _mk_assignment(assignment)
    _check_universe(seed, formula)
    clauses = formula.clauses
    occ = _occurrences(formula)
    falsified = [0] * len(clauses)
    known: set[int] = set(seed)
    for lit in seed:
        for idx in occ.get(-lit, ()):
            falsified[idx] += 1
    active = {
        idx for idx, clause in enumerate(clauses)
        if len(clause) - falsified[idx] <= 1
    }

    conflict = any(not clause for clause in clauses)
    conflict_stage = 0 if conflict else None
    stages: list[StageRecord] = []
    cumulative: set[int] = set()
    saturated = False

    while max_stages is None or len(stages) < max_stages:
        new: list[tuple[int, int]] = []
        new_set: set[int] = set()
        for idx in sorted(active):
            clause = clauses[idx]
            rem = len(clause) - falsified[idx]
            if rem == 1:
                candidates: Iterable[int] = (
                    next(l for l in clause if -l not in known),
                )
            elif rem == 0:
                candidates = clause
            else:
                continue
            for lit in candidates:
                if lit in known or lit in new_set:
                    continue
                new_set.add(lit)
                new.append((lit, idx))
        if not new:
            saturated = True
            break

        known.update(new_set)
        cumulative.update(new_set)
        stages.append(StageRecord(len(stages) + 1, tuple(new), frozenset(cumulative)))
        if conflict_stage is None and any(-lit in known for lit in new_set):
            conflict = True
            conflict_stage = stages[-1].index
        for lit in new_set:
            for idx in occ.get(-lit, ()):
                falsified[idx] += 1
                if len(clauses[idx]) - falsified[idx] <= 1:
                    active.add(idx)

    return StagedTrace(
        initial=seed,
        stages=tuple(stages),
        conflict=conflict,
        conflict_stage=conflict_stage,
        saturated=saturated,
    )


def stage_assignment(trace: StagedTrace, stage: int) -> frozenset[int]:
    """Everything known after ``stage`` rounds: seed plus inferences.

    Stages past the end of the trace return the last recorded state, which
    is the fixpoint whenever the trace saturated.
    """
    if stage < 0:
        raise ValueError("stage must be nonnegative")
    if stage == 0 or not trace.stages:
        return trace.initial
    capped = min(stage, len(trace.stages))
    return trace.initial | trace.stages[capped - 1].cumulative


def infers(formula: CnfFormula, assignment: Iterable[int], literal: int) -> str:
    """Classify what propagation concludes about ``literal`` under the
    given bindings: ``"yes"``, ``"no"``, or ``"conflict"``."""
    out = propagate_fixpoint(restrict(formula, assignment))
    if out.conflicted:
        return "conflict"
    return "yes" if literal in out.final else "no"


def format_literal(lit: int, names: Mapping[int, str] | None = None) -> str:
    if names and abs(lit) in names:
        name = names[abs(lit)]
        return name if lit > 0 else "~" + name
    return str(lit)


def format_literals(
    literals: Iterable[int], names: Mapping[int, str] | None = None
) -> str:
    ordered = sorted(literals, key=lambda l: (abs(l), l < 0))
    return " ".join(format_literal(l, names) for l in ordered)


def render_outcome(
    outcome: PropagationOutcome, names: Mapping[int, str] | None = None
) -> str:
    if outcome.conflicted:
        lines = [f"CONFLICT: clause={outcome.conflict_clause}"]
    else:
        lines = [("FIXPOINT: " + format_literals(outcome.final, names)).rstrip()]
    for lit, idx in outcome.steps:
        lines.append(f"INFER {format_literal(lit, names)} clause={idx}")
    return "\n".join(lines)


def render_trace(
    trace: StagedTrace, names: Mapping[int, str] | None = None
) -> str:
    lines = [("INITIAL " + format_literals(trace.initial, names)).rstrip()]
    for rec in trace.stages:
        fired = format_literals((lit for lit, _ in rec.inferred), names)
        lines.append(f"STAGE {rec.index}: {fired}")
    if trace.conflict:
        lines.append(f"CONFLICT: stage={trace.conflict_stage}")
    status = "SATURATED" if trace.saturated else "TRUNCATED"
    lines.append(f"{status} stages={len(trace.stages)}")
    return "\n".join(lines)


def trace_records(trace: StagedTrace) -> Iterator[str]:
    """Flat ``"stage clause literal"`` lines, one per inference."""
    for rec in trace.stages:
        for lit, idx in rec.inferred:
            yield f"{rec.index} {idx} {lit}"
