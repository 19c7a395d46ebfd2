"""Unit propagation as a computation model over partial assignments.

The package treats a CNF formula as a program: restrict it by a partial
assignment, run unit propagation, and read the result off the derived
literals or the conflict.  On top of the two engines sit the reductions
between "signal by contradiction" and "signal by inferring an output
literal", the per-literal composition that upgrades conflict-detecting
encodings to arc-consistent ones, and brute-force verifiers for all of
the claimed behaviors.
"""

from .cnf import (
    CnfFormula,
    DimacsError,
    assignment,
    canonical_clause,
    emit_dimacs,
    is_contradictory,
    is_tautological,
    parse_dimacs,
    restrict,
)
from .constraints import (
    Constraint,
    DEFAULT_ENUMERATION_LIMIT,
    ENUM_LIMIT_ENV,
    MatchingFunction,
    arc_fn,
    at_most_k,
    binomial_at_most_k,
    cnf_constraint,
    enumerate_partials,
    enumeration_limit,
    falsifies,
    inconsistency_fn,
    pairwise_at_most_one,
    parse_constraint,
    split_pair_at_most_one,
    truth_table,
)
from .propagate import (
    PropagationOutcome,
    StageRecord,
    StagedTrace,
    format_literal,
    format_literals,
    infers,
    propagate_fixpoint,
    propagate_staged,
    render_outcome,
    render_trace,
    stage_assignment,
    trace_records,
)
from .reductions import (
    Composition,
    FamilyCounts,
    ReductionOutput,
    SimulationMap,
    UpacBlock,
    compose_upac,
    contra_to_prop,
    parse_simulation_map,
    prop_to_contra,
    render_simulation_map,
)
from .verify import (
    Counterexample,
    SIZE_BOUND_FACTOR,
    Verdict,
    check_size_bound,
    check_stage_correspondence,
    computes_by_contradiction,
    computes_by_propagation,
    contradiction_fn,
    is_upac,
    is_upi,
    render_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "CnfFormula",
    "DimacsError",
    "assignment",
    "canonical_clause",
    "emit_dimacs",
    "is_contradictory",
    "is_tautological",
    "parse_dimacs",
    "restrict",
    "Constraint",
    "DEFAULT_ENUMERATION_LIMIT",
    "ENUM_LIMIT_ENV",
    "MatchingFunction",
    "arc_fn",
    "at_most_k",
    "binomial_at_most_k",
    "cnf_constraint",
    "enumerate_partials",
    "enumeration_limit",
    "falsifies",
    "inconsistency_fn",
    "pairwise_at_most_one",
    "parse_constraint",
    "split_pair_at_most_one",
    "truth_table",
    "PropagationOutcome",
    "StageRecord",
    "StagedTrace",
    "format_literal",
    "format_literals",
    "infers",
    "propagate_fixpoint",
    "propagate_staged",
    "render_outcome",
    "render_trace",
    "stage_assignment",
    "trace_records",
    "Composition",
    "FamilyCounts",
    "ReductionOutput",
    "SimulationMap",
    "UpacBlock",
    "compose_upac",
    "contra_to_prop",
    "parse_simulation_map",
    "prop_to_contra",
    "render_simulation_map",
    "Counterexample",
    "SIZE_BOUND_FACTOR",
    "Verdict",
    "check_size_bound",
    "check_stage_correspondence",
    "computes_by_contradiction",
    "computes_by_propagation",
    "contradiction_fn",
    "is_upac",
    "is_upi",
    "render_verdict",
    "__version__",
]
