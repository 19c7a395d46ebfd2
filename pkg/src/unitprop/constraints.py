"""Constraints and brute-force oracles over partial assignments.

A constraint is a total satisfiability test over complete assignments of
its variables.  Everything else here is deliberately brute force: the
oracles exist to validate the propagation engines and encodings, so they
must not consult them.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .cnf import CnfFormula, assignment as _mk_assignment, parse_dimacs

DEFAULT_ENUMERATION_LIMIT = 12
ENUM_LIMIT_ENV = "UNITPROP_ENUM_LIMIT"

AT_MOST_K = "at_most_k"
TRUTH_TABLE = "truth_table"
CNF_SEMANTIC = "cnf_semantic"


@dataclass(frozen=True)
class Constraint:
    """A satisfiability function over complete assignments of ``variables``.

    ``sat`` receives a frozenset of literals binding every variable and
    returns whether the constraint holds.
    """

    variables: tuple[int, ...]
    kind: str
    label: str
    sat: Callable[[frozenset[int]], bool] = field(compare=False, repr=False)

    def satisfied_by(self, complete: frozenset[int]) -> bool:
        bound = {abs(lit) for lit in complete}
        if bound != set(self.variables):
            raise ValueError(
                f"assignment must bind exactly {sorted(self.variables)}"
            )
        return bool(self.sat(complete))


@dataclass(frozen=True)
class MatchingFunction:
    """A yes/no function over the partial assignments of ``variables``,
    defined only where ``in_domain`` holds."""

    variables: tuple[int, ...]
    in_domain: Callable[[frozenset[int]], bool] = field(compare=False, repr=False)
    evaluate: Callable[[frozenset[int]], bool] = field(compare=False, repr=False)
    label: str = ""


def at_most_k(k: int, variables: Iterable[int]) -> Constraint:
    """At most ``k`` of the variables are true."""
    vs = tuple(variables)
    if k < 0:
        raise ValueError("k must be nonnegative")

    def sat(complete: frozenset[int]) -> bool:
        return sum(1 for v in vs if v in complete) <= k

    return Constraint(vs, AT_MOST_K, f"atmost {k} of {len(vs)}", sat)


def truth_table(variables: Iterable[int], bits: str) -> Constraint:
    """Constraint given by an explicit table.

    ``bits[i]`` is the outcome for the complete assignment whose binary
    code is ``i`` with ``variables[0]`` as the least significant bit;
    '1' means satisfied.
    """
    vs = tuple(variables)
    if len(bits) != 2 ** len(vs):
        raise ValueError(
            f"table for {len(vs)} variables needs {2 ** len(vs)} bits, got {len(bits)}"
        )
    if set(bits) - {"0", "1"}:
        raise ValueError("table bits must be 0 or 1")

    def sat(complete: frozenset[int]) -> bool:
        index = sum(1 << j for j, v in enumerate(vs) if v in complete)
        return bits[index] == "1"

    return Constraint(vs, TRUTH_TABLE, f"table {len(vs)} {bits}", sat)


def cnf_constraint(formula: CnfFormula) -> Constraint:
    """Treat a formula semantically: satisfied iff every clause holds.

    The variables are the formula's full universe.
    """
    vs = tuple(formula.variables)

    def sat(complete: frozenset[int]) -> bool:
        return all(any(lit in complete for lit in clause) for clause in formula.clauses)

    return Constraint(vs, CNF_SEMANTIC, f"cnf over {len(vs)} vars", sat)


def falsifies(q: Constraint, assn: Iterable[int]) -> bool:
    """True iff no complete extension of ``assn`` satisfies ``q``.

    Brute force over the 2^(unbound) extensions by design.
    """
    bindings = _mk_assignment(assn)
    universe = set(q.variables)
    for lit in bindings:
        if abs(lit) not in universe:
            raise ValueError(f"variable {abs(lit)} is not a variable of {q.label}")
    unbound = [v for v in q.variables if v not in bindings and -v not in bindings]
    for signs in itertools.product((1, -1), repeat=len(unbound)):
        complete = bindings | frozenset(s * v for s, v in zip(signs, unbound))
        if q.sat(complete):
            return False
    return True


def inconsistency_fn(q: Constraint) -> MatchingFunction:
    """The matching function that says yes exactly on assignments
    falsifying ``q``.  Its domain is every partial assignment."""
    return MatchingFunction(
        variables=q.variables,
        in_domain=lambda I: True,
        evaluate=lambda I: falsifies(q, I),
        label=f"inconsistency of ({q.label})",
    )


def arc_fn(q: Constraint, literal: int) -> MatchingFunction:
    """The matching function that says yes when ``literal`` is forced.

    Defined on assignments that do not falsify ``q``.  When the literal's
    variable is unbound, yes iff adding the opposite literal falsifies
    ``q``.  When it is already bound the answer is read off the binding:
    a present literal is vacuously supported, its negation is not.
    """
    if abs(literal) not in set(q.variables):
        raise ValueError(f"variable {abs(literal)} is not a variable of {q.label}")

    def evaluate(I: frozenset[int]) -> bool:
        if literal in I:
            return True
        if -literal in I:
            return False
        return falsifies(q, I | {-literal})

    return MatchingFunction(
        variables=q.variables,
        in_domain=lambda I: not falsifies(q, I),
        evaluate=evaluate,
        label=f"arc of ({q.label}) at {literal}",
    )


def enumeration_limit(limit: int | None = None) -> int:
    """Resolve the enumeration guard: explicit argument, else the
    UNITPROP_ENUM_LIMIT environment variable, else the default."""
    if limit is not None:
        return limit
    env = os.environ.get(ENUM_LIMIT_ENV)
    if env:
        return int(env)
    return DEFAULT_ENUMERATION_LIMIT


def enumerate_partials(
    variables: Iterable[int], limit: int | None = None
) -> Iterator[frozenset[int]]:
    """Yield all 3^n partial assignments in ternary counting order.

    ``variables[0]`` is the least significant digit; digit values are
    unbound, positive, negative in that order.  Refuses when n exceeds
    the enumeration limit.
    """
    vs = tuple(variables)
    bound = enumeration_limit(limit)
    if len(vs) > bound:
        raise ValueError(
            f"refusing to enumerate 3^{len(vs)} partial assignments "
            f"over {len(vs)} variables (limit {bound})"
        )
    return _ternary_partials(vs)


def _ternary_partials(vs: tuple[int, ...]) -> Iterator[frozenset[int]]:
    for code in range(3 ** len(vs)):
        lits = []
        rest = code
        for v in vs:
            rest, digit = divmod(rest, 3)
            if digit == 1:
                lits.append(v)
            elif digit == 2:
                lits.append(-v)
        yield frozenset(lits)


def parse_constraint(text: str) -> Constraint:
    """Parse the constraint mini-language.

    Forms: ``atmost <k> of <n>``, ``table <n> <bits>``, ``cnf <path>``.
    Variables are 1..n.
    """
    tokens = text.split()
    if not tokens:
        raise ValueError("empty constraint spec")
    head = tokens[0]
    if head == "atmost":
        if len(tokens) != 4 or tokens[2] != "of":
            raise ValueError(f"expected 'atmost <k> of <n>', got {text!r}")
        k, n = int(tokens[1]), int(tokens[3])
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        return at_most_k(k, range(1, n + 1))
    if head == "table":
        if len(tokens) != 3:
            raise ValueError(f"expected 'table <n> <bits>', got {text!r}")
        n = int(tokens[1])
        return truth_table(range(1, n + 1), tokens[2])
    if head == "cnf":
        if len(tokens) < 2:
            raise ValueError(f"expected 'cnf <path>', got {text!r}")
        path = text.split(None, 1)[1]
        return cnf_constraint(parse_dimacs(Path(path).read_text()))
    raise ValueError(f"unknown constraint form {head!r}")


def pairwise_at_most_one(variables: Iterable[int]) -> CnfFormula:
    """The quadratic at-most-one encoding: one binary clause per pair."""
    vs = tuple(variables)
    clauses = [(-a, -b) for a, b in itertools.combinations(vs, 2)]
    return CnfFormula(clauses, num_vars=max(vs, default=0))


def binomial_at_most_k(variables: Iterable[int], k: int) -> CnfFormula:
    """Forbid every (k+1)-subset from being all true."""
    vs = tuple(variables)
    if k < 0:
        raise ValueError("k must be nonnegative")
    clauses = [
        tuple(-v for v in combo) for combo in itertools.combinations(vs, k + 1)
    ]
    return CnfFormula(clauses, num_vars=max(vs, default=0))


def split_pair_at_most_one(
    variables: Iterable[int], first_aux: int | None = None
) -> CnfFormula:
    """An at-most-one encoding that detects conflicts but never infers.

    Each pair gets a throwaway variable w and the two clauses
    (-a | -b | w) and (-a | -b | -w): with both a and b set the pair
    propagates w and -w, a contradiction, yet a single set variable
    leaves both clauses with two open literals, so nothing is forced.
    Useful as a worked example of conflict detection without arc
    consistency.
    """
    vs = tuple(variables)
    top = max(vs, default=0)
    aux = top + 1 if first_aux is None else first_aux
    if aux <= top:
        raise ValueError(f"first_aux must exceed {top}")
    clauses: list[tuple[int, ...]] = []
    for a, b in itertools.combinations(vs, 2):
        clauses.append((-a, -b, aux))
        clauses.append((-a, -b, -aux))
        aux += 1
    return CnfFormula(clauses, num_vars=aux - 1 if clauses else top)
