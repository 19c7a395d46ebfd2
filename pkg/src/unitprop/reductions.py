"""Formula-to-formula reductions between the two ways a CNF can compute
a matching function under unit propagation.

``prop_to_contra`` turns an encoding that signals yes by inferring an
output literal into one that signals yes by deriving a contradiction: it
appends the negated output as a unit clause.

``contra_to_prop`` goes the other way with a staged simulation.  For a
source over n variables it introduces, per source literal w, a chain of
fresh variables x(w, 1..n+1), where x(w, i) means "w was established
within i rounds on the source side".  Five clause families drive the
chains (emitted in this order):

  injection    (v | x(-v,1)) and (-v | x(v,1)) per variable: seed
               literals enter their chains at level 1;
  unit         (x(w,1)) per distinct singleton source clause;
  replication  (-x(w,i) | x(w,i+1)): once established, always
               established at later levels;
  deduction    (x(w,i+1) | -x(-r1,i) | ...) per source clause with at
               least two literals, target literal first: when every
               other literal of the clause was refuted by round i, the
               clause establishes w at round i+1;
  collection   (-x(v,n+1) | -x(-v,n+1) | s) per variable: the fresh
               output s fires exactly when some variable was
               established both ways, i.e. the source run contradicted
               itself.

The composition ``compose_upac`` applies that simulation once per
literal w of the constraint's variables to the source extended with
(w), then adds a guard clause (-s_w | -w): whenever the block discovers
that asserting w would contradict, propagation withdraws w.  This is
what upgrades conflict-detecting encodings to ones that also infer
every forced literal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .cnf import CnfFormula


@dataclass(frozen=True)
class SimulationMap:
    """Bookkeeping for one simulation: which fresh variable stands for
    "source literal, level", plus the output variable."""

    source_num_vars: int
    levels: int
    first_aux: int
    output_var: int
    aux: Mapping[tuple[int, int], int]

    def aux_var(self, literal: int, level: int) -> int:
        try:
            return self.aux[(literal, level)]
        except KeyError:
            raise ValueError(
                f"no auxiliary for literal {literal} at level {level}"
            ) from None


@dataclass(frozen=True)
class FamilyCounts:
    injection: int
    replication: int
    deduction: int
    unit: int
    collection: int

    def total(self) -> int:
        return (
            self.injection
            + self.replication
            + self.deduction
            + self.unit
            + self.collection
        )

    def astuple(self) -> tuple[int, int, int, int, int]:
        return (
            self.injection,
            self.replication,
            self.deduction,
            self.unit,
            self.collection,
        )


@dataclass(frozen=True)
class ReductionOutput:
    source: CnfFormula
    formula: CnfFormula
    map: SimulationMap
    family_counts: FamilyCounts


@dataclass(frozen=True)
class UpacBlock:
    """One per-literal slice of a composition: the clauses at indices
    ``start..end-1`` of the composed formula, ``guard_index`` being the
    (-s_w | -w) clause."""

    literal: int
    reduction: ReductionOutput
    start: int
    end: int
    guard_index: int


@dataclass(frozen=True)
class Composition:
    formula: CnfFormula
    source: CnfFormula
    variables: tuple[int, ...]
    blocks: tuple[UpacBlock, ...]

    def block_for(self, literal: int) -> UpacBlock:
        for block in self.blocks:
            if block.literal == literal:
                return block
        raise ValueError(f"no block for literal {literal}")


def prop_to_contra(formula: CnfFormula, output_lit: int) -> CnfFormula:
    """Append the negated output literal as a unit clause.

    Grows the formula by exactly one clause of one literal.
    """
    if not 1 <= abs(output_lit) <= formula.num_vars:
        raise ValueError(
            f"literal {output_lit} outside universe 1..{formula.num_vars}"
        )
    return CnfFormula(
        formula.clauses + ((-output_lit,),), num_vars=formula.num_vars
    )


def _allocate(n: int, first_aux: int) -> tuple[dict[tuple[int, int], int], int]:
    aux: dict[tuple[int, int], int] = {}
    nxt = first_aux
    for v in range(1, n + 1):
        for lit in (v, -v):
            for level in range(1, n + 2):
                aux[(lit, level)] = nxt
                nxt += 1
    return aux, nxt


def contra_to_prop(
    source: CnfFormula, first_aux: int | None = None
) -> ReductionOutput:
    """Build the staged simulation of a conflict-detecting formula.

    The result never conflicts under propagation for any seed over the
    source universe and infers the output variable exactly when the
    source, restricted the same way, would conflict.  ``first_aux``
    relocates the fresh-variable block (default: right after the source
    universe), which keeps namespaces disjoint when composing.
    """
    n = source.num_vars
    if n == 0:
        raise ValueError("source universe is empty")
    if any(not clause for clause in source.clauses):
        raise ValueError("source contains the empty clause")
    if first_aux is None:
        first_aux = n + 1
    elif first_aux <= n:
        raise ValueError(f"first_aux must exceed the source universe ({n})")

    aux, output_var = _allocate(n, first_aux)
    levels = n + 1
    clauses: list[tuple[int, ...]] = []

    injection = 0
    for v in range(1, n + 1):
        clauses.append((v, aux[(-v, 1)]))
        clauses.append((-v, aux[(v, 1)]))
        injection += 2

    unit = 0
    seen_units: set[int] = set()
    for clause in source.clauses:
        if len(clause) == 1 and clause[0] not in seen_units:
            seen_units.add(clause[0])
            clauses.append((aux[(clause[0], 1)],))
            unit += 1

    replication = 0
    for v in range(1, n + 1):
        for lit in (v, -v):
            for i in range(1, n + 1):
                clauses.append((-aux[(lit, i)], aux[(lit, i + 1)]))
                replication += 1

    deduction = 0
    for clause in source.clauses:
        if len(clause) < 2:
            continue
        for target in clause:
            for i in range(1, n + 1):
                body = tuple(
                    -aux[(-other, i)] for other in clause if other != target
                )
                clauses.append((aux[(target, i + 1)],) + body)
                deduction += 1

    collection = 0
    for v in range(1, n + 1):
        clauses.append((-aux[(v, levels)], -aux[(-v, levels)], output_var))
        collection += 1

    counts = FamilyCounts(injection, replication, deduction, unit, collection)
    formula = CnfFormula(clauses, num_vars=output_var)
    sim_map = SimulationMap(
        source_num_vars=n,
        levels=levels,
        first_aux=first_aux,
        output_var=output_var,
        aux=aux,
    )
    return ReductionOutput(
        source=source, formula=formula, map=sim_map, family_counts=counts
    )


def compose_upac(
    source: CnfFormula, variables: Iterable[int] | None = None
) -> Composition:
    """Upgrade a conflict-detecting encoding to one that infers forced
    literals.

    For each literal w over ``variables`` (default: the whole source
    universe) this conjoins a simulation of "source plus (w)" and the
    guard (-s_w | -w).  Auxiliary namespaces are allocated back to back
    so all blocks stay disjoint from each other and the source.
    """
    if variables is None:
        vs = tuple(source.variables)
    else:
        vs = tuple(sorted(set(variables)))
    for v in vs:
        if not 1 <= v <= source.num_vars:
            raise ValueError(f"variable {v} outside universe 1..{source.num_vars}")

    clauses: list[tuple[int, ...]] = list(source.clauses)
    blocks: list[UpacBlock] = []
    next_aux = source.num_vars + 1
    for v in vs:
        for literal in (v, -v):
            extended = CnfFormula(
                source.clauses + ((literal,),), num_vars=source.num_vars
            )
            red = contra_to_prop(extended, first_aux=next_aux)
            start = len(clauses)
            clauses.extend(red.formula.clauses)
            guard_index = len(clauses)
            clauses.append((-red.map.output_var, -literal))
            blocks.append(
                UpacBlock(
                    literal=literal,
                    reduction=red,
                    start=start,
                    end=guard_index + 1,
                    guard_index=guard_index,
                )
            )
            next_aux = red.map.output_var + 1

    formula = CnfFormula(clauses, num_vars=next_aux - 1)
    return Composition(
        formula=formula, source=source, variables=vs, blocks=tuple(blocks)
    )


def render_simulation_map(sim_map: SimulationMap) -> str:
    """Serialize to the side-map format: one "x <lit> <level> <var>"
    line per auxiliary in allocation order, then "s <var>"."""
    lines = []
    for (lit, level), var in sorted(sim_map.aux.items(), key=lambda kv: kv[1]):
        lines.append(f"x {lit} {level} {var}")
    lines.append(f"s {sim_map.output_var}")
    return "\n".join(lines) + "\n"


def parse_simulation_map(text: str) -> SimulationMap:
    aux: dict[tuple[int, int], int] = {}
    output_var: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "x" and len(fields) == 4:
            lit, level, var = int(fields[1]), int(fields[2]), int(fields[3])
            aux[(lit, level)] = var
        elif fields[0] == "s" and len(fields) == 2:
            output_var = int(fields[1])
        else:
            raise ValueError(f"line {lineno}: bad side-map line {line!r}")
    if output_var is None:
        raise ValueError("side map has no output line")
    if not aux:
        raise ValueError("side map has no auxiliary lines")
    n = max(abs(lit) for lit, _ in aux)
    return SimulationMap(
        source_num_vars=n,
        levels=max(level for _, level in aux),
        first_aux=min(aux.values()),
        output_var=output_var,
        aux=aux,
    )
