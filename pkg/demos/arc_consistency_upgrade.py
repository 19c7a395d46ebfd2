"""
Upgrading an encoding from detecting to forcing
===============================================

The split-pair at-most-one encoding detects every bad assignment under
unit propagation, but it never *forces* anything: set v1 true and it
stays silent about v2.  Conjoining one simulation block plus one guard
clause per literal makes propagation pronounce ~v2 on its own.
"""

from unitprop import (
    CnfFormula,
    at_most_k,
    compose_upac,
    is_upac,
    is_upi,
    propagate_fixpoint,
    render_verdict,
    restrict,
    split_pair_at_most_one,
)

constraint = at_most_k(1, [1, 2])
base = split_pair_at_most_one([1, 2])
print("base encoding:", base)
print()

print("detects every inconsistency?")
print(" ", render_verdict(is_upi(base, constraint)))
print("forces every implied literal?")
print(" ", render_verdict(is_upac(base, constraint)).replace("\n", "\n  "))
print()

# one block per literal: a simulation of "base plus that literal",
# whose output s feeds a guard clause (~s | ~literal)
composed = compose_upac(base, variables=[1, 2])
print(
    "composed:",
    len(composed.formula), "clauses,",
    composed.formula.num_vars, "vars,",
    len(composed.blocks), "blocks",
)
print("now arc consistent?")
print(" ", render_verdict(is_upac(composed.formula, constraint)))
print()

# see the repair in action: v1 true now propagates to ~v2
final = propagate_fixpoint(restrict(composed.formula, frozenset({1}))).final
print("propagating from {v1}: infers ~v2?", -2 in final)
print()

# the guards carry the forcing: delete the one for v2 and the checker
# pinpoints the regression
block = composed.block_for(2)
mutated = CnfFormula(
    composed.formula.clauses[: block.guard_index]
    + composed.formula.clauses[block.guard_index + 1 :],
    num_vars=composed.formula.num_vars,
)
print("after deleting the guard for v2:")
print(" ", render_verdict(is_upac(mutated, constraint)).replace("\n", "\n  "))
