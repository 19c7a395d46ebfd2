"""
Watching unit propagation work, one round at a time
===================================================

The running example: (a) & (~a | b | c) & (~c | ~d), with b set false
and d set true from outside.  The unit clause forces a, then a forces c
(b is off), and c collides with d's clause.
"""

from unitprop import (
    CnfFormula,
    assignment,
    infers,
    propagate_fixpoint,
    propagate_staged,
    render_outcome,
    render_trace,
    restrict,
)

names = {1: "a", 2: "b", 3: "c", 4: "d"}

formula = CnfFormula([(1,), (-1, 2, 3), (-3, -4)], num_vars=4)
bindings = assignment([-2, 4])

print("formula:", formula)
print("bindings: ~b, d")
print()

# restriction = the formula plus one unit clause per binding
restricted = restrict(formula, bindings)
print("restricted:", restricted)
print()

# the queue engine stops at the first contradiction
print("-- fixpoint engine --")
print(render_outcome(propagate_fixpoint(restricted), names=names))
print()

# the staged engine works in breadth-first rounds and keeps going,
# so the table shows both c and ~c landing at stage 2
print("-- staged engine --")
print(render_trace(propagate_staged(restricted), names=names))
print()

# three-valued queries against the same machinery
print("does {a} force c?    ", infers(formula, assignment([1]), 3))
print("does {} force a?     ", infers(formula, frozenset(), 1))
print("what about ~b, d?    ", infers(formula, bindings, 3))
