"""Independent reference implementations used to validate the package.

Deliberately naive: set-based loops and full truth-table scans, sharing
no code with the library.  If these disagree with the engines, the
engines are wrong.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence


def naive_unit_closure(
    clauses: Sequence[Sequence[int]], seed: Iterable[int] = ()
) -> tuple[bool, set[int]]:
    """Textbook unit propagation: scan clauses until nothing changes.

    Returns (conflict, closure).  The closure may be left mid-way when a
    conflict is found, which is all the comparisons need.
    """
    known: set[int] = set(seed)
    changed = True
    while changed:
        changed = False
        for clause in clauses:
            live = [lit for lit in clause if -lit not in known]
            if any(lit in known for lit in live):
                continue
            if not live:
                return True, known
            if len(live) == 1:
                known.add(live[0])
                changed = True
    return False, known


def scan_falsifies(
    sat, variables: Sequence[int], bindings: Iterable[int]
) -> bool:
    """No complete extension satisfies, by direct enumeration."""
    bound = frozenset(bindings)
    free = [v for v in variables if v not in bound and -v not in bound]
    for signs in itertools.product((1, -1), repeat=len(free)):
        full = bound | frozenset(s * v for s, v in zip(signs, free))
        if sat(full):
            return False
    return True


def scan_forced(
    sat, variables: Sequence[int], bindings: Iterable[int], literal: int
) -> bool:
    """Every satisfying complete extension contains the literal.

    The dual formulation of "adding the opposite literal falsifies":
    used to cross-check the arc oracle without reusing its definition.
    """
    bound = frozenset(bindings)
    free = [v for v in variables if v not in bound and -v not in bound]
    for signs in itertools.product((1, -1), repeat=len(free)):
        full = bound | frozenset(s * v for s, v in zip(signs, free))
        if sat(full) and literal not in full:
            return False
    return True
