"""Exhaustive verdicts: the brute-force checkers and their renderings."""

import dataclasses

import pytest
from hypothesis import given, settings, strategies as st

from unitprop.cnf import CnfFormula, assignment, restrict
from unitprop.constraints import (
    at_most_k,
    enumerate_partials,
    inconsistency_fn,
    pairwise_at_most_one,
    split_pair_at_most_one,
)
from unitprop.propagate import propagate_fixpoint
from unitprop.reductions import (
    FamilyCounts,
    compose_upac,
    contra_to_prop,
    prop_to_contra,
)
from unitprop.verify import (
    SIZE_BOUND_FACTOR,
    check_size_bound,
    check_stage_correspondence,
    computes_by_contradiction,
    computes_by_propagation,
    contradiction_fn,
    is_upac,
    is_upi,
    render_verdict,
)

EXAMPLE = CnfFormula([(1,), (-1, 2, 3), (-3, -4)], num_vars=4)
AMO3 = at_most_k(1, [1, 2, 3])


def small_formulas(max_vars=3, max_clauses=4, max_len=3):
    def build(n):
        lit = st.builds(
            lambda sign, v: sign * v,
            st.sampled_from([1, -1]),
            st.integers(1, n),
        )
        clause = st.lists(lit, min_size=1, max_size=max_len).map(tuple)
        return st.lists(clause, min_size=0, max_size=max_clauses).map(
            lambda cs: CnfFormula(cs, num_vars=n)
        )

    return st.integers(1, max_vars).flatmap(build)


class TestComputesByContradiction:
    def test_pairwise_encoding_computes_inconsistency(self):
        verdict = computes_by_contradiction(
            pairwise_at_most_one([1, 2, 3]), inconsistency_fn(AMO3)
        )
        assert verdict.holds
        assert verdict.checked == 27

    def test_wrong_formula_yields_the_first_counterexample(self):
        verdict = computes_by_contradiction(
            CnfFormula([(1,)], num_vars=3), inconsistency_fn(AMO3)
        )
        assert not verdict.holds
        assert verdict.checked == 3
        cex = verdict.counterexample
        assert cex.assignment == frozenset({-1})
        assert cex.expected == "no-conflict"
        assert cex.observed == "conflict"


class TestComputesByPropagation:
    def test_implication_formula(self):
        from unitprop.constraints import MatchingFunction

        f = MatchingFunction(
            variables=(1,),
            in_domain=lambda I: True,
            evaluate=lambda I: 1 in I,
        )
        verdict = computes_by_propagation(CnfFormula([(-1, 2)], num_vars=2), f, 2)
        assert verdict.holds
        assert verdict.checked == 3

    def test_conflicting_formula_fails(self):
        from unitprop.constraints import MatchingFunction

        f = MatchingFunction(
            variables=(1,),
            in_domain=lambda I: True,
            evaluate=lambda I: False,
        )
        verdict = computes_by_propagation(
            CnfFormula([(1,), (-1,)], num_vars=1), f, 1
        )
        assert not verdict.holds
        assert verdict.counterexample.expected == "no-conflict"
        assert verdict.counterexample.observed == "conflict"

    def test_ladder_computes_source_contradiction(self):
        out = contra_to_prop(EXAMPLE)
        verdict = computes_by_propagation(
            out.formula, contradiction_fn(EXAMPLE), out.map.output_var
        )
        assert verdict.holds
        assert verdict.checked == 81


class TestUpi:
    def test_pairwise_holds(self):
        verdict = is_upi(pairwise_at_most_one([1, 2, 3]), AMO3)
        assert verdict.holds
        assert verdict.checked == 27

    def test_split_pair_holds(self):
        amo2 = at_most_k(1, [1, 2])
        verdict = is_upi(split_pair_at_most_one([1, 2]), amo2)
        assert verdict.holds
        assert verdict.checked == 9

    def test_dropping_a_clause_breaks_it(self):
        mutated = CnfFormula(
            pairwise_at_most_one([1, 2, 3]).clauses[1:], num_vars=3
        )
        verdict = is_upi(mutated, AMO3)
        assert not verdict.holds
        assert verdict.checked == 5
        cex = verdict.counterexample
        assert cex.assignment == frozenset({1, 2})
        assert cex.expected == "conflict"
        assert cex.observed == "no-conflict"


class TestUpac:
    def test_pairwise_holds(self):
        verdict = is_upac(pairwise_at_most_one([1, 2, 3]), AMO3)
        assert verdict.holds
        assert verdict.checked == 27

    def test_split_pair_is_upi_but_not_upac(self):
        amo2 = at_most_k(1, [1, 2])
        verdict = is_upac(split_pair_at_most_one([1, 2]), amo2)
        assert not verdict.holds
        assert verdict.checked == 2
        cex = verdict.counterexample
        assert cex.assignment == frozenset({1})
        assert cex.literal == -2
        assert cex.expected == "inferred"
        assert cex.observed == "absent"

    def test_composition_repairs_the_split_pair(self):
        amo2 = at_most_k(1, [1, 2])
        comp = compose_upac(split_pair_at_most_one([1, 2]), variables=[1, 2])
        verdict = is_upac(comp.formula, amo2)
        assert verdict.holds
        assert verdict.checked == 9

    def test_deleting_a_forcing_guard_breaks_the_composition(self):
        amo2 = at_most_k(1, [1, 2])
        comp = compose_upac(split_pair_at_most_one([1, 2]), variables=[1, 2])
        block = comp.block_for(2)
        mutated = CnfFormula(
            comp.formula.clauses[: block.guard_index]
            + comp.formula.clauses[block.guard_index + 1 :],
            num_vars=comp.formula.num_vars,
        )
        verdict = is_upac(mutated, amo2)
        assert not verdict.holds
        assert verdict.checked == 2
        cex = verdict.counterexample
        assert cex.assignment == frozenset({1})
        assert cex.literal == -2
        assert cex.observed == "absent"

    def test_deleting_a_vacuous_guard_changes_nothing(self):
        # at-most-one never forces a positive literal, so the guards for
        # negative literals can never fire; removing one is undetectable
        amo2 = at_most_k(1, [1, 2])
        comp = compose_upac(split_pair_at_most_one([1, 2]), variables=[1, 2])
        block = comp.block_for(-2)
        mutated = CnfFormula(
            comp.formula.clauses[: block.guard_index]
            + comp.formula.clauses[block.guard_index + 1 :],
            num_vars=comp.formula.num_vars,
        )
        assert is_upac(mutated, amo2).holds


class TestStageCorrespondence:
    def test_example_bindings(self):
        verdict = check_stage_correspondence(EXAMPLE, assignment([-2, 4]))
        assert verdict.holds
        assert verdict.checked == 40

    def test_reduction_can_be_reused(self):
        out = contra_to_prop(EXAMPLE)
        for part in [frozenset(), assignment([1]), assignment([-2, 4])]:
            assert check_stage_correspondence(EXAMPLE, part, reduction=out).holds

    def test_mismatched_reduction_is_caught(self):
        wrong = contra_to_prop(CnfFormula([(-1,)], num_vars=1))
        verdict = check_stage_correspondence(
            CnfFormula([(1,)], num_vars=1), (), reduction=wrong
        )
        assert not verdict.holds
        cex = verdict.counterexample
        assert (cex.literal, cex.stage) == (1, 1)
        assert cex.expected == "present"
        assert cex.observed == "absent"


class TestSizeBound:
    def test_example_within_bound(self):
        assert check_size_bound(contra_to_prop(EXAMPLE)).holds

    def test_constant_is_tight_at_twelve(self):
        out = contra_to_prop(CnfFormula([(1,)], num_vars=1))
        assert SIZE_BOUND_FACTOR == 12
        assert check_size_bound(out).holds
        verdict = check_size_bound(out, factor=8)
        assert not verdict.holds
        assert verdict.counterexample.expected == "size<=8"
        assert verdict.counterexample.observed == "size=12"

    def test_tampered_counts_are_caught(self):
        out = contra_to_prop(EXAMPLE)
        bad = dataclasses.replace(
            out, family_counts=FamilyCounts(8, 32, 20, 2, 4)
        )
        assert not check_size_bound(bad).holds


class TestContradictionFn:
    def test_matches_restricted_propagation(self):
        f = contradiction_fn(EXAMPLE)
        assert f.evaluate(assignment([-2, 4]))
        assert not f.evaluate(frozenset())
        for part in enumerate_partials(EXAMPLE.variables):
            expected = propagate_fixpoint(restrict(EXAMPLE, part)).conflicted
            assert f.evaluate(part) == expected


class TestRendering:
    def test_holds_line(self):
        verdict = is_upi(pairwise_at_most_one([1, 2, 3]), AMO3)
        assert render_verdict(verdict) == "HOLDS checked=27"

    def test_fails_block(self):
        amo2 = at_most_k(1, [1, 2])
        verdict = is_upac(split_pair_at_most_one([1, 2]), amo2)
        assert render_verdict(verdict) == (
            "FAILS checked=2\n"
            "  assignment: v1=1\n"
            "  literal: -2\n"
            "  expected: inferred\n"
            "  observed: absent"
        )

    def test_empty_assignment_and_note(self):
        out = contra_to_prop(CnfFormula([(1,)], num_vars=1))
        verdict = check_size_bound(out, factor=8)
        text = render_verdict(verdict)
        assert "assignment: (empty)" in text
        assert "note: size bound exceeded" in text


class TestRoundTrip:
    @settings(deadline=None, max_examples=40)
    @given(data=st.data())
    def test_ladder_then_negated_output_preserves_conflicts(self, data):
        source = data.draw(small_formulas())
        signs = data.draw(
            st.lists(
                st.sampled_from([0, 1, -1]),
                min_size=source.num_vars,
                max_size=source.num_vars,
            )
        )
        part = frozenset(s * v for v, s in enumerate(signs, start=1) if s)
        out = contra_to_prop(source)
        back = prop_to_contra(out.formula, out.map.output_var)
        direct = propagate_fixpoint(restrict(source, part)).conflicted
        routed = propagate_fixpoint(back, assignment=part).conflicted
        assert routed == direct
