from __future__ import annotations

from fractions import Fraction

import pytest

from tightbounds.conjectures import (
    AffineForm,
    LinearConjecture,
    conjectures_from_json,
    detect_equalities,
    filter_blocked_families,
    filter_known,
    fit_all_models,
    make_all_lower_linear_conjectures,
    make_all_upper_2d_conjectures,
    make_all_upper_linear_conjectures,
    render_conjecture,
    render_equality,
    render_run,
    run_to_json,
    static_dalmatian,
    touch_and_sharp,
    write_on_the_wall,
)
from tightbounds.fitting import LOWER, UPPER
from tightbounds.table import DEFAULT_GRAPH_HYPOTHESES, Hypothesis

F = Fraction


def form(*terms, intercept=0):
    return AffineForm(
        terms=tuple((name, F(slope)) for name, slope in terms),
        intercept=F(intercept),
    )


def hyp(*names):
    return Hypothesis(names)


# The eighteen upper bounds on the independence number, as
# (hypothesis conjuncts, rhs form, touch) triples.
EXPECTED_UPPER_18 = {
    (frozenset({"connected"}), form(("n", F(1, 2)), intercept=1), 2),
    (frozenset({"tree"}), form(("n", F(1, 2)), intercept=1), 2),
    (frozenset({"connected", "regular"}), form(("n", F(1, 2))), 2),
    (frozenset({"connected", "bipartite"}), form(("n", F(1, 2)), intercept=1), 2),
    (frozenset({"tree"}), form(("matching_number", 1), intercept=2), 2),
    (frozenset({"connected", "regular"}), form(("matching_number", 1)), 3),
    (frozenset({"connected"}), form(("n_minus_matching_number", 1)), 6),
    (frozenset({"tree"}), form(("n_minus_matching_number", 1)), 3),
    (frozenset({"connected", "regular"}), form(("n_minus_matching_number", 1)), 2),
    (frozenset({"connected", "bipartite"}), form(("n_minus_matching_number", 1)), 5),
    (frozenset({"connected"}), form(("n_minus_minimum_degree", 1)), 7),
    (frozenset({"tree"}), form(("n_minus_minimum_degree", F(1, 2)), intercept=F(3, 2)), 2),
    (frozenset({"connected", "regular"}), form(("n_minus_minimum_degree", 1)), 4),
    (frozenset({"connected", "bipartite"}), form(("n_minus_minimum_degree", 1)), 4),
    (frozenset({"connected"}), form(("maximum_degree_squared", F(2, 5)), intercept=F(2, 5)), 3),
    (frozenset({"tree"}), form(("maximum_degree_squared", F(2, 5)), intercept=F(2, 5)), 2),
    (frozenset({"connected", "regular"}), form(("maximum_degree_squared", F(1, 6)), intercept=F(4, 3)), 2),
    (frozenset({"connected", "bipartite"}), form(("maximum_degree_squared", F(2, 5)), intercept=F(2, 5)), 3),
}

# The final merged-and-filtered output for targets (independence, matching).
EXPECTED_RUN_21 = [
    "Conjecture 1. If G is connected, then independence_number(G) <= n_minus_minimum_degree(G). This bound is sharp on 7 graphs.",
    "Conjecture 2. If G is connected, then independence_number(G) <= n_minus_matching_number(G). This bound is sharp on 6 graphs.",
    "Conjecture 3. If G is connected and bipartite, then independence_number(G) >= n_minus_matching_number(G). This bound is sharp on 5 graphs.",
    "Conjecture 4. If G is connected, then matching_number(G) <= 1/2 n(G). This bound is sharp on 5 graphs.",
    "Conjecture 5. If G is connected, then matching_number(G) <= n_minus_matching_number(G). This bound is sharp on 5 graphs.",
    "Conjecture 6. If G is connected and regular, then independence_number(G) >= n_minus_minimum_degree(G). This bound is sharp on 4 graphs.",
    "Conjecture 7. If G is connected, then independence_number(G) >= n_minus_matching_number(G) + -1. This bound is sharp on 3 graphs.",
    "Conjecture 8. If G is connected, then independence_number(G) >= 1/3 n_minus_minimum_degree(G) + 2/3. This bound is sharp on 3 graphs.",
    "Conjecture 9. If G is connected and regular, then matching_number(G) >= independence_number(G). This bound is sharp on 3 graphs.",
    "Conjecture 10. If G is connected and regular, then matching_number(G) >= n_minus_minimum_degree(G). This bound is sharp on 3 graphs.",
    "Conjecture 11. If G is tree, then matching_number(G) <= 1/3 n(G). This bound is sharp on 2 graphs.",
    "Conjecture 12. If G is tree, then matching_number(G) <= 1/2 independence_number(G). This bound is sharp on 2 graphs.",
    "Conjecture 13. If G is tree, then matching_number(G) <= 1/2 n_minus_matching_number(G). This bound is sharp on 2 graphs.",
    "Conjecture 14. If G is tree, then matching_number(G) <= 1/3 n_minus_minimum_degree(G) + 1/3. This bound is sharp on 2 graphs.",
    "Conjecture 15. If G is tree, then matching_number(G) <= 1/5 maximum_degree_squared(G) + 1/5. This bound is sharp on 2 graphs.",
    "Conjecture 16. If G is connected, then matching_number(G) >= 1/2 n(G) + -1. This bound is sharp on 2 graphs.",
    "Conjecture 17. If G is tree, then matching_number(G) >= 1/2 n(G) + -1. This bound is sharp on 2 graphs.",
    "Conjecture 18. If G is connected and bipartite, then matching_number(G) >= 1/2 n(G) + -1. This bound is sharp on 2 graphs.",
    "Conjecture 19. If G is tree, then matching_number(G) >= 1/2 n_minus_minimum_degree(G) + -1/2. This bound is sharp on 2 graphs.",
    "Conjecture 20. If G is connected and bipartite, then matching_number(G) >= 1/2 n_minus_minimum_degree(G) + -1/2. This bound is sharp on 2 graphs.",
    "Conjecture 21. If G is connected and regular, then matching_number(G) >= 1/5 maximum_degree_squared(G) + 1/5. This bound is sharp on 2 graphs.",
]

EXPECTED_DALMATIAN_2 = [
    "Conjecture 1. If G is connected, then independence_number(G) <= n_minus_minimum_degree(G). This bound is sharp on 7 graphs.",
    "Conjecture 2. If G is connected, then independence_number(G) <= n_minus_matching_number(G). This bound is sharp on 6 graphs.",
]


def upper_18(table):
    return make_all_upper_linear_conjectures(
        table, "independence_number", table.numeric_columns, DEFAULT_GRAPH_HYPOTHESES
    )


class TestGeneration:
    def test_twenty_models_eighteen_conjectures(self, fig1_table):
        fits = fit_all_models(
            fig1_table, "independence_number", fig1_table.numeric_columns,
            DEFAULT_GRAPH_HYPOTHESES, UPPER,
        )
        assert len(fits) == 20
        conjectures = [f.conjecture for f in fits if f.conjecture is not None]
        assert len(conjectures) == 18

    def test_upper_set_matches_published_triples(self, fig1_table):
        produced = {
            (c.hypothesis.conjuncts, c.rhs, c.touch) for c in upper_18(fig1_table)
        }
        assert produced == EXPECTED_UPPER_18

    def test_model_count_is_x_minus_1_times_y(self, fig1_table):
        for direction in (UPPER, LOWER):
            fits = fit_all_models(
                fig1_table, "matching_number", fig1_table.numeric_columns,
                DEFAULT_GRAPH_HYPOTHESES, direction,
            )
            assert len(fits) == (len(fig1_table.numeric_columns) - 1) * 4

    def test_lower_examples_present(self, fig1_table):
        lowers = make_all_lower_linear_conjectures(
            fig1_table, "independence_number", fig1_table.numeric_columns,
            DEFAULT_GRAPH_HYPOTHESES,
        )
        produced = {(c.hypothesis.conjuncts, c.rhs, c.touch) for c in lowers}
        assert (
            frozenset({"connected", "regular"}), form(("n_minus_minimum_degree", 1)), 4
        ) in produced
        assert (
            frozenset({"connected"}),
            form(("n_minus_minimum_degree", F(1, 3)), intercept=F(2, 3)),
            3,
        ) in produced

    def test_identical_rows_generate_nothing(self, fig1_table):
        from tightbounds.datasets import figure1_graphs
        from tightbounds.table import build_graph_table

        g1 = figure1_graphs()[0]
        twin = g1.relabeled("twin")
        table = build_graph_table([g1, twin])
        ups = make_all_upper_linear_conjectures(
            table, "independence_number", ("n", "independence_number"),
            [Hypothesis({"connected"})],
        )
        assert ups == []

    def test_soundness_every_conjecture_reverifies(self, fig1_table):
        run = write_on_the_wall(
            fig1_table, ["independence_number", "matching_number"], use_dalmatian=False
        )
        for c in run.conjectures:
            for row in fig1_table.select_rows(c.hypothesis):
                assert c.holds_on(fig1_table, row)

    def test_unknown_target_rejected(self, fig1_table):
        from tightbounds.table import TableError

        with pytest.raises(TableError, match="unknown invariant"):
            make_all_upper_linear_conjectures(
                fig1_table, "girth", fig1_table.numeric_columns, DEFAULT_GRAPH_HYPOTHESES
            )


class TestTouchAndSharp:
    def test_alpha_le_n_minus_delta(self, fig1_table):
        touch, sharp = touch_and_sharp(
            fig1_table, hyp("connected"), "independence_number", UPPER,
            form(("n_minus_minimum_degree", 1)),
        )
        assert touch == 7
        assert sharp == {"G_1", "G_2", "G_3", "G_4", "G_5", "G_6", "G_7"}

    def test_alpha_le_n_minus_mu(self, fig1_table):
        touch, _ = touch_and_sharp(
            fig1_table, hyp("connected"), "independence_number", UPPER,
            form(("n_minus_matching_number", 1)),
        )
        assert touch == 6

    def test_empty_selection(self, fig1_table):
        touch, sharp = touch_and_sharp(
            fig1_table, hyp("tree", "regular"), "independence_number", UPPER,
            form(("n", 1)),
        )
        assert (touch, sharp) == (0, frozenset())


class TestStaticDalmatian:
    def test_listing_reduction_to_two(self, fig1_table):
        ups = sorted(upper_18(fig1_table), key=lambda c: c.touch, reverse=True)
        kept = static_dalmatian(fig1_table, ups)
        rendered = [
            render_conjecture(c, k, fig1_table.boolean_columns)
            for k, c in enumerate(kept, start=1)
        ]
        assert rendered == EXPECTED_DALMATIAN_2

    def test_single_conjecture_kept(self, fig1_table):
        ups = upper_18(fig1_table)[:1]
        assert static_dalmatian(fig1_table, ups) == ups

    def test_identical_sharp_sets_both_kept(self, fig1_table):
        # Both sharp on exactly {G_3, G_4, G_5, G_6, G_9}: equality branch.
        shared = frozenset({"G_3", "G_4", "G_5", "G_6", "G_9"})
        a = LinearConjecture(
            hyp("connected"), "matching_number", UPPER,
            form(("n", F(1, 2))), 5, shared,
        )
        b = LinearConjecture(
            hyp("connected"), "matching_number", UPPER,
            form(("n_minus_matching_number", 1)), 5, shared,
        )
        # Sharp only inside the union: dropped (neither equal nor new).
        c = LinearConjecture(
            hyp("connected", "regular"), "matching_number", UPPER,
            form(("n", F(1, 2))), 3, frozenset({"G_3", "G_5", "G_6"}),
        )
        kept = static_dalmatian(fig1_table, [a, b, c])
        assert kept == [a, b]

    def test_unsorted_input_rejected(self, fig1_table):
        ups = upper_18(fig1_table)
        ups = sorted(ups, key=lambda c: c.touch)  # ascending = wrong
        with pytest.raises(ValueError, match="sorted by touch"):
            static_dalmatian(fig1_table, ups)

    def test_idempotent(self, fig1_table):
        ups = sorted(upper_18(fig1_table), key=lambda c: c.touch, reverse=True)
        once = static_dalmatian(fig1_table, ups)
        assert static_dalmatian(fig1_table, once) == once

    def test_union_growth_items_are_load_bearing(self, fig1_table):
        ups = sorted(upper_18(fig1_table), key=lambda c: c.touch, reverse=True)
        kept = static_dalmatian(fig1_table, ups)
        union = set()
        for c in kept:
            union |= c.sharp_set
        # dropping any union-growing kept conjecture shrinks the union
        for i, c in enumerate(kept):
            rest = set()
            for j, other in enumerate(kept):
                if j != i:
                    rest |= other.sharp_set
            if not (c.sharp_set <= rest):
                assert rest != union


class TestWriteOnTheWall:
    def test_full_run_matches_published_21(self, fig1_table):
        run = write_on_the_wall(fig1_table, ["independence_number", "matching_number"])
        assert render_run(run).splitlines() == EXPECTED_RUN_21

    def test_touch_sorted_non_increasing(self, fig1_table):
        run = write_on_the_wall(fig1_table, ["independence_number", "matching_number"])
        touches = [c.touch for c in run.conjectures]
        assert touches == sorted(touches, reverse=True)

    def test_empty_targets(self, fig1_table):
        run = write_on_the_wall(fig1_table, [])
        assert run.conjectures == ()

    def test_limit_caps_output(self, fig1_table):
        run = write_on_the_wall(
            fig1_table, ["independence_number", "matching_number"], limit=5
        )
        assert len(run.conjectures) == 5
        assert render_run(run).splitlines() == EXPECTED_RUN_21[:5]

    def test_dalmatian_off_keeps_everything(self, fig1_table):
        run = write_on_the_wall(
            fig1_table, ["independence_number"], use_dalmatian=False
        )
        ups = [c for c in run.conjectures if c.direction == UPPER]
        assert len(ups) == 18


class TestEqualities:
    def test_koenig_equality_detected(self, fig1_table):
        run = write_on_the_wall(fig1_table, ["independence_number", "matching_number"])
        rendered = [
            render_equality(e, fig1_table.boolean_columns) for e in run.equalities
        ]
        assert (
            "If G is connected and bipartite, then independence_number(G) = "
            "n_minus_matching_number(G)." in rendered
        )

    def test_no_pairs_no_equalities(self, fig1_table):
        run = write_on_the_wall(fig1_table, ["independence_number"])
        uppers = [c for c in run.conjectures if c.direction == UPPER]
        assert detect_equalities(uppers) == []

    def test_same_hypothesis_unions_to_itself(self):
        up = LinearConjecture(
            hyp("connected"), "independence_number", UPPER, form(("n", 1)), 1,
            frozenset({"G_1"}),
        )
        low = LinearConjecture(
            hyp("connected"), "independence_number", LOWER, form(("n", 1)), 1,
            frozenset({"G_1"}),
        )
        eqs = detect_equalities([up, low])
        assert len(eqs) == 1
        assert eqs[0].hypothesis == hyp("connected")


class TestFilters:
    def test_known_pattern_removes_conjecture_3(self, fig1_table):
        run = write_on_the_wall(fig1_table, ["independence_number", "matching_number"])
        koenig = LinearConjecture(
            hyp("connected", "bipartite"), "independence_number", LOWER,
            form(("n_minus_matching_number", 1)), 0, frozenset(),
        )
        filtered = filter_known(run, [koenig])
        assert len(filtered.conjectures) == 20
        assert EXPECTED_RUN_21[2].split(". ", 1)[1] not in render_run(filtered)

    def test_weaker_known_hypothesis_also_removes(self, fig1_table):
        run = write_on_the_wall(fig1_table, ["independence_number", "matching_number"])
        weaker = LinearConjecture(
            hyp("connected"), "independence_number", LOWER,
            form(("n_minus_matching_number", 1)), 0, frozenset(),
        )
        filtered = filter_known(run, [weaker])
        assert all(
            not (
                c.direction == LOWER
                and c.target == "independence_number"
                and c.rhs == form(("n_minus_matching_number", 1))
            )
            for c in filtered.conjectures
        )

    def test_empty_known_list_is_identity(self, fig1_table):
        run = write_on_the_wall(fig1_table, ["independence_number"])
        assert filter_known(run, []).conjectures == run.conjectures

    def test_blocklist_removes_family(self, fig1_table):
        ups = upper_18(fig1_table)
        run = write_on_the_wall(
            fig1_table, ["independence_number"], use_dalmatian=False
        )
        blocked = filter_blocked_families(
            run, [("independence_number", UPPER, "maximum_degree_squared")]
        )
        removed = [c for c in run.conjectures if c not in blocked.conjectures]
        assert len([c for c in removed if c.direction == UPPER]) == 4
        assert all(
            "maximum_degree_squared" in c.rhs.invariants()
            for c in removed
            if c.direction == UPPER
        )
        # sanity: those four are exactly the published delta-squared uppers
        assert sum(
            1 for c in ups if "maximum_degree_squared" in c.rhs.invariants()
        ) == 4

    def test_empty_blocklist_is_identity(self, fig1_table):
        run = write_on_the_wall(fig1_table, ["independence_number"])
        assert filter_blocked_families(run, []).conjectures == run.conjectures

    def test_blocking_unused_invariant_is_identity(self, fig1_table):
        run = write_on_the_wall(fig1_table, ["independence_number"])
        out = filter_blocked_families(run, [("independence_number", UPPER, "girth")])
        assert out.conjectures == run.conjectures


class TestTwoInvariantPipeline:
    def test_generates_ok_two_slope_bounds(self, fig1_table):
        conjectures = make_all_upper_2d_conjectures(
            fig1_table, "independence_number",
            ("n", "matching_number", "n_minus_minimum_degree"),
            [hyp("connected")],
        )
        assert conjectures
        for c in conjectures:
            assert len(c.rhs.terms) == 2
            for row in fig1_table.select_rows(c.hypothesis):
                assert c.holds_on(fig1_table, row)


class TestSerialization:
    def test_json_round_trip(self, fig1_table):
        run = write_on_the_wall(fig1_table, ["independence_number", "matching_number"])
        again = conjectures_from_json(run_to_json(run))
        assert [c.signature() for c in again] == [
            c.signature() for c in run.conjectures
        ]
        assert [c.touch for c in again] == [c.touch for c in run.conjectures]

    def test_render_zero_slope_forms_rejected(self):
        with pytest.raises(ValueError, match="zero slope"):
            form(("n", 0))
