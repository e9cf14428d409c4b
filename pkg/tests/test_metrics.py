import json
import random
from fractions import Fraction

import pytest

from netsparsity.graph_core import Graph, degree_vector, degree_vector_from_sequence
from netsparsity.metrics import (
    ReferencePolicy,
    ReferenceTotal,
    ReferenceTotalError,
    build_report,
    edge_density,
    gini_index,
    gini_mad_oracle,
    lorenz_curve,
    rank_weighted_sum,
    resolve_reference_total,
    sparsity_index,
)
from netsparsity.sequences import PowerLawSpec, build_frequency_table, frequency_to_sequence

from oracles import gini_rank_formula, si_trapezoid


def vec(*values):
    return degree_vector_from_sequence(values)


def complete_graph(n):
    return Graph(node_count=n, edges={(u, v): 1 for u in range(n) for v in range(u + 1, n)})


def random_masses(rng, n, rational=False):
    if rational:
        return [Fraction(rng.randint(0, 40), rng.randint(1, 7)) for _ in range(n)]
    return [rng.randint(0, 40) for _ in range(n)]


class TestGiniIndex:
    def test_five_node_example(self):
        assert gini_index(vec(1, 1, 2, 2, 4)) == Fraction(7, 25)

    def test_constant_vector_is_zero(self):
        for d, n in [(1, 2), (3, 5), (7, 9)]:
            assert gini_index(vec(*[d] * n)) == 0

    def test_second_pair_of_examples(self):
        assert gini_index(vec(1, 2, 2, 3, 4)) == Fraction(7, 30)
        assert gini_index(vec(2, 2, 2, 3, 3)) == Fraction(1, 10)

    def test_power_law_fixture_against_rank_formula(self):
        table = build_frequency_table(PowerLawSpec(2.0, 200, 11), "fixture")
        b = frequency_to_sequence(table)
        expected = gini_rank_formula(b.values)
        assert gini_index(b) == expected
        assert float(expected) == 0.3975

    def test_zero_total_rejected(self):
        with pytest.raises(ValueError, match="zero total"):
            gini_index(vec(0, 0, 0))

    def test_range_and_equality_cases(self):
        rng = random.Random(21)
        for _ in range(200):
            n = rng.randint(1, 30)
            values = random_masses(rng, n, rational=rng.random() < 0.3)
            if sum(values) == 0:
                continue
            g = gini_index(degree_vector_from_sequence(values))
            assert 0 <= g <= 1 - Fraction(1, n)
            assert (g == 0) == (len(set(values)) == 1)

    def test_maximal_concentration_hits_upper_bound(self):
        assert gini_index(vec(0, 0, 0, 12)) == 1 - Fraction(1, 4)


class TestRankWeightedSum:
    def test_matches_direct_summation_on_small_vectors(self):
        b = vec(1, 1, 2, 2, 4)
        assert rank_weighted_sum(b) == Fraction(
            sum(v * (2 * (5 - i) + 1) for i, v in enumerate(b.values, 1)), 2
        )

    def test_vectorized_integer_path_agrees(self):
        # above the numpy cutoff the int64 dot product must stay exact
        rng = random.Random(29)
        values = [rng.randint(0, 50) for _ in range(5000)]
        b = degree_vector_from_sequence(values)
        n = b.n
        doubled = sum(v * (2 * (n - i) + 1) for i, v in enumerate(b.values, 1))
        assert rank_weighted_sum(b) == Fraction(doubled, 2)

    def test_huge_entries_fall_back_to_exact_python(self):
        values = [10**12 + i for i in range(5000)]
        b = degree_vector_from_sequence(values)
        n = b.n
        doubled = sum(v * (2 * (n - i) + 1) for i, v in enumerate(b.values, 1))
        assert rank_weighted_sum(b) == Fraction(doubled, 2)

    def test_rational_entries_stay_exact(self):
        values = [Fraction(i, 7) for i in range(1, 30)]
        b = degree_vector_from_sequence(values)
        n = b.n
        total = sum(v * Fraction(2 * (n - i) + 1, 2) for i, v in enumerate(b.values, 1))
        assert rank_weighted_sum(b) == total


class TestGiniMadOracle:
    def test_matches_on_examples(self):
        assert gini_mad_oracle(vec(1, 1, 2, 2, 4)) == Fraction(7, 25)
        assert gini_mad_oracle(vec(5, 5, 5)) == 0
        assert gini_mad_oracle(vec(1, 2, 2, 3, 4)) == Fraction(7, 30)

    def test_zero_total_rejected(self):
        with pytest.raises(ValueError, match="zero total"):
            gini_mad_oracle(vec(0, 0))

    def test_huge_entries_use_exact_python_loop(self):
        values = [2**45 + i * 3 for i in range(40)]
        b = degree_vector_from_sequence(values)
        assert gini_mad_oracle(b) == gini_index(b)

    def test_agrees_with_gini_index_on_random_vectors(self):
        rng = random.Random(22)
        for _ in range(200):
            n = rng.randint(1, 60)
            values = random_masses(rng, n, rational=rng.random() < 0.4)
            if sum(values) == 0:
                continue
            b = degree_vector_from_sequence(values)
            lhs, rhs = gini_index(b), gini_mad_oracle(b)
            assert abs(lhs - rhs) <= Fraction(1, 10**12) * max(abs(rhs), 1)


class TestSparsityIndex:
    def test_same_density_different_sparsity(self):
        ref = ReferenceTotal.custom(20)
        assert sparsity_index(vec(1, 1, 2, 2, 4), ref) == Fraction(16, 25)
        assert sparsity_index(vec(2, 2, 2, 2, 2), ref) == Fraction(1, 2)

    def test_cycles_under_potential_simple(self):
        four = vec(2, 2, 2, 2)
        eight = vec(*[2] * 8)
        assert sparsity_index(
            four, resolve_reference_total(ReferencePolicy.POTENTIAL_SIMPLE, four)
        ) == Fraction(1, 3)
        assert sparsity_index(
            eight, resolve_reference_total(ReferencePolicy.POTENTIAL_SIMPLE, eight)
        ) == Fraction(5, 7)

    def test_regular_graph_closed_form(self):
        rng = random.Random(23)
        for _ in range(100):
            n = rng.randint(2, 80)
            d = rng.randint(0, n - 2)
            b = vec(*[d] * n)
            ref = resolve_reference_total(ReferencePolicy.POTENTIAL_SIMPLE, b)
            assert sparsity_index(b, ref) == Fraction(n - d - 1, n - 1)

    def test_power_law_fixture_references(self):
        b = frequency_to_sequence(build_frequency_table(PowerLawSpec(2.0, 200, 11), "fixture"))
        si_simple = sparsity_index(b, resolve_reference_total(ReferencePolicy.POTENTIAL_SIMPLE, b))
        si_node = sparsity_index(b, resolve_reference_total(ReferencePolicy.NODE_MAX, b))
        assert abs(float(si_simple) - 0.9939) < 5e-4
        assert abs(float(si_node) - 0.89) < 5e-3

    def test_matches_gini_under_actual(self):
        b = vec(1, 2, 2, 3, 4)
        ref = resolve_reference_total(ReferencePolicy.ACTUAL, b)
        assert sparsity_index(b, ref) == gini_index(b)

    def test_all_zero_vector_is_maximally_sparse(self):
        b = vec(0, 0, 0, 0)
        assert sparsity_index(b, ReferenceTotal.custom(7)) == 1

    def test_reference_below_total_rejected(self):
        with pytest.raises(ReferenceTotalError, match="smaller"):
            sparsity_index(vec(1, 1, 2, 2, 4), ReferenceTotal.custom(9))

    def test_non_positive_reference_rejected(self):
        with pytest.raises(ReferenceTotalError, match="positive"):
            ReferenceTotal.custom(0)

    def test_agrees_with_trapezoid_oracle(self):
        rng = random.Random(24)
        for _ in range(100):
            n = rng.randint(1, 40)
            values = random_masses(rng, n, rational=rng.random() < 0.3)
            b = degree_vector_from_sequence(values)
            t1 = b.total_mass + rng.randint(1, 50)
            assert sparsity_index(b, ReferenceTotal.custom(t1)) == si_trapezoid(values, t1)


class TestConvexCombinationIdentity:
    def test_exact_identity_and_ordering(self):
        rng = random.Random(25)
        for _ in range(300):
            n = rng.randint(1, 50)
            values = random_masses(rng, n, rational=rng.random() < 0.3)
            if sum(values) == 0:
                continue
            b = degree_vector_from_sequence(values)
            t = b.total_mass
            t1 = t + Fraction(rng.randint(0, 60), rng.randint(1, 5))
            ref = ReferenceTotal.custom(t1)
            si, gi = sparsity_index(b, ref), gini_index(b)
            share = Fraction(t) / t1
            assert si == (1 - share) + share * gi
            assert si >= gi
            assert (si == gi) == (t1 == t)


class TestLorenzCurve:
    def test_complete_graph_is_diagonal(self):
        g = complete_graph(6)
        b = degree_vector(g)
        curve = lorenz_curve(b, resolve_reference_total(ReferencePolicy.ACTUAL, b))
        assert all(x == y for x, y in curve.points)

    def test_four_cycle_against_reference_total(self):
        curve = lorenz_curve(vec(2, 2, 2, 2), ReferenceTotal.custom(12))
        shares = tuple(y for _, y in curve.points)
        assert shares == (0, Fraction(1, 6), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))

    def test_below_diagonal_and_convex(self):
        rng = random.Random(26)
        for _ in range(150):
            n = rng.randint(1, 40)
            values = random_masses(rng, n)
            b = degree_vector_from_sequence(values)
            t1 = b.total_mass + rng.randint(1, 30)
            curve = lorenz_curve(b, ReferenceTotal.custom(t1))
            assert len(curve.points) == n + 1
            assert curve.points[0] == (0, 0)
            assert curve.final_share == Fraction(b.total_mass) / t1
            increments = []
            for (x0, y0), (x1, y1) in zip(curve.points, curve.points[1:]):
                assert y1 >= y0
                assert y1 <= x1
                increments.append(y1 - y0)
            assert increments == sorted(increments)

    def test_reference_below_total_rejected(self):
        with pytest.raises(ReferenceTotalError):
            lorenz_curve(vec(3, 3), ReferenceTotal.custom(5))

    def test_csv_shape(self):
        csv = lorenz_curve(vec(2, 2, 2, 2), ReferenceTotal.custom(12)).to_csv()
        lines = csv.strip().split("\n")
        assert lines[0] == "fraction,share"
        assert len(lines) == 6
        assert lines[1] == "0.0,0.0"


class TestEdgeDensity:
    def test_complete_graphs(self):
        for n in (2, 3, 5, 9):
            assert edge_density(complete_graph(n)) == 1

    def test_five_node_examples(self):
        g = Graph(node_count=5, edges={(0, 1): 1, (0, 2): 1, (0, 3): 1, (0, 4): 1, (1, 2): 1})
        assert edge_density(g) == Fraction(1, 2)

    def test_single_node_rejected(self):
        with pytest.raises(ValueError, match="two nodes"):
            edge_density(Graph(node_count=1, edges={}))

    def test_matches_total_over_potential_for_simple_graphs(self):
        rng = random.Random(27)
        for _ in range(50):
            n = rng.randint(2, 15)
            edges = {}
            for u in range(n):
                for v in range(u + 1, n):
                    if rng.random() < 0.5:
                        edges[(u, v)] = 1
            g = Graph(node_count=n, edges=edges)
            b = degree_vector(g)
            assert edge_density(g) == Fraction(b.total_mass, n * (n - 1))


class TestResolveReferenceTotal:
    def test_potential_simple_for_large_cycle(self):
        b = vec(*[2] * 1000)
        ref = resolve_reference_total(ReferencePolicy.POTENTIAL_SIMPLE, b)
        assert ref.resolved_value == 999000

    def test_node_max(self):
        b = frequency_to_sequence(build_frequency_table(PowerLawSpec(2.0, 200, 11), "fixture"))
        ref = resolve_reference_total(ReferencePolicy.NODE_MAX, b)
        assert ref.resolved_value == 2200

    def test_custom(self):
        b = vec(1, 1, 2)
        ref = resolve_reference_total(ReferencePolicy.CUSTOM, b, 460)
        assert ref.resolved_value == 460
        assert ref.policy is ReferencePolicy.CUSTOM

    def test_node_max_needs_positive_top_degree(self):
        with pytest.raises(ReferenceTotalError, match="all-zero"):
            resolve_reference_total(ReferencePolicy.NODE_MAX, vec(0, 0))

    def test_custom_below_total_rejected(self):
        with pytest.raises(ReferenceTotalError, match="below"):
            resolve_reference_total(ReferencePolicy.CUSTOM, vec(3, 3), 5)

    def test_custom_needs_value(self):
        with pytest.raises(ReferenceTotalError, match="needs a value"):
            resolve_reference_total(ReferencePolicy.CUSTOM, vec(1, 2))

    def test_weighted_max_needs_graph_with_edges(self):
        with pytest.raises(ReferenceTotalError, match="graph"):
            resolve_reference_total(ReferencePolicy.POTENTIAL_WEIGHTED_MAX, vec(1, 2))
        with pytest.raises(ReferenceTotalError, match="edge"):
            resolve_reference_total(
                ReferencePolicy.POTENTIAL_WEIGHTED_MAX, Graph(node_count=3, edges={})
            )

    def test_weighted_max_scales_with_top_weight(self):
        g = Graph(node_count=3, edges={(0, 1): 2, (1, 2): 5}, weighted=True)
        ref = resolve_reference_total(ReferencePolicy.POTENTIAL_WEIGHTED_MAX, g)
        assert ref.resolved_value == 3 * 2 * 5

    def test_actual_rejects_zero_total(self):
        with pytest.raises(ReferenceTotalError, match="zero"):
            resolve_reference_total(ReferencePolicy.ACTUAL, vec(0, 0))


class TestMetricsReport:
    def test_json_keys_and_values(self):
        g = Graph(node_count=5, edges={(0, 1): 1, (0, 2): 1, (0, 3): 1, (0, 4): 1, (1, 2): 1})
        report = build_report(g, ReferencePolicy.CUSTOM, 20)
        payload = json.loads(report.to_json())
        assert list(payload) == ["n", "T", "T1", "t1_policy", "gini", "sparsity_index", "edge_density"]
        assert payload == {
            "n": 5,
            "T": 10,
            "T1": 20,
            "t1_policy": "custom",
            "gini": 0.28,
            "sparsity_index": 0.64,
            "edge_density": 0.5,
        }

    def test_weighted_graph_flags_blind_density(self):
        g = Graph(node_count=3, edges={(0, 1): 4}, weighted=True)
        report = build_report(g, ReferencePolicy.NODE_MAX)
        assert report.weight_blind_density
        assert json.loads(report.to_json())["edge_density_weight_blind"] is True
        assert "(weight-blind)" in report.to_text()

    def test_vector_report_uses_degree_density(self):
        b = vec(1, 1, 2, 2, 4)
        report = build_report(b, ReferencePolicy.CUSTOM, 20)
        assert report.edge_density == Fraction(1, 2)
        assert not report.weight_blind_density

    def test_zero_total_report(self):
        report = build_report(vec(0, 0, 0), ReferencePolicy.CUSTOM, 9)
        assert report.gini is None
        assert report.sparsity == 1
        assert json.loads(report.to_json())["gini"] is None
        assert "gini: undefined" in report.to_text()

    def test_text_rounding(self):
        report = build_report(vec(1, 2, 2, 3, 4), ReferencePolicy.CUSTOM, 20)
        text = report.to_text(precision=4)
        assert "gini: 0.2333" in text
        assert "sparsity_index: 0.5400" in text

    def test_identity_holds_in_report(self):
        rng = random.Random(28)
        for _ in range(50):
            n = rng.randint(2, 20)
            values = random_masses(rng, n)
            if sum(values) == 0:
                continue
            b = degree_vector_from_sequence(values)
            report = build_report(b, ReferencePolicy.CUSTOM, b.total_mass + rng.randint(0, 9))
            share = Fraction(report.total_mass) / report.reference.resolved_value
            assert report.sparsity == (1 - share) + share * report.gini
            assert report.sparsity >= report.gini
