import random

import pytest

from anticlique import (
    ConfigurationError,
    SearchOptions,
    SearchTimeout,
    all_max_anticliques,
    bipartite_options,
    core,
    cover_order,
    independence_polynomial,
    make_graph,
    max_anticlique,
    max_weight_anticlique,
    oracle_matching,
    oracle_report,
    random_graph,
    threshold_search,
)
from anticlique.search import _weighted_bound, _weight_vector
from conftest import (
    complete_graph,
    cycle_graph,
    empty_graph,
    is_anticlique,
    path_graph,
    random_bipartite,
    random_row,
)


class TestThresholdSearch:
    def test_first_hit_is_the_maximum(self, g5):
        found, _stats = threshold_search(g5, 2, "first")
        assert found == {2, 3, 5}

    def test_nothing_above_alpha(self, g5):
        found, _stats = threshold_search(g5, 3, "first")
        assert found is None

    def test_all_mode_on_triangle(self):
        rows, _stats = threshold_search(complete_graph(3), 0, "all")
        positive = {X for r in rows for X in r.expand(1)}
        assert positive == {frozenset({1}), frozenset({2}), frozenset({3})}

    def test_all_mode_members_above_k(self, g5):
        rows, _stats = threshold_search(g5, 1, "all")
        above = {X for r in rows for X in r.expand(2)}
        assert above == {
            frozenset({1, 3}), frozenset({2, 3}), frozenset({2, 5}),
            frozenset({3, 5}), frozenset({2, 3, 5}),
        }

    def test_rejects_negative_threshold(self, g5):
        with pytest.raises(ConfigurationError):
            threshold_search(g5, -1)

    def test_rejects_unknown_mode(self, g5):
        with pytest.raises(ConfigurationError):
            threshold_search(g5, 1, "some")

    def test_prunes_are_counted(self, g5):
        _rows, stats = threshold_search(g5, 2, "all")
        assert stats.deleted > 0


class TestMaxAnticlique:
    def test_worked_example(self, g5):
        res = max_anticlique(g5)
        assert res.alpha == 3
        assert res.witness == {2, 3, 5}

    def test_complete_graphs(self):
        for n in (1, 2, 6):
            res = max_anticlique(complete_graph(n))
            assert res.alpha == 1
            assert len(res.witness) == 1

    def test_empty_graph(self):
        res = max_anticlique(empty_graph(6))
        assert res.alpha == 6
        assert res.witness == frozenset(range(1, 7))
        assert res.stats.rsp == 0

    def test_currentmax_monotone(self, g5):
        values = []

        def watch(kind, info):
            if kind == "improve":
                values.append(info["currentmax"])

        max_anticlique(g5, trace=watch)
        assert values == sorted(values)
        assert values[-1] == 3

    def test_positive_bound_requires_witness(self, g5):
        with pytest.raises(ConfigurationError, match="witness"):
            max_anticlique(g5, SearchOptions(initial_bound=2))

    def test_witness_must_be_anticlique(self, g5):
        with pytest.raises(ConfigurationError, match="anticlique"):
            max_anticlique(
                g5,
                SearchOptions(initial_bound=2, initial_witness=frozenset({1, 2})),
            )

    def test_timeout_raises(self):
        g = random_graph(40, 0.2, 7)
        with pytest.raises(SearchTimeout):
            max_anticlique(g, timeout_s=0.0)


class TestAllMaxAnticliques:
    def test_unique_maximum(self, g5):
        assert all_max_anticliques(g5) == (3, [frozenset({2, 3, 5})])

    def test_triangle(self):
        alpha, sets = all_max_anticliques(complete_graph(3))
        assert alpha == 1
        assert sets == [frozenset({1}), frozenset({2}), frozenset({3})]

    def test_four_cycle(self):
        alpha, sets = all_max_anticliques(cycle_graph(4))
        assert alpha == 2
        assert sets == [frozenset({1, 3}), frozenset({2, 4})]


class TestCore:
    def test_unique_maximum_is_its_own_core(self, g5):
        assert core(g5) == {2, 3, 5}

    def test_single_edge(self):
        assert core(make_graph(2, [(1, 2)])) == frozenset()

    def test_four_cycle(self):
        assert core(cycle_graph(4)) == frozenset()


class TestWeighted:
    def test_heavy_vertex_wins(self, g5):
        res = max_weight_anticlique(g5, {4: 10})
        assert res.alpha == 10
        assert res.witness == {4}

    def test_uniform_weights_reduce_to_cardinality(self):
        for seed in range(6):
            g = random_graph(9, 0.4, seed)
            plain = max_anticlique(g)
            weighted = max_weight_anticlique(g, {})
            assert weighted.alpha == plain.alpha

    def test_empty_graph_takes_everything(self):
        res = max_weight_anticlique(empty_graph(4), {1: 2, 2: 3, 3: 4, 4: 5})
        assert res.alpha == 14
        assert res.witness == frozenset({1, 2, 3, 4})

    def test_rejects_nonpositive_weight(self, g5):
        with pytest.raises(ConfigurationError):
            max_weight_anticlique(g5, {1: 0})

    def test_rejects_unknown_vertex(self, g5):
        with pytest.raises(ConfigurationError):
            max_weight_anticlique(g5, {9: 1})

    def test_weighted_bruteforce_agreement(self):
        rng = random.Random(17)
        for _ in range(10):
            v = rng.randint(2, 9)
            g = random_graph(v, 0.4, rng.randint(0, 10**6))
            weights = {y: rng.randint(1, 9) for y in range(1, v + 1)}
            best = 0
            for mask in range(1 << v):
                X = {p for p in range(1, v + 1) if (mask >> (p - 1)) & 1}
                if is_anticlique(g, X):
                    best = max(best, sum(weights[p] for p in X))
            res = max_weight_anticlique(g, weights)
            assert res.alpha == best
            assert is_anticlique(g, res.witness)
            assert sum(weights[p] for p in res.witness) == best

    def test_bound_dominates_every_member(self):
        rng = random.Random(23)
        g = random_graph(8, 0.5, 1)
        wt = _weight_vector(g, {y: rng.randint(1, 5) for y in range(1, 9)})
        for _ in range(100):
            row = random_row(rng, 8)
            bound = _weighted_bound(row, wt)
            for X in row.expand(0):
                assert bound >= sum(wt[p] for p in X)


class TestBipartite:
    def test_path_options(self):
        opts = bipartite_options(path_graph(3))
        assert opts.order.order == (2,)
        assert opts.initial_bound == 2
        assert opts.initial_witness == {1, 3}

    def test_complete_bipartite_options(self):
        g = make_graph(5, [(i, j) for i in (1, 2) for j in (3, 4, 5)])
        opts = bipartite_options(g)
        assert opts.order.order == (1, 2)
        assert opts.initial_bound == 3

    def test_triangle_rejected(self):
        with pytest.raises(ConfigurationError, match="bipartite"):
            bipartite_options(complete_graph(3))

    def test_alpha_equals_vertices_minus_matching(self):
        for seed in range(8):
            g = random_bipartite(4, 6, (seed % 3) * 0.4 + 0.1, seed)
            plain = max_anticlique(g)
            fast = max_anticlique(g, bipartite_options(g))
            assert plain.alpha == fast.alpha == g.v - oracle_matching(g)
            assert is_anticlique(g, fast.witness)

    def test_edgeless_graph(self):
        res = max_anticlique(empty_graph(5), bipartite_options(empty_graph(5)))
        assert res.alpha == 5
        assert res.witness == frozenset(range(1, 6))


class TestAgreementSweep:
    def test_methods_agree_with_each_other(self):
        rng = random.Random(2718)
        for _ in range(12):
            v = rng.randint(3, 13)
            g = random_graph(v, rng.choice((0.15, 0.4, 0.7)), rng.randint(0, 10**6))
            alpha = max_anticlique(g).alpha
            assert independence_polynomial(g).degree == alpha
            assert oracle_report(g).alpha == alpha
            found, _ = threshold_search(g, alpha - 1, "first")
            assert found is not None and len(found) == alpha
            none_found, _ = threshold_search(g, alpha, "first")
            assert none_found is None
            got_alpha, sets = all_max_anticliques(g)
            assert got_alpha == alpha
            assert sorted(map(sorted, sets)) == sorted(
                map(sorted, oracle_report(g).maximum_sets)
            )

    def test_cover_order_gives_same_alpha(self):
        for seed in range(6):
            g = random_bipartite(4, 5, 0.5, seed)
            opts = bipartite_options(g)
            assert max_anticlique(g, SearchOptions(order=opts.order)).alpha \
                == max_anticlique(g).alpha
