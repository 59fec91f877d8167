import random

import networkx as nx
import pytest

from tests.conftest import to_nx
from vtchroma.algorithms.coloring import (
    _DsaturSearch,
    ceil_div,
    chromatic_number,
    find_k_coloring,
    greedy_dsatur,
    independence_number,
    maximum_independent_set,
)
from vtchroma.algorithms.generators import (
    blow_up,
    catlin,
    circulant,
    complement,
    complete,
    cycle,
    empty,
    hajos_graph,
    kneser,
    random_graph,
)
from vtchroma.core.exceptions import BudgetExceededError, PreconditionError
from vtchroma.models.coloring import Coloring


def brute_force_chi(g) -> int:
    h = to_nx(g)
    for k in range(1, g.n + 1):
        for assignment in _assignments(g.n, k):
            if all(assignment[u] != assignment[v] for u, v in h.edges()):
                return k
    return 0


def _assignments(n: int, k: int):
    """Colorings up to renaming: vertex i uses a color at most one above the max so far."""

    def extend(prefix, top):
        if len(prefix) == n:
            yield prefix
            return
        for c in range(min(top + 2, k)):
            yield from extend(prefix + [c], max(top, c))

    yield from extend([], -1)


class TestIndependence:
    def test_petersen(self, petersen):
        s = maximum_independent_set(petersen)
        assert petersen.is_independent(s)
        assert independence_number(petersen) == 4

    def test_agrees_with_networkx(self):
        rng = random.Random(23)
        for _ in range(30):
            g = random_graph(rng.randint(1, 12), 0.4, rng)
            expected = max(len(c) for c in nx.find_cliques(to_nx(complement(g))))
            assert independence_number(g) == expected

    def test_ceil_div(self):
        assert ceil_div(10, 4) == 3
        assert ceil_div(8, 4) == 2
        assert ceil_div(23, 6) == 4


class TestChromatic:
    @pytest.mark.parametrize(
        "g,chi",
        [
            (complete(1), 1),
            (empty(4), 1),
            (cycle(5), 3),
            (cycle(6), 2),
            (complete(6), 6),
            (kneser(5, 2), 3),
            (kneser(7, 3), 3),
            (hajos_graph(11), 14),
            (blow_up(cycle(5), 2), 5),
            (circulant(13, [1, 5]), 4),
        ],
    )
    def test_known_values(self, g, chi):
        result = chromatic_number(g)
        assert result.chi == chi
        assert result.coloring.is_proper(g)
        assert result.coloring.num_colors == chi
        assert result.lower_bound <= chi

    @pytest.mark.parametrize("t,k", [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3), (4, 3)])
    def test_catlin_formula(self, t, k):
        assert chromatic_number(catlin(t, k)).chi == 2 * k + ceil_div(k, t)

    def test_agrees_with_brute_force(self):
        rng = random.Random(29)
        for _ in range(30):
            g = random_graph(rng.randint(1, 8), 0.5, rng)
            assert chromatic_number(g).chi == brute_force_chi(g)

    def test_unseeded_search_is_optimal(self):
        rng = random.Random(37)
        for _ in range(40):
            g = random_graph(rng.randint(1, 10), rng.choice([0.3, 0.5, 0.7]), rng)
            colors = _DsaturSearch(g, 0, g.n + 1, 0, 10**7).run()
            coloring = Coloring(tuple(colors))
            assert coloring.is_proper(g)
            assert coloring.num_colors == brute_force_chi(g)

    def test_lower_bound_source(self):
        result = chromatic_number(blow_up(cycle(5), 2))
        assert (result.lower_bound, result.lower_bound_source) == (5, "independence")
        assert chromatic_number(complete(4)).lower_bound_source == "clique"

    def test_empty_graph(self):
        with pytest.raises(PreconditionError):
            chromatic_number(empty(0))

    def test_budget(self):
        g = kneser(7, 2)
        with pytest.raises(BudgetExceededError):
            chromatic_number(g, node_limit=3)


class TestDecision:
    def test_find_k_coloring(self, petersen):
        assert find_k_coloring(petersen, 2) is None
        coloring = find_k_coloring(petersen, 3)
        assert coloring is not None and coloring.is_proper(petersen)
        assert coloring.num_colors <= 3

    def test_seed_is_precolored(self):
        g = cycle(5)
        coloring = find_k_coloring(g, 3, seed=0b11)
        assert coloring.colors[:2] == (0, 1)

    def test_greedy_is_proper(self):
        rng = random.Random(31)
        for _ in range(20):
            g = random_graph(rng.randint(1, 15), 0.5, rng)
            assert Coloring(tuple(greedy_dsatur(g))).is_proper(g)
