import itertools
import random

import networkx as nx
import pytest

from tests.conftest import to_nx
from vtchroma.algorithms.cliques import (
    build_clique_graph,
    cek_classify,
    classify_graph,
    clique_number,
    hajnal_check,
    kostochka_common_vertex,
    max_clique,
    maximal_cliques,
    maximum_cliques,
    two_thirds_margin,
    vt_classify,
)
from vtchroma.algorithms.generators import (
    blow_up,
    catlin,
    complete,
    cycle,
    disjoint_union,
    empty,
    kneser,
    random_graph,
)
from vtchroma.core.exceptions import (
    BudgetExceededError,
    NotMaximumCliqueError,
    NotVertexTransitiveError,
    PreconditionError,
)
from vtchroma.enums import ClusterKind
from vtchroma.models import vertex_set as vs
from vtchroma.models.cliques import CliqueCollection


def nx_cliques(g) -> set[int]:
    return {vs.from_vertices(c) for c in nx.find_cliques(to_nx(g))}


class TestEnumeration:
    def test_small_cases(self, c5, petersen):
        assert maximal_cliques(complete(4)).cliques == (0b1111,)
        assert len(maximal_cliques(c5)) == 5
        assert set(maximal_cliques(petersen).cliques) == {1 << u | 1 << v for u, v in petersen.edges()}

    def test_agrees_with_networkx(self):
        rng = random.Random(5)
        for _ in range(60):
            g = random_graph(rng.randint(1, 12), rng.choice((0.3, 0.6, 0.85)), rng)
            assert set(maximal_cliques(g).cliques) == nx_cliques(g)

    def test_brute_force_small(self):
        rng = random.Random(9)
        for _ in range(20):
            g = random_graph(rng.randint(1, 9), 0.5, rng)
            cliques = [m for m in range(1, 1 << g.n) if g.is_clique(m)]
            maximal = {c for c in cliques if not any(c != d and c & d == c for d in cliques)}
            assert set(maximal_cliques(g).cliques) == maximal

    def test_null_graph_has_no_cliques(self):
        assert len(maximal_cliques(empty(0))) == 0
        assert maximal_cliques(empty(1)).cliques == (0b1,)

    def test_limit(self, petersen):
        with pytest.raises(BudgetExceededError):
            maximal_cliques(petersen, limit=3)


class TestMaximum:
    def test_clique_numbers(self, prism):
        assert clique_number(catlin(2, 2)) == 4
        assert clique_number(kneser(5, 2)) == 2
        assert clique_number(prism) == 3
        q = maximum_cliques(prism)
        assert len(q) == 2 and q.pairwise_disjoint() and q.is_all_maximum

    def test_agrees_with_networkx(self):
        rng = random.Random(13)
        for _ in range(40):
            g = random_graph(rng.randint(1, 14), 0.6, rng)
            expected = max(len(c) for c in nx.find_cliques(to_nx(g)))
            assert g.is_clique(max_clique(g))
            assert clique_number(g) == expected
            assert set(maximum_cliques(g).cliques) == {c for c in nx_cliques(g) if c.bit_count() == expected}

    def test_empty_graph(self):
        with pytest.raises(PreconditionError):
            maximum_cliques(empty(0))


class TestCliqueGraph:
    def test_blow_up_gives_a_cycle(self):
        x = build_clique_graph(maximum_cliques(blow_up(cycle(5), 2)))
        assert x.order == 5
        assert all(row.bit_count() == 2 for row in x.adj)
        assert len(x.components) == 1

    def test_single_clique(self):
        x = build_clique_graph(maximum_cliques(complete(3)))
        assert x.order == 1 and x.is_edgeless()

    def test_empty_collection(self):
        with pytest.raises(PreconditionError):
            build_clique_graph(CliqueCollection(complete(3), ()))


class TestHajnal:
    def test_examples(self, prism):
        q = maximum_cliques(prism)
        single = hajnal_check(prism, q.subset([0]))
        assert (single.union_size, single.intersection_size, single.holds) == (3, 3, True)
        both = hajnal_check(prism, q)
        assert (both.union_size, both.intersection_size, both.holds) == (6, 0, True)

        g = blow_up(cycle(5), 2)
        result = hajnal_check(g, maximum_cliques(g))
        assert (result.union_size, result.intersection_size, result.holds) == (10, 0, True)

    def test_rejects_non_maximum(self, prism):
        with pytest.raises(NotMaximumCliqueError):
            hajnal_check(prism, CliqueCollection(prism, (0b11,)))

    def test_every_subset_on_random_graphs(self):
        rng = random.Random(17)
        for _ in range(40):
            g = random_graph(rng.randint(1, 12), 0.6, rng)
            q = maximum_cliques(g)
            for size in range(1, min(len(q), 6) + 1):
                for subset in itertools.combinations(range(len(q)), size):
                    assert hajnal_check(g, q.subset(subset)).holds


class TestKostochka:
    def test_single_clique_component(self, prism):
        q = maximum_cliques(prism)
        assert kostochka_common_vertex(prism, q.subset([0])) == q.cliques[0]

    def test_two_cliques_sharing_three(self, two_cliques_sharing_three):
        g = two_cliques_sharing_three
        assert two_thirds_margin(clique_number(g), g.max_degree) > 0
        common = kostochka_common_vertex(g, maximum_cliques(g))
        assert vs.to_list(common) == [1, 2, 3]

    def test_precondition(self):
        g = blow_up(cycle(5), 2)
        with pytest.raises(PreconditionError):
            kostochka_common_vertex(g, maximum_cliques(g))

    def test_random_graphs(self):
        rng = random.Random(19)
        tested = 0
        for _ in range(300):
            g = random_graph(rng.randint(2, 12), 0.8, rng)
            omega = clique_number(g)
            if two_thirds_margin(omega, g.max_degree) <= 0:
                continue
            for component in build_clique_graph(maximum_cliques(g)).component_collections():
                assert kostochka_common_vertex(g, component, omega)
                tested += 1
        assert tested


class TestClassification:
    def test_cek_star(self, prism, two_cliques_sharing_three):
        q = maximum_cliques(prism)
        assert cek_classify(prism, q.subset([0])).kind is ClusterKind.STAR_COMPONENTS
        g = two_cliques_sharing_three
        assert cek_classify(g, maximum_cliques(g)).kind is ClusterKind.STAR_COMPONENTS

    def test_cek_cycle(self):
        g = blow_up(cycle(5), 2)
        shape = cek_classify(g, maximum_cliques(g))
        assert shape.kind is ClusterKind.CYCLE_BLOWUP
        assert (shape.cycle_length, shape.part_size) == (5, 2)

    def test_vt_edgeless(self, prism):
        shape = vt_classify(prism)
        assert shape.kind is ClusterKind.EDGELESS
        assert len(shape.parts) == 2

    @pytest.mark.parametrize("m,size", [(5, 2), (7, 3), (9, 2)])
    def test_vt_cycle_blowup(self, m, size):
        g = blow_up(cycle(m), size)
        shape = vt_classify(g)
        assert shape.kind is ClusterKind.CYCLE_BLOWUP
        assert (shape.cycle_length, shape.part_size) == (m, size)
        assert shape.isomorphism.is_isomorphism(g, blow_up(cycle(m), size))

    def test_vt_requires_transitivity(self, h11):
        with pytest.raises(NotVertexTransitiveError):
            vt_classify(h11)

    def test_classify_graph(self, petersen, prism, h11):
        assert classify_graph(h11, False).kind is ClusterKind.NOT_APPLICABLE
        assert classify_graph(petersen, True).kind is ClusterKind.NOT_APPLICABLE
        assert classify_graph(prism, True).kind is ClusterKind.EDGELESS
        doubled = disjoint_union(catlin(2, 2), catlin(2, 2))
        assert classify_graph(doubled, True).label == "cycle_blowup(5,2)"
