import pytest

from vtchroma.algorithms.cliques import maximum_cliques
from vtchroma.algorithms.generators import blow_up, cartesian_product, complete, cycle
from vtchroma.algorithms.reductions import (
    borodin_kostochka_reduction,
    clique_padding_reduction,
    main_conjecture_bound,
    main_conjecture_reduction,
    strip_clique_edges,
)
from vtchroma.core.exceptions import NotCliquePartitionError, PreconditionError, StrongColoringInfeasibleError
from vtchroma.models.cliques import CliqueCollection


@pytest.fixture
def k4_prism():
    """K_4 x K_2: Delta = 4, omega = 4, two disjoint maximum cliques."""
    return cartesian_product(complete(4), complete(2))


class TestCliquePadding:
    def test_strip(self, k4_prism):
        stripped = strip_clique_edges(k4_prism, maximum_cliques(k4_prism))
        assert stripped.edge_count == 4
        assert stripped.max_degree == 1

    def test_main_conjecture_reduction(self, k4_prism):
        assert main_conjecture_bound(4, 4) == 4
        coloring = main_conjecture_reduction(k4_prism)
        assert coloring.is_proper(k4_prism)
        assert coloring.num_colors == 4
        assert all(coloring.is_rainbow(c) for c in maximum_cliques(k4_prism))

    def test_larger_r(self, k4_prism):
        coloring = clique_padding_reduction(k4_prism, maximum_cliques(k4_prism), 6)
        assert coloring.is_proper(k4_prism)
        assert coloring.num_colors <= 6

    def test_overlapping_cliques(self):
        g = blow_up(cycle(5), 2)
        with pytest.raises(NotCliquePartitionError):
            main_conjecture_reduction(g)

    def test_not_a_clique(self):
        g = cycle(4)
        cliques = CliqueCollection(g, (0b0101, 0b1010))
        with pytest.raises(NotCliquePartitionError):
            clique_padding_reduction(g, cliques, 2)

    def test_r_below_clique_size(self, k4_prism):
        with pytest.raises(PreconditionError):
            clique_padding_reduction(k4_prism, maximum_cliques(k4_prism), 3)

    def test_infeasible(self):
        # chi(C_5) = 3, so no 2-coloring exists at all
        g = cycle(5)
        cliques = CliqueCollection(g, (0b00011, 0b01100, 0b10000))
        with pytest.raises(StrongColoringInfeasibleError):
            clique_padding_reduction(g, cliques, 2)

    def test_borodin_kostochka_needs_room(self, k4_prism):
        with pytest.raises(PreconditionError):
            borodin_kostochka_reduction(k4_prism)
