from fractions import Fraction

import pytest

from vtchroma.algorithms.fractional import (
    FractionalCliqueLP,
    fractional_chromatic,
    fractional_chromatic_vt,
    maximal_independent_sets,
)
from vtchroma.algorithms.generators import (
    blow_up,
    catlin,
    circulant,
    complete,
    cycle,
    empty,
    hajos_graph,
    kneser,
    path,
)
from vtchroma.core.exceptions import CertificateError, NotVertexTransitiveError, PreconditionError


class TestLinearProgram:
    @pytest.mark.parametrize(
        "g,value",
        [
            (complete(1), Fraction(1)),
            (empty(3), Fraction(1)),
            (complete(4), Fraction(4)),
            (cycle(5), Fraction(5, 2)),
            (cycle(7), Fraction(7, 3)),
            (kneser(5, 2), Fraction(5, 2)),
            (path(4), Fraction(2)),
            (blow_up(cycle(5), 2), Fraction(5)),
            (hajos_graph(3), Fraction(11, 2)),
        ],
    )
    def test_values_and_certificates(self, g, value):
        chi_f, certificate = fractional_chromatic(g)
        assert chi_f == value
        assert certificate.verify(g)
        assert certificate.primal_value() == certificate.dual_value() == value

    def test_vertex_transitive_shortcut_agrees(self):
        for g in (cycle(9), circulant(10, [1, 3]), kneser(6, 2), catlin(2, 3)):
            assert fractional_chromatic_vt(g) == fractional_chromatic(g)[0]

    def test_shortcut_refuses_non_transitive(self):
        with pytest.raises(NotVertexTransitiveError):
            fractional_chromatic_vt(path(3))

    def test_empty_graph(self):
        with pytest.raises(PreconditionError):
            fractional_chromatic(empty(0))

    def test_uncovered_vertex_is_unbounded(self):
        with pytest.raises(CertificateError):
            FractionalCliqueLP(2, [0b01]).solve()

    def test_maximal_independent_sets(self, c5):
        sets = maximal_independent_sets(c5)
        assert len(sets) == 5
        assert all(c5.is_independent(s) for s in sets)
