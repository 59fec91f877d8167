import random

import networkx as nx
import pytest

from tests.conftest import to_nx
from vtchroma.algorithms.generators import catlin, complete, cycle, empty, hajos_graph, random_graph
from vtchroma.algorithms.graph6 import parse_graph6, read_graph6_lines, write_graph6
from vtchroma.core.exceptions import CapacityExceededError, Graph6ParseError


def nx_graph6(g) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode("ascii").strip()


class TestWrite:
    @pytest.mark.parametrize("g", [empty(0), empty(1), complete(4), cycle(5), catlin(2, 2), hajos_graph(11)])
    def test_agrees_with_networkx(self, g):
        assert write_graph6(g) == nx_graph6(g)

    def test_known_strings(self):
        assert write_graph6(empty(1)) == "@"
        assert write_graph6(complete(4)) == "C~"

    def test_random_graphs(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_graph(rng.randint(0, 40), 0.4, rng)
            assert write_graph6(g) == nx_graph6(g)
            assert parse_graph6(write_graph6(g)) == g


class TestParse:
    def test_networkx_decodes_the_same_graph(self, petersen):
        text = write_graph6(petersen)
        decoded = nx.from_graph6_bytes(text.encode("ascii"))
        assert {frozenset(e) for e in decoded.edges()} == {frozenset(e) for e in petersen.edges()}

    def test_header_is_stripped(self):
        assert parse_graph6(">>graph6<<C~") == complete(4)

    @pytest.mark.parametrize("text", ["", "D", "C~~", "C\x7f", "Dh"])
    def test_malformed(self, text):
        with pytest.raises(Graph6ParseError):
            parse_graph6(text)

    def test_nonzero_padding(self):
        # n=3 uses 3 of the 6 bits; the low bit is padding
        with pytest.raises(Graph6ParseError):
            parse_graph6("Bx")

    def test_capacity(self):
        text = nx.to_graph6_bytes(nx.empty_graph(70), header=False).decode("ascii").strip()
        with pytest.raises(CapacityExceededError):
            parse_graph6(text)
        assert parse_graph6(text, capacity=128).n == 70

    def test_lines_skip_comments_and_report_line_numbers(self):
        lines = ["# corpus", "", "C~", "D", "Bw"]
        reader = read_graph6_lines(lines)
        assert next(reader) == (3, complete(4))
        with pytest.raises(Graph6ParseError) as info:
            next(reader)
        assert info.value.line_number == 4
        assert info.value.exit_code == 2
