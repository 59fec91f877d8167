"""Exact fractional chromatic number.

The fractional clique LP

    maximize sum(y_v)  subject to  sum(y_v for v in I) <= 1  for every maximal independent set I,  y >= 0

is solved by a tableau simplex over Fractions with Bland's rule. The origin is
feasible, so there is no phase one. At the optimum the reduced cost of the
slack of row I is minus the weight x_I of the covering LP, so one solve yields
both certificates.
"""

from fractions import Fraction
from typing import Optional

from vtchroma.algorithms.cliques import maximal_cliques
from vtchroma.algorithms.coloring import independence_number
from vtchroma.algorithms.generators import complement
from vtchroma.algorithms.symmetry import is_vertex_transitive
from vtchroma.core.config import settings
from vtchroma.core.exceptions import (
    CertificateError,
    NotVertexTransitiveError,
    PreconditionError,
)
from vtchroma.core.logging import logger
from vtchroma.models import vertex_set as vs
from vtchroma.models.coloring import FractionalCertificate
from vtchroma.models.graph import Graph
from vtchroma.models.vertex_set import VertexSet

ZERO = Fraction(0)
ONE = Fraction(1)


def maximal_independent_sets(g: Graph, limit: Optional[int] = None) -> list[VertexSet]:
    return list(maximal_cliques(complement(g), limit))


class FractionalCliqueLP:
    """Dense tableau: rows are independent sets, columns are y_0..y_{n-1} then one slack per row."""

    def __init__(self, n: int, independent_sets: list[VertexSet]):
        self.n = n
        self.sets = independent_sets
        m = len(independent_sets)
        width = n + m
        self.rows: list[list[Fraction]] = []
        for i, mask in enumerate(independent_sets):
            row = [ZERO] * width
            for v in vs.members(mask):
                row[v] = ONE
            row[n + i] = ONE
            self.rows.append(row)
        self.rhs = [ONE] * m
        self.basis = [n + i for i in range(m)]
        self.cost = [ONE] * n + [ZERO] * m
        self.value = ZERO
        self.pivots = 0

    def _entering(self) -> Optional[int]:
        for j, c in enumerate(self.cost):
            if c > 0:
                return j
        return None

    def _leaving(self, q: int) -> int:
        best = None
        for i, row in enumerate(self.rows):
            a = row[q]
            if a <= 0:
                continue
            ratio = self.rhs[i] / a
            key = (ratio, self.basis[i])
            if best is None or key < best[0]:
                best = (key, i)
        # every y_v lies in some maximal independent set, so the LP is bounded
        if best is None:
            raise CertificateError(f"fractional clique LP unbounded in column {q}")
        return best[1]

    def _pivot(self, p: int, q: int) -> None:
        pivot_row = self.rows[p]
        scale = pivot_row[q]
        if scale != 1:
            self.rows[p] = pivot_row = [a / scale for a in pivot_row]
            self.rhs[p] /= scale
        for i, row in enumerate(self.rows):
            factor = row[q]
            if i == p or not factor:
                continue
            self.rows[i] = [a - factor * b for a, b in zip(row, pivot_row)]
            self.rhs[i] -= factor * self.rhs[p]
        factor = self.cost[q]
        self.value += factor * self.rhs[p]
        self.cost = [c - factor * b for c, b in zip(self.cost, pivot_row)]
        self.basis[p] = q
        self.pivots += 1

    def solve(self) -> FractionalCertificate:
        while (q := self._entering()) is not None:
            self._pivot(self._leaving(q), q)
        logger.debug(f"fractional LP optimal after {self.pivots} pivots: {self.value}")

        dual = [ZERO] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                dual[var] = self.rhs[i]
        weights = tuple(
            (mask, -self.cost[self.n + i])
            for i, mask in enumerate(self.sets)
            if self.cost[self.n + i] < 0
        )
        return FractionalCertificate(weights, tuple(dual), self.value)


def fractional_chromatic(
    g: Graph, limit: Optional[int] = None
) -> tuple[Fraction, FractionalCertificate]:
    """Exact chi_f(g) with a covering certificate and an equal fractional clique."""
    if g.n == 0:
        raise PreconditionError("fractional chromatic number of the empty graph")
    sets = maximal_independent_sets(g, limit or settings.CLIQUE_LIMIT)
    certificate = FractionalCliqueLP(g.n, sets).solve()
    if not certificate.verify(g):
        raise CertificateError(f"fractional certificate of value {certificate.value} failed verification")
    return certificate.value, certificate


def fractional_chromatic_vt(
    g: Graph, alpha: Optional[int] = None, verified_transitive: bool = False
) -> Fraction:
    """n / alpha, valid for vertex-transitive graphs only."""
    if g.n == 0:
        raise PreconditionError("fractional chromatic number of the empty graph")
    if not verified_transitive and not is_vertex_transitive(g):
        raise NotVertexTransitiveError()
    return Fraction(g.n, alpha or independence_number(g))
