"""The four named graph polynomials and their (beta, gamma) generalisations.

    sigma1 = det(xI - A)      sigma3 = det(xI - D - A)
    sigma2 = det(xI - D + A)  sigma4 = per(xI - A)

    tau_det(beta, gamma) = det(xI - beta*D - gamma*A)
    tau_per(beta, gamma) = per(xI - beta*D - gamma*A)
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .arith import Poly
from .errors import ZeroGamma
from .graph import (Edge, Graph, WeightedGraph, _norm_edge, adjacency_matrix, degree_matrix,
                    weighted_adjacency_matrix)
from .linalg import RatMatrix, charpoly, minor, permpoly


class Kind(enum.Enum):
    SIGMA1 = "sigma1"
    SIGMA2 = "sigma2"
    SIGMA3 = "sigma3"
    SIGMA4 = "sigma4"

    @classmethod
    def parse(cls, value) -> Kind:
        if isinstance(value, Kind):
            return value
        if isinstance(value, int):
            return list(cls)[value - 1]
        return cls(str(value).lower())

    @property
    def index(self) -> int:
        return list(Kind).index(self) + 1

    @property
    def uses_pair_deck(self) -> bool:
        return self in (Kind.SIGMA1, Kind.SIGMA4)

    @property
    def pair_sign(self) -> int:
        """Sign of the vertex-pair deck sum in the deck identity."""
        return {Kind.SIGMA1: 1, Kind.SIGMA4: -1}.get(self, 0)

    @property
    def permanental(self) -> bool:
        return self is Kind.SIGMA4

    @property
    def parameters(self) -> tuple[int, int]:
        """(beta, gamma) at which the generalised polynomial reduces to this kind."""
        return {Kind.SIGMA1: (0, 1), Kind.SIGMA2: (1, -1),
                Kind.SIGMA3: (1, 1), Kind.SIGMA4: (0, 1)}[self]


def generalized_matrix(g: Graph, beta, gamma) -> RatMatrix:
    """``beta*D + gamma*A`` of ``g``."""
    beta, gamma = Fraction(beta), Fraction(gamma)
    deg = g.degrees
    return RatMatrix([[beta * deg[i] if i == j else gamma * (g.adj[i] >> j & 1)
                       for j in range(g.n)] for i in range(g.n)])


def generalized_weighted_matrix(wg: WeightedGraph, beta, gamma, weighted_degrees=False) -> RatMatrix:
    """``beta*D + gamma*A_w``.

    By default ``D`` holds the ordinary vertex degrees of the underlying
    graph; that is the reading under which the weighted deck identity holds
    with per-edge factor ``gamma**2 * w**2 -/+ beta**2``.  Passing
    ``weighted_degrees=True`` uses sums of incident edge weights instead.
    """
    beta, gamma = Fraction(beta), Fraction(gamma)
    g = wg.graph
    if weighted_degrees:
        deg = [Fraction(0)] * g.n
        for (s, t), w in wg.items():
            deg[s] += w
            deg[t] += w
    else:
        deg = g.degrees
    aw = weighted_adjacency_matrix(wg)
    return RatMatrix([[beta * deg[i] if i == j else gamma * aw[i, j]
                       for j in range(g.n)] for i in range(g.n)])


def _kernel(permanent: bool):
    return permpoly if permanent else charpoly


def sigma(kind, g: Graph) -> Poly:
    kind = Kind.parse(kind)
    a = adjacency_matrix(g)
    if kind is Kind.SIGMA1:
        return charpoly(a)
    if kind is Kind.SIGMA4:
        return permpoly(a)
    d = degree_matrix(g)
    return charpoly(d - a if kind is Kind.SIGMA2 else d + a)


def _check_gamma(gamma) -> None:
    if Fraction(gamma) == 0:
        raise ZeroGamma("gamma must be nonzero")


def tau(g: Graph, beta, gamma, permanent: bool = False) -> Poly:
    """det (or per, with ``permanent=True``) of ``xI - beta*D - gamma*A``."""
    _check_gamma(gamma)
    return _kernel(permanent)(generalized_matrix(g, beta, gamma))


def tau_weighted(wg: WeightedGraph, beta, gamma, permanent: bool = False,
                 weighted_degrees: bool = False) -> Poly:
    _check_gamma(gamma)
    return _kernel(permanent)(generalized_weighted_matrix(wg, beta, gamma, weighted_degrees))


def _pair_minor(M: RatMatrix, e: Edge, permanent: bool) -> Poly:
    s, t = e
    return _kernel(permanent)(minor(M, (s, t), (s, t)))


def minor_det_term(g: Graph, beta, gamma, e: Edge) -> Poly:
    """``det[(xI - beta*D - gamma*A)]`` with rows/columns s, t deleted.

    ``D`` is the degree matrix of ``g`` itself, not of ``g - s - t``.
    """
    e = _norm_edge(g, e)
    return _pair_minor(generalized_matrix(g, beta, gamma), e, False)


def minor_per_term(g: Graph, beta, gamma, e: Edge) -> Poly:
    e = _norm_edge(g, e)
    return _pair_minor(generalized_matrix(g, beta, gamma), e, True)


def vertex_minor_sum(M: RatMatrix, permanent: bool = False) -> Poly:
    """Sum over i of det (or per) of ``(xI - M)`` with row and column i removed."""
    kernel = _kernel(permanent)
    total = Poly()
    for i in range(M.n):
        total = total + kernel(minor(M, (i,), (i,)))
    return total
