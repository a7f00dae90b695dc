"""Executable checks for the determinant/permanent and deck identities.

Each verifier returns an :class:`IdentityReport` carrying both sides, so a
failure can be diagnosed from the report alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .arith import Poly
from .errors import NotSymmetric
from .graph import Graph, WeightedGraph, delete_edge, delete_vertex_pair, delete_weighted_edge
from .linalg import RatMatrix, det, mask, minor, perm
from .polys import (Kind, _check_gamma, _pair_minor, generalized_matrix,
                    generalized_weighted_matrix, sigma, tau, tau_weighted, vertex_minor_sum)


@dataclass(frozen=True)
class IdentityReport:
    lhs: Any
    rhs: Any
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"holds": self.holds, "lhs": _ser(self.lhs), "rhs": _ser(self.rhs),
                "meta": {k: _ser(v) for k, v in self.meta.items()}}


def _ser(v):
    if isinstance(v, Poly):
        return v.to_strings()
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (tuple, list)):
        return [_ser(x) for x in v]
    return v


def _require_symmetric(X: RatMatrix) -> None:
    if not X.is_symmetric():
        raise NotSymmetric("identity requires a symmetric matrix")


def _sign(i: int, j: int) -> int:
    # (-1)**(i+j) has the same parity for 0- and 1-based indices
    return -1 if (i + j) & 1 else 1


def mask_lemma(X: RatMatrix, i: int, j: int, permanent: bool = False) -> IdentityReport:
    """Expansion of det/per of ``mask(X, i, j)`` in terms of X and its minors."""
    _require_symmetric(X)
    f = perm if permanent else det
    lhs = f(mask(X, i, j))
    if i == j:
        rhs = f(X) - X[i, i] * f(minor(X, (i,), (i,)))
    else:
        x = X[i, j]
        pair = f(minor(X, (i, j), (i, j)))
        if permanent:
            rhs = (f(X) - x * f(minor(X, (i,), (j,))) - X[j, i] * f(minor(X, (j,), (i,)))
                   + x * x * pair)
        else:
            sg = _sign(i, j)
            rhs = (f(X) - sg * x * f(minor(X, (i,), (j,))) - sg * X[j, i] * f(minor(X, (j,), (i,)))
                   - x * x * pair)
    return IdentityReport(lhs, rhs, {"i": i, "j": j, "permanent": permanent})


def _full_identity(X: RatMatrix, permanent: bool) -> IdentityReport:
    _require_symmetric(X)
    f = perm if permanent else det
    n = X.n
    lhs = Fraction(n * n - n, 2) * f(X)
    masked = sum((f(mask(X, i, j)) for i in range(n) for j in range(i, n)), Fraction(0))
    pairs = sum((X[i, j] ** 2 * f(minor(X, (i, j), (i, j)))
                 for i in range(n) for j in range(i + 1, n)), Fraction(0))
    rhs = masked - pairs if permanent else masked + pairs
    return IdentityReport(lhs, rhs, {"n": n})


def verify_det_identity(X: RatMatrix) -> IdentityReport:
    """Half (n^2 - n) det X against the masked-determinant expansion."""
    return _full_identity(X, False)


def verify_perm_identity(X: RatMatrix) -> IdentityReport:
    return _full_identity(X, True)


def _sparse_identity(X: RatMatrix, permanent: bool) -> IdentityReport:
    _require_symmetric(X)
    f = perm if permanent else det
    n = X.n
    offdiag = sum(1 for i in range(n) for j in range(i + 1, n) if X[i, j])
    c = sum(1 for i in range(n) if not X[i, i])
    k = n * (n - 1) // 2 - offdiag
    fx = f(X)
    lhs = (offdiag - c) * fx
    masked = sum((f(mask(X, i, j)) for i in range(n) for j in range(i, n) if X[i, j]),
                 Fraction(0))
    pairs = sum((X[i, j] ** 2 * f(minor(X, (i, j), (i, j)))
                 for i in range(n) for j in range(i + 1, n) if X[i, j]), Fraction(0))
    rhs = masked - pairs if permanent else masked + pairs
    return IdentityReport(lhs, rhs, {"n": n, "m": offdiag, "c": c, "k": k, "value": fx})


def verify_det_identity_sparse(X: RatMatrix) -> IdentityReport:
    """Variant summing only over nonzero entries.

    ``meta`` records m (nonzero off-diagonal pairs), c (zero diagonal
    entries) and k (zero off-diagonal pairs).
    """
    return _sparse_identity(X, False)


def verify_perm_identity_sparse(X: RatMatrix) -> IdentityReport:
    return _sparse_identity(X, True)


def verify_tau_identity(g: Graph, beta, gamma, permanent: bool = False) -> IdentityReport:
    """(m-n) tau + x tau' against the edge deck plus the pair-minor correction."""
    _check_gamma(gamma)
    beta, gamma = Fraction(beta), Fraction(gamma)
    t = tau(g, beta, gamma, permanent)
    lhs = (g.m - g.n) * t + Poly.x() * t.derivative()
    deck = sum((tau(delete_edge(g, e), beta, gamma, permanent) for e in g.edges), Poly())
    M = generalized_matrix(g, beta, gamma)
    minors = sum((_pair_minor(M, e, permanent) for e in g.edges), Poly())
    if permanent:
        rhs = deck - (gamma ** 2 + beta ** 2) * minors
    else:
        rhs = deck + (gamma ** 2 - beta ** 2) * minors
    return IdentityReport(lhs, rhs, {"beta": beta, "gamma": gamma, "permanent": permanent})


def verify_tau_identity_weighted(wg: WeightedGraph, beta, gamma, permanent: bool = False,
                                 weighted_degrees: bool = False) -> IdentityReport:
    """Weighted deck identity.

    With ordinary degrees in ``D`` the per-edge factor is
    ``gamma^2 w^2 - beta^2`` (det) or ``-(gamma^2 w^2 + beta^2)`` (per).  With
    weighted degrees the beta term scales with the weight as well, giving
    ``(gamma^2 -/+ beta^2) w^2``.
    """
    _check_gamma(gamma)
    beta, gamma = Fraction(beta), Fraction(gamma)
    g = wg.graph
    t = tau_weighted(wg, beta, gamma, permanent, weighted_degrees)
    lhs = (g.m - g.n) * t + Poly.x() * t.derivative()
    rhs = Poly()
    M = generalized_weighted_matrix(wg, beta, gamma, weighted_degrees)
    for e, w in wg.items():
        rhs = rhs + tau_weighted(delete_weighted_edge(wg, e), beta, gamma, permanent,
                                 weighted_degrees)
        b2 = beta ** 2 * w ** 2 if weighted_degrees else beta ** 2
        factor = -(gamma ** 2 * w ** 2 + b2) if permanent else gamma ** 2 * w ** 2 - b2
        rhs = rhs + factor * _pair_minor(M, e, permanent)
    return IdentityReport(lhs, rhs, {"beta": beta, "gamma": gamma, "permanent": permanent,
                                     "weighted_degrees": weighted_degrees})


def verify_sigma_identity(g: Graph, kind) -> IdentityReport:
    """(m-n) sigma + x sigma' against the edge (and, for sigma1/4, pair) deck sums."""
    kind = Kind.parse(kind)
    s = sigma(kind, g)
    lhs = (g.m - g.n) * s + Poly.x() * s.derivative()
    rhs = sum((sigma(kind, delete_edge(g, e)) for e in g.edges), Poly())
    if kind.uses_pair_deck:
        pairs = sum((sigma(kind, delete_vertex_pair(g, e)) for e in g.edges), Poly())
        rhs = rhs + kind.pair_sign * pairs
    return IdentityReport(lhs, rhs, {"kind": kind.value})


def verify_derivative_identity(g: Graph, beta, gamma, permanent: bool = False) -> IdentityReport:
    """Sum of principal (n-1)-minors of ``xI - beta D - gamma A`` equals tau'."""
    _check_gamma(gamma)
    M = generalized_matrix(g, beta, gamma)
    lhs = vertex_minor_sum(M, permanent)
    rhs = tau(g, beta, gamma, permanent).derivative()
    return IdentityReport(lhs, rhs, {"permanent": permanent})
