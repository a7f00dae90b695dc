"""Recover a graph polynomial from its deck polynomials.

For a polynomial ``p`` of degree n the deck identity reads
``(m - n) p + x p' = r`` with ``r`` the deck sum, i.e. coefficient-wise
``(m - n + k) * c_k = r_k``.  Every index except ``k0 = n - m`` is solved by
division; ``k0`` is handled explicitly and reported.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .arith import Poly
from .errors import DegreeMismatch, MalformedDeck, MissingPairDeck
from .graph import Graph, delete_edge, delete_vertex_pair
from .identities import IdentityReport
from .polys import Kind, sigma


class Status(enum.Enum):
    UNIQUE = "unique"
    UNDERDETERMINED = "underdetermined"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class DeckBundle:
    kind: Kind
    n: int
    m: int
    edge_polys: tuple[Poly, ...]
    pair_polys: Optional[tuple[Poly, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        object.__setattr__(self, "edge_polys", tuple(self.edge_polys))
        if self.pair_polys is not None:
            object.__setattr__(self, "pair_polys", tuple(self.pair_polys))

    @classmethod
    def from_graph(cls, g: Graph, kind) -> DeckBundle:
        kind = Kind.parse(kind)
        edge = tuple(sigma(kind, delete_edge(g, e)) for e in g.edges)
        pair = None
        if kind.uses_pair_deck:
            pair = tuple(sigma(kind, delete_vertex_pair(g, e)) for e in g.edges)
        return cls(kind, g.n, g.m, edge, pair)

    def validate(self) -> None:
        if self.n < 0 or self.m < 0:
            raise MalformedDeck("n and m must be non-negative")
        if len(self.edge_polys) != self.m:
            raise MalformedDeck(f"expected {self.m} edge polynomials, got {len(self.edge_polys)}")
        if self.kind.uses_pair_deck:
            if self.pair_polys is None:
                raise MissingPairDeck(f"{self.kind.value} needs the vertex-pair deck")
            if len(self.pair_polys) != self.m:
                raise MalformedDeck(f"expected {self.m} pair polynomials, got {len(self.pair_polys)}")
        elif self.pair_polys is not None:
            raise MalformedDeck(f"{self.kind.value} takes no vertex-pair deck")
        for p in self.edge_polys:
            if p.degree != self.n:
                raise DegreeMismatch(f"edge polynomial of degree {p.degree}, expected {self.n}")
        for p in self.pair_polys or ():
            if p.degree != self.n - 2:
                raise DegreeMismatch(f"pair polynomial of degree {p.degree}, expected {self.n - 2}")

    def to_json_obj(self) -> dict:
        obj = {"kind": self.kind.value, "n": self.n, "m": self.m,
               "edge_polys": [p.to_strings() for p in self.edge_polys]}
        if self.pair_polys is not None:
            obj["pair_polys"] = [p.to_strings() for p in self.pair_polys]
        return obj

    @classmethod
    def from_json_obj(cls, obj) -> DeckBundle:
        if not isinstance(obj, dict):
            raise MalformedDeck("deck file must hold a JSON object")
        try:
            kind = Kind.parse(obj["kind"])
            n, m = obj["n"], obj["m"]
            if not (isinstance(n, int) and isinstance(m, int)) or isinstance(n, bool):
                raise MalformedDeck("n and m must be integers")
            edge = _poly_list(obj["edge_polys"])
            pair = obj.get("pair_polys")
            if pair is not None:
                pair = _poly_list(pair)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, MalformedDeck):
                raise
            raise MalformedDeck(f"bad deck file: {exc}") from exc
        return cls(kind, n, m, edge, pair)

    @classmethod
    def loads(cls, text: str) -> DeckBundle:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedDeck(f"deck file is not JSON: {exc}") from exc
        return cls.from_json_obj(obj)


def _poly_list(items) -> tuple[Poly, ...]:
    if not isinstance(items, list) or not all(isinstance(p, list) for p in items):
        raise MalformedDeck("polynomial lists must be lists of coefficient lists")
    return tuple(Poly.from_strings(p) for p in items)


@dataclass(frozen=True)
class ReconstructionReport:
    """Outcome of :func:`solve`.

    ``residuals`` maps a coefficient index to a value that is zero for a
    genuine deck: ``r_k0`` at the degenerate index, ``c_n - 1`` at the
    leading index, and ``c_{n-1}`` for sigma1/sigma4 (whenever those indices
    are not themselves degenerate).
    """

    status: Status
    poly: Poly
    free_indices: frozenset = field(default_factory=frozenset)
    residuals: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {"status": self.status.value,
                "coefficients": self.poly.to_strings(),
                "free_indices": sorted(self.free_indices),
                "residuals": {str(k): str(v) for k, v in sorted(self.residuals.items())}}


def rhs_poly(bundle: DeckBundle) -> Poly:
    total = sum(bundle.edge_polys, Poly())
    if bundle.kind.uses_pair_deck:
        if bundle.pair_polys is None:
            raise MissingPairDeck(f"{bundle.kind.value} needs the vertex-pair deck")
        total = total + bundle.kind.pair_sign * sum(bundle.pair_polys, Poly())
    return total


def solve(bundle: DeckBundle) -> ReconstructionReport:
    bundle.validate()
    n, m, kind = bundle.n, bundle.m, bundle.kind
    r = rhs_poly(bundle)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        a = m - n + k
        if a:
            coeffs[k] = Fraction(r.coeff(k), a)

    residuals: dict[int, Fraction] = {}
    free: set[int] = set()
    k0 = n - m
    if 0 <= k0 <= n:
        residuals[k0] = r.coeff(k0)
        if kind is Kind.SIGMA2 and k0 == 0 and n >= 1:
            # det(A - D) = 0 for every nonempty graph
            coeffs[0] = Fraction(0)
        elif k0 == n:
            coeffs[n] = Fraction(1)
        else:
            free.add(k0)
    if k0 != n:
        residuals[n] = coeffs[n] - 1
    if kind.uses_pair_deck and n >= 1 and k0 != n - 1:
        residuals[n - 1] = coeffs[n - 1]

    if any(residuals.values()):
        status = Status.INCONSISTENT
    elif free:
        status = Status.UNDERDETERMINED
    else:
        status = Status.UNIQUE
    return ReconstructionReport(status, Poly(coeffs), frozenset(free), residuals)


def roundtrip_check(g: Graph, kind) -> IdentityReport:
    """Rebuild ``sigma(kind, g)`` from its own deck and compare.

    Free coefficients are zeroed on both sides; residuals are compared
    against zero alongside the polynomial.
    """
    kind = Kind.parse(kind)
    report = solve(DeckBundle.from_graph(g, kind))
    direct = sigma(kind, g)
    masked = Poly(0 if k in report.free_indices else c for k, c in enumerate(direct.coeffs))
    res = tuple(sorted(report.residuals.items()))
    return IdentityReport((report.poly, res), (masked, tuple((k, Fraction(0)) for k, _ in res)),
                          {"kind": kind.value, "status": report.status.value,
                           "free_indices": sorted(report.free_indices)})
