"""Batch runs over graph6 corpora: identity sweeps and deck-collision probes.

Collision probes are exploratory.  A colliding group (same deck
polynomials, different full polynomial) is reported as data.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .arith import Poly
from .errors import GpolyError, MalformedGraph6
from .graph import Graph, WeightedGraph, parse_graph6, read_graph6_lines, to_graph6
from .identities import (IdentityReport, verify_derivative_identity, verify_det_identity,
                         verify_det_identity_sparse, verify_perm_identity,
                         verify_perm_identity_sparse, verify_sigma_identity,
                         verify_tau_identity, verify_tau_identity_weighted)
from .linalg import get_permanent_cap, set_permanent_cap
from .polys import Kind, generalized_matrix, sigma
from .reconstruct import DeckBundle, roundtrip_check

#: (beta, gamma) pairs used when a graph is turned into matrix instances.
PARAMS = ((0, 1), (1, -1), (1, 1), (Fraction(2, 3), Fraction(-5, 2)))
#: x values at which ``xI - beta D - gamma A`` is instantiated.
X_VALUES = (0, 2, Fraction(-1, 2))
#: cycled over the canonical edge order to weight a corpus graph.
WEIGHT_CYCLE = (Fraction(2), Fraction(-1, 3), Fraction(3, 2), Fraction(-1), Fraction(5))
WEIGHTED_PARAMS = ((1, 2), (Fraction(-1, 2), 1))


def graph_instances(g: Graph):
    """Symmetric matrices ``xI - (beta D + gamma A)`` derived from ``g``."""
    for beta, gamma in PARAMS:
        M = generalized_matrix(g, beta, gamma)
        for x in X_VALUES:
            yield M.shift(x)


def corpus_weights(g: Graph) -> WeightedGraph:
    return WeightedGraph(g, tuple(WEIGHT_CYCLE[k % len(WEIGHT_CYCLE)] for k in range(g.m)))


def _matrix_check(verifier):
    def run(g: Graph):
        return [verifier(X) for X in graph_instances(g)]
    return run


def _tau_check(g: Graph):
    return [verify_tau_identity(g, b, c, p) for b, c in PARAMS for p in (False, True)]


def _weighted_check(g: Graph):
    wg = corpus_weights(g)
    return [verify_tau_identity_weighted(wg, b, c, p) for b, c in WEIGHTED_PARAMS
            for p in (False, True)]


def _deriv_check(g: Graph):
    return [verify_derivative_identity(g, b, c, p) for b, c in PARAMS for p in (False, True)]


CHECKS: dict[str, tuple[str, Callable[[Graph], list[IdentityReport]]]] = {
    "2.1": ("symmetric determinant expansion", _matrix_check(verify_det_identity)),
    "2.2": ("symmetric permanent expansion", _matrix_check(verify_perm_identity)),
    "2.3": ("determinant expansion over nonzero entries", _matrix_check(verify_det_identity_sparse)),
    "2.4": ("permanent expansion over nonzero entries", _matrix_check(verify_perm_identity_sparse)),
    "3.1": ("generalised deck identity, det and per", _tau_check),
    "3.1w": ("edge-weighted generalised deck identity", _weighted_check),
    "3.3": ("sigma1/sigma4 edge-vertex deck identity",
            lambda g: [verify_sigma_identity(g, Kind.SIGMA1), verify_sigma_identity(g, Kind.SIGMA4)]),
    "3.4": ("sigma2/sigma3 edge deck identity",
            lambda g: [verify_sigma_identity(g, Kind.SIGMA2), verify_sigma_identity(g, Kind.SIGMA3)]),
    "deriv": ("principal-minor sum equals the derivative", _deriv_check),
    "recon": ("deck round trip for all four kinds",
              lambda g: [roundtrip_check(g, k) for k in Kind]),
}


class IdentityFailure(GpolyError):
    def __init__(self, graph6: str, check: str, report: IdentityReport, line: int | None = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"check {check} failed on {graph6}{where}")
        self.graph6 = graph6
        self.check = check
        self.report = report
        self.line = line


def iter_corpus(lines: Iterable[str], strict: bool = True,
                errors: list | None = None) -> Iterator[tuple[int, str, Graph]]:
    """Parse corpus lines; malformed records raise (strict) or are logged to ``errors``."""
    for lineno, record in read_graph6_lines(lines):
        try:
            g = parse_graph6(record)
        except MalformedGraph6 as exc:
            if strict:
                raise MalformedGraph6(f"line {lineno}: {exc}") from exc
            if errors is not None:
                errors.append({"line": lineno, "error": str(exc)})
            continue
        yield lineno, record, g


def _run_checks(payload):
    g, checks = payload
    out = []
    for cid in checks:
        failed = next((r for r in CHECKS[cid][1](g) if not r.holds), None)
        out.append((cid, failed))
    return out


def _pool_map(fn, items, workers: int):
    if workers <= 1:
        return map(fn, items)
    pool = ProcessPoolExecutor(max_workers=workers, initializer=set_permanent_cap,
                               initargs=(get_permanent_cap(),))
    return _closing_map(pool, fn, items)


def _closing_map(pool, fn, items):
    with pool:
        yield from pool.map(fn, items, chunksize=8)


def scan_verify(records: Iterable[tuple[int, str, Graph]], checks: Sequence[str] | None = None,
                workers: int = 1) -> dict:
    """Run identity checks over a corpus; the first failing graph aborts the scan.

    Returns per-check pass/fail counts, counted per graph.
    """
    checks = list(CHECKS) if checks is None else list(checks)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}")
    counts = {cid: {"pass": 0, "fail": 0} for cid in checks}
    records = list(records)
    results = _pool_map(_run_checks, [(g, checks) for _, _, g in records], workers)
    for (lineno, record, _), res in zip(records, results):
        for cid, failed in res:
            if failed is not None:
                counts[cid]["fail"] += 1
                raise IdentityFailure(record, cid, failed, lineno)
            counts[cid]["pass"] += 1
    return {"graphs": len(records), "checks": counts}


@dataclass
class CollisionGroup:
    deck_key: str
    members: list = field(default_factory=list)

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.deck_key.encode()).hexdigest()[:16]

    @property
    def separating(self) -> bool:
        return len({p for _, p in self.members}) <= 1

    def to_json_obj(self) -> dict:
        return {"deck_key": self.digest, "separating": self.separating,
                "members": [{"graph6": s, "poly": p.to_strings()} for s, p in self.members]}


def deck_key(bundle: DeckBundle) -> str:
    """Canonical text of the deck as a multiset, independent of edge order."""
    def canon(polys):
        return sorted(json.dumps(p.to_strings(), separators=(",", ":")) for p in polys)

    parts = {"kind": bundle.kind.value, "n": bundle.n, "m": bundle.m,
             "edge": canon(bundle.edge_polys)}
    if bundle.pair_polys is not None:
        parts["pair"] = canon(bundle.pair_polys)
    return json.dumps(parts, separators=(",", ":"))


FILTERS = {
    "all": lambda g: True,
    "m=n": lambda g: g.m == g.n,
    "m<n": lambda g: g.m < g.n,
    "m>n": lambda g: g.m > g.n,
}


def _deck_entry(payload):
    g, kind = payload
    return deck_key(DeckBundle.from_graph(g, kind)), sigma(kind, g)


def collision_probe(graphs: Iterable[Graph], kind, filter: str = "all",
                    workers: int = 1) -> list[CollisionGroup]:
    """Group graphs by deck polynomials; keep groups with at least two members."""
    kind = Kind.parse(kind)
    keep = FILTERS[filter]
    selected = [g for g in graphs if keep(g)]
    groups: dict[str, CollisionGroup] = {}
    entries = _pool_map(_deck_entry, [(g, kind) for g in selected], workers)
    for g, (key, poly) in zip(selected, entries):
        # grouped on the full canonical key, so equal digests never merge distinct decks
        groups.setdefault(key, CollisionGroup(key)).members.append((to_graph6(g), poly))
    return [groups[k] for k in sorted(groups) if len(groups[k].members) >= 2]


def collision_report(groups: list[CollisionGroup], kind, filter: str, n_graphs: int) -> dict:
    return {"kind": Kind.parse(kind).value, "filter": filter, "graphs": n_graphs,
            "groups": [grp.to_json_obj() for grp in groups],
            "colliding": sum(1 for grp in groups if not grp.separating)}
