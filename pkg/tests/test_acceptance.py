"""Acceptance criteria, each run in full and timed against its stated bound.

One pass/fail line per criterion is printed in the terminal summary.
"""

import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from gpoly.graph import Graph, WeightedGraph, parse_graph6, to_graph6
from gpoly.identities import (mask_lemma, verify_derivative_identity, verify_det_identity,
                              verify_det_identity_sparse, verify_perm_identity,
                              verify_perm_identity_sparse, verify_sigma_identity,
                              verify_tau_identity, verify_tau_identity_weighted)
from gpoly.linalg import RatMatrix, charpoly, det, perm, permpoly
from gpoly.polys import Kind, sigma
from gpoly.reconstruct import DeckBundle, Status, solve
from gpoly.corpus import PARAMS, X_VALUES, graph_instances

from conftest import ACCEPTANCE_LINES, FIXTURES, all_graphs, fixture_records, load_graphs
from oracles import (leibniz_charpoly, leibniz_det, leibniz_perm, leibniz_permpoly, rand_graph,
                     rand_rat, rand_square, rand_sym)

pytestmark = pytest.mark.acceptance

# fixed generic parameters: beta nonzero, gamma not +-1, gamma^2 != beta^2
BETA, GAMMA = Fraction(2, 3), Fraction(-5, 2)


@contextmanager
def criterion(label, bound):
    info = {}
    t0 = time.perf_counter()
    ok = False
    try:
        yield info
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        in_time = elapsed < bound
        status = "PASS" if ok and in_time else "FAIL"
        detail = f"; {info['detail']}" if "detail" in info else ""
        ACCEPTANCE_LINES.append(f"[{status}] {label}: {elapsed:.1f} s (bound {bound} s){detail}")
        print(ACCEPTANCE_LINES[-1])
    assert in_time, f"{label} took {elapsed:.1f} s, bound {bound} s"


def rand_nonzero(rng):
    while True:
        v = rand_rat(rng)
        if v:
            return v


def test_c01_identity_suite():
    rng = random.Random(101)
    with criterion("C1 masked-expansion identities (det/per, full/sparse)", 60) as info:
        count = 0
        for _ in range(200):
            X = RatMatrix(rand_sym(rng, rng.randint(1, 5), zero_prob=rng.choice([0, 0.3, 0.6])))
            for verify in (verify_det_identity, verify_perm_identity, verify_det_identity_sparse,
                           verify_perm_identity_sparse):
                assert verify(X).holds
                count += 1
        for g in all_graphs(6):
            for X in graph_instances(g):
                for verify in (verify_det_identity, verify_perm_identity,
                               verify_det_identity_sparse, verify_perm_identity_sparse):
                    assert verify(X).holds, (to_graph6(g), X)
                    count += 1
        info["detail"] = f"{count} identity instances"
    assert len(PARAMS) * len(X_VALUES) >= 3


def test_c02_lemma_suite():
    rng = random.Random(202)
    with criterion("C2 mask lemmas (det/per, diagonal/off-diagonal)", 30) as info:
        count = 0
        for _ in range(200):
            X = RatMatrix(rand_sym(rng, rng.randint(1, 5), zero_prob=0.2))
            for i in range(X.n):
                for j in range(i, X.n):
                    for permanent in (False, True):
                        assert mask_lemma(X, i, j, permanent).holds
                        count += 1
        info["detail"] = f"{count} lemma instances"


def test_c03_differential_identities():
    rng = random.Random(303)
    with criterion("C3 deck differential identities", 600) as info:
        count = 0
        for g in all_graphs(7):
            for permanent in (False, True):
                assert verify_tau_identity(g, BETA, GAMMA, permanent).holds, to_graph6(g)
                count += 1
            for kind in Kind:
                assert verify_sigma_identity(g, kind).holds, (to_graph6(g), kind)
                count += 1
        for _ in range(100):
            g = rand_graph(rng, rng.randint(1, 6))
            wg = WeightedGraph(g, tuple(rand_nonzero(rng) for _ in g.edges))
            beta, gamma = rand_rat(rng), rand_nonzero(rng)
            for permanent in (False, True):
                assert verify_tau_identity_weighted(wg, beta, gamma, permanent).holds
                count += 1
        small = all_graphs(5)
        for _ in range(20):
            beta, gamma = rand_rat(rng), rand_nonzero(rng)
            for g in small:
                for permanent in (False, True):
                    assert verify_tau_identity(g, beta, gamma, permanent).holds
                    count += 1
        info["detail"] = f"{count} polynomial identities"


def test_c04_derivative_identities():
    with criterion("C4 derivative identities", 60) as info:
        count = 0
        for g in all_graphs(6):
            for beta, gamma in PARAMS:
                for permanent in (False, True):
                    assert verify_derivative_identity(g, beta, gamma, permanent).holds
                    count += 1
        info["detail"] = f"{count} instances"


def test_c05_roundtrip_dense():
    with criterion("C5 reconstruction round-trip, 5<=n<=7, m>n, sigma1 and sigma4", 600) as info:
        graphs = [g for g in all_graphs(7, min_n=5) if g.m > g.n]
        for g in graphs:
            for kind in (Kind.SIGMA1, Kind.SIGMA4):
                rep = solve(DeckBundle.from_graph(g, kind))
                assert rep.status is Status.UNIQUE, (to_graph6(g), kind)
                assert rep.poly == sigma(kind, g), (to_graph6(g), kind)
        info["detail"] = f"{len(graphs)} graphs, 0 mismatches"


def test_c06_unicyclic_laplacian():
    with criterion("C6 unicyclic sigma2 reconstruction, n<=7", 120) as info:
        graphs = [g for n in range(3, 8) for g in load_graphs(f"unicyclic_n{n}.g6")]
        for g in graphs:
            assert g.m == g.n
            rep = solve(DeckBundle.from_graph(g, Kind.SIGMA2))
            assert rep.status is Status.UNIQUE, to_graph6(g)
            assert rep.poly == sigma(Kind.SIGMA2, g), to_graph6(g)
        info["detail"] = f"{len(graphs)} graphs"


def test_c07_tree_degenerate_index():
    with criterion("C7 trees sigma1 free index {1}, 2<=n<=7", 120) as info:
        graphs = [g for n in range(2, 8) for g in load_graphs(f"trees_n{n}.g6")]
        for g in graphs:
            rep = solve(DeckBundle.from_graph(g, Kind.SIGMA1))
            direct = sigma(Kind.SIGMA1, g)
            assert rep.status is Status.UNDERDETERMINED, to_graph6(g)
            assert rep.free_indices == {1}, to_graph6(g)
            assert rep.residuals[1] == 0
            assert all(rep.poly.coeff(k) == direct.coeff(k) for k in range(g.n + 1) if k != 1)
        # on K1 the degenerate index is the leading one, fixed by monicity
        k1 = solve(DeckBundle.from_graph(Graph.complete(1), Kind.SIGMA1))
        assert k1.status is Status.UNIQUE and not k1.free_indices
        info["detail"] = f"{len(graphs)} trees; K1 resolved by monicity"


def test_c08_oracle_equivalence():
    rng = random.Random(808)
    with criterion("C8 det/charpoly/perm/permpoly vs Leibniz", 60) as info:
        for _ in range(100):
            rows = rand_square(rng, rng.randint(0, 5))
            M = RatMatrix(rows)
            assert det(M) == leibniz_det(rows)
            assert charpoly(M) == leibniz_charpoly(rows)
        for _ in range(50):
            rows = rand_square(rng, rng.randint(0, 6))
            M = RatMatrix(rows)
            assert perm(M) == leibniz_perm(rows)
            assert permpoly(M) == leibniz_permpoly(rows)
        info["detail"] = "150 cases"


def test_c09_performance_floor():
    rng = random.Random(909)
    n = 16
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(0, 1)
    with criterion("C9a permanent of random symmetric 0/1 16x16", 5) as info:
        value = perm(RatMatrix(rows))
        info["detail"] = f"per = {value}"
    assert value >= 0
    g = rand_graph(rng, 14)
    with criterion("C9b permanental polynomial of random 14-vertex graph", 60) as info:
        p = sigma(Kind.SIGMA4, g)
        info["detail"] = f"m = {g.m}"
    assert p.degree == 14 and p.leading == 1
    assert p.coeff(12) == g.m  # per counts each edge once in the x^(n-2) term
    A = RatMatrix([[r >> j & 1 for j in range(14)] for r in g.adj])
    assert p(3) == perm(RatMatrix.identity(14).scale(3) - A)


def test_c10_graph6_roundtrip():
    with criterion("C10 graph6 round-trip over n<=7 corpus", 10) as info:
        total = 0
        for k in range(8):
            recs = fixture_records(f"all_n{k}.g6")
            with open(FIXTURES / f"all_n{k}.g6") as fh:
                lines = sum(1 for ln in fh if ln.strip())
            assert len(recs) == lines
            for rec in recs:
                assert to_graph6(parse_graph6(rec)) == rec
            total += len(recs)
        assert len(fixture_records("all_n7.g6")) == 1044
        info["detail"] = f"{total} records, 1044 on 7 vertices"
