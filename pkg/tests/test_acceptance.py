"""Acceptance criteria. Every identity is checked with exact equality."""

import subprocess
import sys
import time

import pytest

from eulerrecip.chromatic import (
    SimpleGraph,
    acyclic_orientations,
    aoc_bruteforce,
    aoc_count,
    chromatic_polynomial,
    chromatic_reciprocity_check,
    complete_graph,
    count_proper_colorings,
)
from eulerrecip.corpus import acyclic_pair_sets, multigraph_family, poset_family, total_order_family
from eulerrecip.eulercalc import (
    SemialgTotalOrder,
    config_space_euler,
    hom_euler_total_order,
    hom_euler_total_order_by_images,
    negate_total_order,
)
from eulerrecip.flow import (
    OrientedMultigraph,
    SAGroup,
    betti,
    cycle,
    enumerate_flows,
    flow_polynomial,
    ftc_count,
    ftc_euler,
    subgraph_expansion_polynomial,
)
from eulerrecip.homspace import HomMode, count_homs, order_polynomial
from eulerrecip.polynomial import RationalPoly, eval_int, reciprocity_transform, to_monomial
from eulerrecip.poset import chain
from eulerrecip.stratify import ConstraintSet, cone_euler, hom_euler_negated_target

W, S = HomMode.WEAK, HomMode.STRICT
TOLERANCE = 0  # exact integer / rational arithmetic throughout


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@pytest.mark.acceptance(1, "order polynomial reciprocity, |P| <= 5")
def test_order_reciprocity():
    posets = poset_family(5)
    # labelled posets, deduplicated by transitive closure
    assert len(posets) == 1 + 1 + 2 + 7 + 40 + 357
    with Timer() as t:
        bad = [
            P for P in posets
            if to_monomial(order_polynomial(P, S)) != reciprocity_transform(to_monomial(order_polynomial(P, W)), P.n)
        ]
    assert bad == []
    assert t.seconds < 30


@pytest.mark.acceptance(2, "negated-target hom Euler characteristic, |P|, |Q| <= 4")
def test_main_identity():
    fam = poset_family(4)
    with Timer() as t:
        bad = []
        for P in fam:
            sign = (-1) ** P.n
            for Q in fam:
                if hom_euler_negated_target(P, Q, W) - sign * count_homs(P, Q, S) != TOLERANCE:
                    bad.append((P, Q, W))
                if hom_euler_negated_target(P, Q, S) - sign * count_homs(P, Q, W) != TOLERANCE:
                    bad.append((P, Q, S))
    assert bad == []
    assert hom_euler_negated_target(chain(2), chain(2), W) == 1
    assert t.seconds < 120


@pytest.mark.acceptance(3, "order cone Euler characteristics, n <= 5")
def test_order_cones():
    with Timer() as t:
        for n in range(6):
            for X in acyclic_pair_sets(n):
                c = ConstraintSet(n, X)
                assert cone_euler(c, W) == ((-1) ** n if not X else 0)
                assert cone_euler(c, S) == (-1) ** n
    assert t.seconds < 10


@pytest.mark.acceptance(4, "two routes to e(Hom(P, T)), |P| <= 4, pieces <= 4")
def test_total_order_routes():
    orders = total_order_family(4)
    assert len(orders) == 31
    with Timer() as t:
        for P in poset_family(4):
            for mode in HomMode:
                for T in orders:
                    assert hom_euler_total_order(P, T, mode) == hom_euler_total_order_by_images(P, T, mode)
    assert t.seconds < 30


@pytest.mark.acceptance(5, "configuration space Euler characteristic equals chi(K_n)")
def test_configuration_bridge():
    for n in range(1, 6):
        chi = chromatic_polynomial(complete_graph(n))
        for e in range(-4, 5):
            assert config_space_euler(n, e) == eval_int(chi, e)


def _labelled_subgraphs(n):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return [
        SimpleGraph.of(n, [p for b, p in enumerate(pairs) if mask >> b & 1])
        for mask in range(1 << len(pairs))
    ]


@pytest.mark.acceptance(6, "chromatic suite over all edge subsets of K_n, n <= 5")
def test_chromatic_suite():
    graphs = [G for n in range(1, 6) for G in _labelled_subgraphs(n)]
    orders = total_order_family(3)
    with Timer() as t:
        for G in graphs:
            chi = chromatic_polynomial(G)
            sign = (-1) ** G.n
            for k in range(5):
                assert eval_int(chi, k) == count_proper_colorings(G, k)
            assert len(acyclic_orientations(G)) == sign * eval_int(chi, -1)
            for n in range(1, 4):
                assert aoc_bruteforce(G, n, W) == sign * eval_int(chi, -n)
                assert all(r.passed for r in chromatic_reciprocity_check(G, n))
        # Euler level for non-finite total orders on the smaller graphs
        for G in graphs:
            if G.n > 4:
                continue
            sign = (-1) ** G.n
            for T in orders:
                neg = negate_total_order(T)
                assert aoc_count(G, T, W) == sign * aoc_count(G, neg, S)
                assert aoc_count(G, T, S) == sign * aoc_count(G, neg, W)
    assert t.seconds < 300


@pytest.mark.acceptance(7, "flow suite on connected multigraphs, |E| <= 6, k <= 4")
def test_flow_suite():
    t_poly = RationalPoly((0, 1))
    C3 = cycle(3)
    assert flow_polynomial(C3) == t_poly - RationalPoly.constant(1)
    assert [ftc_count(C3, k) for k in range(1, 5)] == [k + 1 for k in range(1, 5)]
    bridge = OrientedMultigraph.of(2, [(1, 0)])
    assert flow_polynomial(bridge).is_zero()
    assert [enumerate_flows(bridge, k, True) for k in range(1, 5)] == [0, 0, 0, 0]

    family = multigraph_family(4, 6)
    assert any(h == tl for G in family for h, tl in G.edges)
    with Timer() as t:
        for G in family:
            _, b1 = betti(G)
            phi = flow_polynomial(G)
            assert phi == subgraph_expansion_polynomial(G)
            for k in range(1, 5):
                assert enumerate_flows(G, k, True) == eval_int(phi, k)
                assert ftc_count(G, k) == (-1) ** b1 * eval_int(phi, -k)
                assert ftc_euler(G, SAGroup.cyclic(k).negated()) == (-1) ** b1 * eval_int(phi, k)
                assert ftc_euler(G, SAGroup.cyclic(k)) == ftc_count(G, k)
    assert t.seconds < 300


@pytest.mark.acceptance(8, "verify all exits 0 with byte-identical output")
def test_verify_all_deterministic():
    cmd = [sys.executable, "-m", "eulerrecip", "verify", "all"]
    first = subprocess.run(cmd, capture_output=True, timeout=600)
    second = subprocess.run(cmd, capture_output=True, timeout=600)
    assert first.returncode == 0, first.stderr.decode()[-2000:]
    assert second.returncode == 0
    assert first.stdout == second.stdout
    assert b"# verdict: PASS" in first.stdout
