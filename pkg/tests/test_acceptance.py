"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N [PASS|FAIL]`` line, and the lines are
repeated in the pytest terminal summary.
"""

import itertools
import random
import time

import numpy as np

from gainline.catalog import F3, signed_forbidden
from gainline.gain_graph import apply_switching
from gainline.generate import connected_graphs, connected_graphs_with_edges
from gainline.graphs import SimpleGraph, circuit_rank, complete_graph, is_cycle_graph, is_path_graph
from gainline.groups import cyclic, named_group, quaternion8, symmetric, t2
from gainline.harness import (
    accepts_every_gain,
    enumerate_connected_graphs,
    enumerate_switching_classes,
    random_gain_graph,
    round_trip,
    verify_main_theorem,
    verify_spectral_theorem,
)
from gainline.isomorphism import are_isomorphic, canonical_form
from gainline.line import canonical_phase, line_graph, psi_L_of_phase, psi_of_phase
from gainline.recognition import krausz_partition, root_gain_graph
from gainline.spectral import adjacency, signed_spectrum, spectrum

from .conftest import criterion
from .oracles import (
    all_signatures,
    direct_matches_canonical,
    line_class_map_injective,
    random_phase,
    restriction_by_edges_holds,
    restriction_by_vertices_holds,
)
from .test_recognition import WORKED

T2 = t2()


def test_criterion_1_main_theorem_t2():
    with criterion(1, "five-way agreement, t2, n <= 5, both s") as c:
        start = time.perf_counter()
        report = verify_main_theorem(5, [T2])
        elapsed = time.perf_counter() - start
        expected = 2 * sum(2 ** (g.m - g.n + 1) for g in enumerate_connected_graphs(5).graphs if g.m)
        c.detail = f"{report.instances} instances, {len(report.discrepancies)} discrepancies, {elapsed:.1f}s"
        assert report.instances == expected
        assert report.ok
        assert elapsed < 120


def test_criterion_2_main_theorem_nonabelian():
    with criterion(2, "five-way agreement, S3 (s=e) and Q8 (s=-1), n <= 4") as c:
        s3, q8 = symmetric(3), quaternion8()
        start = time.perf_counter()
        report = verify_main_theorem(4, [(s3, [s3.identity]), (q8, [q8.element("-1")])])
        elapsed = time.perf_counter() - start
        c.detail = f"{report.instances} instances, {len(report.discrepancies)} discrepancies, {elapsed:.1f}s"
        assert report.ok
        assert elapsed < 120


WORKED_PICKS = {
    "cyclic(6)": [("1", "2", "3", "4"), ("5", "5", "0", "3"), ("2", "0", "4", "1")],
    "symmetric(3)": [("(12)", "(123)", "(13)", "(23)"), ("(132)", "(12)", "e", "(123)"), ("(23)", "(23)", "(13)", "(132)")],
    "quaternion8": [("i", "j", "k", "-1"), ("-i", "-k", "j", "i"), ("k", "1", "-j", "-k")],
}


def test_criterion_3_worked_example():
    with criterion(3, "worked example: partition, 7-vertex root, exact phase") as c:
        done = 0
        want_cells = sorted(tuple(sorted(x)) for x in WORKED.EXAMPLE_CELLS)
        for spec, quads in WORKED_PICKS.items():
            group = named_group(spec)
            e = group.identity
            for quad in quads:
                abcd = tuple(group.element(x) for x in quad)
                g = WORKED.example_graph(group, *abcd)
                found = krausz_partition(g, e)
                assert found is not None and sorted(found.cells) == want_cells
                # the partition found by search also reproduces the gains exactly
                auto = root_gain_graph(g, found, e)
                assert psi_L_of_phase(auto.phase, e).same_gains(g)
                # the hand-listed switchers give the printed phase matrix
                triple = root_gain_graph(g, WORKED.example_partition(group, *abcd), e)
                h = triple.phase
                assert h.graph.n == 7 and h.graph.m == 8
                assert are_isomorphic(h.graph, auto.phase.graph)
                assert h.entries == WORKED.expected_phase(group, *abcd)
                assert psi_L_of_phase(h, e).same_gains(g)
                done += 1
        c.detail = f"{done} instantiations over Z6, S3, Q8 reproduced exactly"
        assert done == 9


def test_criterion_4_spectral_theorem():
    with criterion(4, "six-way spectral agreement, line graphs n <= 6, t2") as c:
        start = time.perf_counter()
        report = verify_spectral_theorem(6)
        elapsed = time.perf_counter() - start
        octahedra = sum(
            are_isomorphic(SimpleGraph(rec["instance"]["vertices"], tuple((u, v) for u, v, _ in rec["instance"]["edges"])), F3.graph)
            for rec in report.discrepancies
        )
        c.detail = (
            f"{report.instances} instances, {len(report.discrepancies)} discrepancies "
            f"({octahedra} on the octahedron), {elapsed:.1f}s"
        )
        assert elapsed < 180
        assert report.ok


def test_criterion_5_forbidden_pattern_spectra():
    with criterion(5, "forbidden signed patterns beyond +-2.05") as c:
        lows = {name: signed_spectrum(g).lambda_min for name, g in signed_forbidden().items()}
        highs = {name: signed_spectrum(g).lambda_max for name, g in signed_forbidden(True).items()}
        c.detail = "lambda_min " + ", ".join(f"{k}={v:.4f}" for k, v in lows.items())
        c.detail += "; negated lambda_max " + ", ".join(f"{k}={v:.4f}" for k, v in highs.items())
        assert len(lows) == len(highs) == 4
        assert all(v < -2.05 for v in lows.values())
        assert all(v > 2.05 for v in highs.values())


def test_criterion_6_round_trip():
    with criterion(6, "root of the line gain is switching isomorphic to the original") as c:
        rng = random.Random(20240601)
        groups = [T2, cyclic(6), symmetric(3)]
        ok = 0
        for _ in range(1000):
            group = rng.choice(groups)
            g = random_gain_graph(rng, group, 8)
            s1 = rng.choice(group.central_involutions)
            s = rng.choice(group.central_involutions)
            ok += round_trip(g, s1, s) is not None
        c.detail = f"{ok}/1000 recovered"
        assert ok == 1000


def test_criterion_7_corollaries():
    with criterion(7, "paths and cycles: acceptance, circuit rank, spectral radius") as c:
        # (a) every signature accepted exactly on paths and cycles
        graphs = [g for g in enumerate_connected_graphs(7).graphs if g.m]
        for graph in graphs:
            pc = is_path_graph(graph) or is_cycle_graph(graph)
            for s in (0, 1):
                assert accepts_every_gain(graph, T2, s) == pc, (graph, s)
        # (b) the line graph has larger circuit rank away from paths and cycles
        for graph in graphs:
            if graph.m < 2:
                continue
            grows = circuit_rank(line_graph(graph)) > circuit_rank(graph)
            assert grows == (not (is_path_graph(graph) or is_cycle_graph(graph))), graph
        # (c) spectral radius at most 2 exactly on paths and cycles, line graphs <= 8 vertices
        seen = {}
        for m in range(1, 9):
            for root in connected_graphs_with_edges(m):
                lg = line_graph(root)
                seen.setdefault(canonical_form(lg), lg)
        small = 0
        for lg in seen.values():
            lam = spectrum(adjacency(lg)).lambda_max
            numpy_lam = np.linalg.eigvalsh(np.array(adjacency(lg).entries, dtype=float))[-1]
            assert abs(lam - numpy_lam) < 1e-9
            pc = is_path_graph(lg) or is_cycle_graph(lg)
            assert (lam <= 2 + 1e-7) == pc, lg
            small += pc
        c.detail = f"(a),(b) on {len(graphs)} graphs; (c) on {len(seen)} line graphs, {small} paths/cycles"


def test_criterion_8_structural_properties():
    with criterion(8, "phase identities, restrictions, spectra, injectivity") as c:
        rng = random.Random(8)
        counts = dict.fromkeys(("canon", "direct", "restrict", "switch", "inject"), 0)

        # canonical phase recovers the gains: exhaustive over t2 to 5 vertices, 1000 random
        for n in range(1, 6):
            for graph in connected_graphs(n):
                for g in all_signatures(graph, T2):
                    for s1 in (0, 1):
                        assert psi_of_phase(canonical_phase(g, s1), s1) == g
                        counts["canon"] += 1
        groups = [T2, cyclic(6), symmetric(3)]
        for _ in range(1000):
            group = rng.choice(groups)
            g = random_gain_graph(rng, group, 8)
            s1 = rng.choice(group.central_involutions)
            assert psi_of_phase(canonical_phase(g, s1), s1) == g
            counts["canon"] += 1

        # closed form equals the line gain of the canonical phase
        for n in range(2, 6):
            for graph in connected_graphs(n):
                for g in all_signatures(graph, T2):
                    for s1, s in itertools.product((0, 1), repeat=2):
                        assert direct_matches_canonical(g, s1, s)
                        counts["direct"] += 1
        for _ in range(500):
            group = rng.choice(groups[1:])
            g = random_gain_graph(rng, group, 8)
            invs = group.central_involutions
            assert direct_matches_canonical(g, rng.choice(invs), rng.choice(invs))
            counts["direct"] += 1

        # restriction identities on every vertex and edge subset, graphs <= 6 vertices
        s3 = symmetric(3)
        for n in range(2, 7):
            for graph in connected_graphs(n):
                h = random_phase(rng, graph, s3)
                psi, zeta = psi_of_phase(h, 0), psi_L_of_phase(h, 0)
                for r in range(1, n + 1):
                    for A in itertools.combinations(range(n), r):
                        assert restriction_by_vertices_holds(h, psi, 0, A)
                        counts["restrict"] += 1
                for r in range(1, graph.m + 1):
                    for B in itertools.combinations(range(graph.m), r):
                        assert restriction_by_edges_holds(h, psi, zeta, 0, 0, B)
                        counts["restrict"] += 1

        # switching leaves the spectrum unchanged: every class and every switching to 5 vertices
        for n in range(2, 6):
            for graph in connected_graphs(n):
                for g in enumerate_switching_classes(graph, T2):
                    base = signed_spectrum(g).eigenvalues
                    for f in itertools.product((0, 1), repeat=n):
                        other = signed_spectrum(apply_switching(g, f)).eigenvalues
                        assert max(abs(a - b) for a, b in zip(base, other)) < 1e-9
                        counts["switch"] += 1

        # inequivalent signatures have inequivalent line gains, <= 6 edges, K3 excluded
        k3 = complete_graph(3)
        for m in range(1, 7):
            for graph in connected_graphs_with_edges(m):
                if are_isomorphic(graph, k3):
                    continue
                for s1, s in itertools.product((0, 1), repeat=2):
                    assert line_class_map_injective(graph, T2, s1, s)
                    counts["inject"] += 1

        c.detail = ", ".join(f"{k}={v}" for k, v in counts.items())
