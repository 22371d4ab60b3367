import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from gainline.catalog import DIAMOND, K4, PAW
from gainline.errors import DomainError, StructuralError
from gainline.gain_graph import (
    GainGraph,
    apply_switching,
    edge_induced,
    is_balanced,
    is_equivalent_to_constant,
    is_switching_equivalent,
    is_switching_isomorphic,
    switching_to_constant,
    triangle_gain,
    triangle_gain_is,
    triangles,
    vertex_induced,
    walk_gain,
)
from gainline.graphs import SimpleGraph, complete_graph, cycle_graph, path_graph
from gainline.groups import cyclic, symmetric, t2

from .conftest import gain_graphs, graphs, random_switching

T2 = t2()
Z6 = cyclic(6)
S3 = symmetric(3)
PLUS, MINUS = 0, 1


def signed(graph, negative=()):
    neg = {tuple(sorted(e)) for e in negative}
    return GainGraph(graph, T2, tuple(MINUS if e in neg else PLUS for e in graph.edges))


def test_inverse_orientation():
    g = GainGraph.from_pairs(path_graph(2), Z6, {(1, 0): 2})
    assert g.gain(1, 0) == 2 and g.gain(0, 1) == 4


def test_from_pairs_errors():
    with pytest.raises(StructuralError):
        GainGraph.from_pairs(path_graph(3), Z6, {(0, 1): 1})
    with pytest.raises(StructuralError):
        GainGraph.from_pairs(path_graph(3), Z6, {(0, 2): 1, (0, 1): 1, (1, 2): 1})


def test_walk_gain_examples():
    g = GainGraph(path_graph(3), Z6, (2, 3))
    assert walk_gain(g, (0, 1, 0)) == 0
    assert walk_gain(g, (0, 1, 2)) == 5
    tri = signed(cycle_graph(3), cycle_graph(3).edges)
    assert walk_gain(tri, (0, 1, 2, 0)) == MINUS
    with pytest.raises(StructuralError):
        walk_gain(g, (0, 2))


def test_vertex_induced_examples():
    g = GainGraph(K4, Z6, (1, 2, 3, 4, 5, 0))
    same, verts = vertex_induced(g, range(4))
    assert same == g and verts == (0, 1, 2, 3)
    tri, verts = vertex_induced(g, (0, 1, 3))
    assert tri.graph.m == 3
    assert tri.gain(0, 1) == g.gain(0, 1) and tri.gain(1, 2) == g.gain(1, 3)
    d = GainGraph(DIAMOND, Z6, (1, 2, 3, 4, 5))
    sub, verts = vertex_induced(d, (0, 1, 3))
    assert sub.graph.same_edges(cycle_graph(3))


def test_edge_induced_examples():
    c5 = GainGraph(cycle_graph(5), Z6, (1, 2, 3, 4, 5))
    tree_edges = sorted(c5.graph.tree_edge_indices)
    sub, verts = edge_induced(c5, tree_edges)
    assert sub.graph.m == 4 and len(verts) == 5
    full, _ = vertex_induced(c5, verts)
    assert full.graph.m == 5  # the vertex-induced subgraph keeps the cycle
    assert edge_induced(c5, range(5))[0] == c5
    one, _ = edge_induced(c5, [2])
    assert one.graph.m == 1 and one.gains == (3,)


def test_switching_examples():
    g = GainGraph(K4, S3, (1, 2, 3, 4, 5, 0))
    assert apply_switching(g, (0,) * 4) == g
    z = GainGraph(K4, Z6, (1, 2, 3, 4, 5, 0))
    assert apply_switching(z, (3,) * 4) == z
    p = signed(path_graph(3))
    assert apply_switching(p, (PLUS, MINUS, PLUS)).gains == (MINUS, MINUS)


@settings(max_examples=100, deadline=None)
@given(gain_graphs(), st.randoms(use_true_random=False))
def test_switching_inverse_restores(g, rng):
    f = random_switching(rng, g)
    back = tuple(g.group.inv[x] for x in f)
    assert apply_switching(apply_switching(g, f), back) == g


@settings(max_examples=150, deadline=None)
@given(gain_graphs(group_names=("t2", "cyclic(6)", "symmetric(3)", "quaternion8")), st.randoms(use_true_random=False))
def test_switching_equivalence_finds_witness(g, rng):
    f = random_switching(rng, g)
    h = apply_switching(g, f)
    w = is_switching_equivalent(g, h)
    assert w is not None and apply_switching(g, w) == h


@settings(max_examples=100, deadline=None)
@given(gain_graphs(max_n=6), st.randoms(use_true_random=False))
def test_switching_is_an_equivalence_relation(g, rng):
    f1, f2 = random_switching(rng, g), random_switching(rng, g)
    tab = g.group.cayley
    h1 = apply_switching(g, f1)
    h2 = apply_switching(h1, f2)
    assert is_switching_equivalent(g, g) is not None
    assert is_switching_equivalent(h1, g) is not None
    composed = tuple(tab[a][b] for a, b in zip(f1, f2))
    assert apply_switching(g, composed) == h2
    assert is_switching_equivalent(g, h2) is not None


def test_trees_are_all_equivalent():
    rng = random.Random(3)
    tree = SimpleGraph(6, ((0, 1), (1, 2), (1, 3), (3, 4), (3, 5)))
    for _ in range(20):
        a = GainGraph(tree, S3, tuple(rng.randrange(6) for _ in range(5)))
        b = GainGraph(tree, S3, tuple(rng.randrange(6) for _ in range(5)))
        assert is_switching_equivalent(a, b) is not None


def test_triangle_sign_blocks_equivalence():
    k3 = cycle_graph(3)
    plus = signed(k3)
    one = signed(k3, [(0, 1)])
    assert is_switching_equivalent(plus, one) is None
    # brute force over every switching function
    assert all(apply_switching(plus, f) != one for f in itertools.product((0, 1), repeat=3))


def test_equivalence_requires_same_graph():
    with pytest.raises(StructuralError):
        is_switching_equivalent(signed(path_graph(3)), signed(cycle_graph(3)))


def test_disconnected_graphs_switch_componentwise():
    g = SimpleGraph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
    a = GainGraph(g, S3, (1, 2, 3, 0, 0, 0))
    f = (1, 2, 3, 4, 5, 0)
    b = apply_switching(a, f)
    w = is_switching_equivalent(a, b)
    assert w is not None and apply_switching(a, w) == b


def test_constant_equivalence_examples():
    tree = path_graph(5)
    for c in Z6.central_involutions:
        assert is_equivalent_to_constant(GainGraph(tree, Z6, (1, 2, 3, 4)), c)
    tri = signed(cycle_graph(3), cycle_graph(3).edges)
    assert is_equivalent_to_constant(tri, MINUS)
    c4 = signed(cycle_graph(4), [(0, 1)])
    assert not is_equivalent_to_constant(c4, MINUS)
    assert not is_balanced(c4)
    with pytest.raises(DomainError):
        is_equivalent_to_constant(GainGraph(tree, Z6, (1, 2, 3, 4)), 2)


def closed_walks(graph, max_len):
    adj = graph.adjacency
    for start in range(graph.n):
        stack = [(start,)]
        while stack:
            w = stack.pop()
            if len(w) > 1 and w[-1] == start:
                yield w
            if len(w) - 1 < max_len:
                stack.extend(w + (x,) for x in adj[w[-1]])


@settings(max_examples=60, deadline=None)
@given(gain_graphs(max_n=5, connected=True))
def test_constant_equivalence_matches_closed_walks(g):
    # decide psi ~ c by checking psi(W) = c^|W| on every closed walk up to length n
    for c in g.group.central_involutions:
        expected = all(
            walk_gain(g, w) == (c if (len(w) - 1) % 2 else g.group.identity)
            for w in closed_walks(g.graph, max(g.graph.n, 3))
        )
        assert is_equivalent_to_constant(g, c) == expected


@settings(max_examples=60, deadline=None)
@given(gain_graphs(group_names=("symmetric(3)", "quaternion8"), max_n=5, connected=True), st.randoms(use_true_random=False))
def test_walk_gains_conjugate_after_switching(g, rng):
    h = apply_switching(g, random_switching(rng, g))
    grp = g.group
    for w in itertools.islice(closed_walks(g.graph, 4), 30):
        a, b = walk_gain(g, w), walk_gain(h, w)
        assert any(grp.conjugate(a, c) == b for c in range(grp.order))


def test_switching_class_count_over_t2():
    for graph in (complete_graph(4), cycle_graph(5), PAW, DIAMOND):
        sigs = [signed(graph, [e for e, bit in zip(graph.edges, bits) if bit])
                for bits in itertools.product((0, 1), repeat=graph.m)]
        reps = []
        for s in sigs:
            if not any(is_switching_equivalent(s, r) is not None for r in reps):
                reps.append(s)
        assert len(reps) == 2 ** (graph.m - graph.n + 1)


def test_switching_isomorphic_examples():
    g = GainGraph(DIAMOND, S3, (1, 2, 3, 4, 5))
    perm = (2, 0, 3, 1)
    h = g.relabel(perm)
    hit = is_switching_isomorphic(g, h)
    assert hit is not None
    phi, f = hit
    pulled = GainGraph.from_pairs(g.graph, S3, {(u, v): h.gain(phi[u], phi[v]) for u, v in g.graph.edges})
    assert apply_switching(g, f) == pulled

    z3 = cyclic(3)
    plain = GainGraph(K4, z3, (0,) * 6)
    one = GainGraph(K4, z3, (1, 0, 0, 0, 0, 0))
    assert is_switching_isomorphic(plain, one) is None
    assert is_switching_isomorphic(signed(PAW), signed(PAW, PAW.edges)) is None


def test_triangle_parity_examples():
    (t,) = triangles(PAW)
    assert t.odd
    assert all(t.odd for t in triangles(K4)) and len(triangles(K4)) == 4
    ts = triangles(DIAMOND)
    assert len(ts) == 2 and not any(t.odd for t in ts)
    assert not triangles(cycle_graph(3))[0].odd


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_triangle_parity_isomorphism_invariant(graph, rng):
    perm = list(range(graph.n))
    rng.shuffle(perm)
    h = graph.relabel(perm)
    before = {tuple(sorted(perm[v] for v in t.vertices)): t.odd for t in triangles(graph)}
    after = {t.vertices: t.odd for t in triangles(h)}
    assert before == after


def test_triangle_gain_is_examples():
    k3 = cycle_graph(3)
    assert triangle_gain_is(signed(k3), (0, 1, 2), PLUS)
    assert triangle_gain_is(signed(k3, [(1, 2)]), (0, 1, 2), MINUS)
    g = GainGraph.from_pairs(k3, S3, {(0, 1): S3.element("(12)"), (1, 2): S3.element("(13)"), (2, 0): 0})
    # close the triangle so the product through vertex 0 is the identity
    g = GainGraph.from_pairs(
        k3, S3, {(0, 1): g.gain(0, 1), (1, 2): g.gain(1, 2), (2, 0): S3.inverse(S3.mul(g.gain(0, 1), g.gain(1, 2)))}
    )
    walks = [(a, b, c, a) for a, b, c in itertools.permutations(range(3))]
    assert all(walk_gain(g, w) == S3.identity for w in walks)
    assert triangle_gain_is(g, (0, 1, 2), S3.identity)
    h = GainGraph.from_pairs(k3, S3, {(0, 1): S3.element("(12)"), (1, 2): S3.element("(13)"), (2, 0): 0})
    answers = {walk_gain(h, w) == S3.identity for w in walks}
    assert answers == {False}
    assert not triangle_gain_is(h, (0, 1, 2), S3.identity)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_anchor_triangles_decide_complete_graphs(n):
    from gainline.recognition import clique_is_constant_by_anchor

    rng = random.Random(n)
    kn = complete_graph(n)
    for group in (T2, Z6, S3):
        for _ in range(80):
            g = GainGraph(kn, group, tuple(rng.randrange(group.order) for _ in kn.edges))
            if rng.random() < 0.5:
                # plant an instance switching equivalent to a constant
                c = rng.choice(group.central_involutions)
                g = apply_switching(GainGraph.constant(kn, group, c), random_switching(rng, g))
            for c in group.central_involutions:
                assert clique_is_constant_by_anchor(g, range(n), c) == is_equivalent_to_constant(g, c)
                assert (switching_to_constant(g, c) is not None) == is_equivalent_to_constant(g, c)
                if is_equivalent_to_constant(g, c):
                    assert all(triangle_gain(g, t) == c for t in triangles(kn))
