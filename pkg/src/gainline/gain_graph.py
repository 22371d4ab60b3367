"""Gain graphs, walks, switching, and triangle parity.

A gain graph stores one group element per edge: ``gains[k]`` is the gain of
edge ``k`` read from its smaller endpoint to its larger one. The opposite
orientation carries the inverse, so the defining symmetry holds by
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, StructuralError
from .graphs import SimpleGraph
from .groups import FiniteGroup, require_central_involution
from .isomorphism import isomorphisms


@dataclass(frozen=True)
class GainGraph:
    graph: SimpleGraph
    group: FiniteGroup
    gains: tuple[int, ...]

    def __post_init__(self):
        gains = tuple(self.gains)
        if len(gains) != self.graph.m:
            raise StructuralError(f"expected {self.graph.m} gains, got {len(gains)}")
        for g in gains:
            self.group._check(g)
        object.__setattr__(self, "gains", gains)

    @classmethod
    def from_pairs(
        cls, graph: SimpleGraph, group: FiniteGroup, pairs: Mapping[tuple[int, int], int]
    ) -> "GainGraph":
        """Build from ``{(u, v): psi(u, v)}``; each edge needs one orientation."""
        gains = [None] * graph.m
        for (u, v), g in pairs.items():
            k = graph.edge_index.get((u, v))
            if k is None:
                raise StructuralError(f"({u}, {v}) is not an edge")
            val = g if u < v else group.inv[g]
            if gains[k] is not None and gains[k] != val:
                raise StructuralError(f"inconsistent gains on edge {graph.edges[k]}")
            gains[k] = val
        if any(x is None for x in gains):
            missing = [graph.edges[k] for k, x in enumerate(gains) if x is None]
            raise StructuralError(f"no gain given for edges {missing}")
        return cls(graph, group, tuple(gains))

    @classmethod
    def constant(cls, graph: SimpleGraph, group: FiniteGroup, c: int) -> "GainGraph":
        """The gain function equal to an involution ``c`` on every orientation."""
        if not group.is_involution(c):
            raise DomainError("a constant gain function needs an involution")
        return cls(graph, group, (c,) * graph.m)

    def gain(self, u: int, v: int) -> int:
        k = self.graph.edge_index.get((u, v))
        if k is None:
            raise StructuralError(f"({u}, {v}) is not an edge")
        g = self.gains[k]
        return g if u < v else self.group.inv[g]

    @cached_property
    def gain_map(self) -> dict[tuple[int, int], int]:
        """Gains of both orientations of every edge."""
        inv = self.group.inv
        out = {}
        for (u, v), g in zip(self.graph.edges, self.gains):
            out[(u, v)] = g
            out[(v, u)] = inv[g]
        return out

    def same_gains(self, other: "GainGraph") -> bool:
        """Equal as gain functions, ignoring edge order."""
        return (
            self.group == other.group
            and self.graph.same_edges(other.graph)
            and self.gain_map == other.gain_map
        )

    def relabel(self, phi: Sequence[int], target: SimpleGraph | None = None) -> "GainGraph":
        """Push gains along the vertex map ``v -> phi[v]``.

        With ``target`` given the result uses the target's edge order, which
        must be the image edge set.
        """
        if target is None:
            target = self.graph.relabel(phi)
        pulled = {(phi[u], phi[v]): g for (u, v), g in zip(self.graph.edges, self.gains)}
        if len(pulled) != target.m:
            raise StructuralError("target graph is not the image edge set")
        return GainGraph.from_pairs(target, self.group, pulled)

    def negated(self) -> "GainGraph":
        """Multiply every gain by the canonical involution (``-sigma`` for t2)."""
        c = self.group.canonical_involution
        if c is None:
            raise DomainError(f"{self.group.name} has no canonical involution")
        tab = self.group.cayley
        return GainGraph(self.graph, self.group, tuple(tab[c][g] for g in self.gains))

    def __repr__(self) -> str:
        labs = [self.group.labels[g] for g in self.gains]
        return f"GainGraph({self.group.name}, n={self.graph.n}, {dict(zip(self.graph.edges, labs))})"


# ---------------------------------------------------------------------------
# walks and restrictions


def walk_gain(g: GainGraph, walk: Sequence[int]) -> int:
    """Ordered product of the gains along consecutive vertex pairs."""
    tab = g.group.cayley
    acc = g.group.identity
    gm = g.gain_map
    for u, v in zip(walk, walk[1:]):
        x = gm.get((u, v))
        if x is None:
            raise StructuralError(f"walk step ({u}, {v}) is not an edge")
        acc = tab[acc][x]
    return acc


def vertex_induced(g: GainGraph, vertices: Iterable[int]) -> tuple[GainGraph, tuple[int, ...]]:
    sub, verts = g.graph.induced(vertices)
    ks = g.graph.induced_edge_indices(verts)
    return GainGraph(sub, g.group, tuple(g.gains[k] for k in ks)), verts


def edge_induced(g: GainGraph, edge_ids: Iterable[int]) -> tuple[GainGraph, tuple[int, ...]]:
    sub, verts, ks = g.graph.edge_subgraph(edge_ids)
    return GainGraph(sub, g.group, tuple(g.gains[k] for k in ks)), verts


# ---------------------------------------------------------------------------
# switching


def apply_switching(g: GainGraph, f: Sequence[int]) -> GainGraph:
    """``psi^f(u, v) = f(u)^-1 psi(u, v) f(v)``."""
    if len(f) != g.graph.n:
        raise StructuralError("switching function must be defined on every vertex")
    tab, inv = g.group.cayley, g.group.inv
    new = tuple(tab[tab[inv[f[u]]][x]][f[v]] for (u, v), x in zip(g.graph.edges, g.gains))
    return GainGraph(g.graph, g.group, new)


def _tree_normalizer(g: GainGraph, target: int) -> list[int]:
    """Switching that sends every spanning-forest edge to ``target``.

    ``target`` must be central. Each component root gets the identity.
    """
    group = g.group
    tab, inv = group.cayley, group.inv
    order, parent = g.graph.spanning_forest
    t = [group.identity] * g.graph.n
    gm = g.gain_map
    for v in order:
        p = parent.get(v)
        if p is not None:
            t[v] = tab[tab[inv[gm[(p, v)]]][t[p]]][target]
    return t


def is_switching_equivalent(g1: GainGraph, g2: GainGraph) -> tuple[int, ...] | None:
    """A switching function f with ``g1^f == g2``, or None.

    Both gain functions are switched to the identity on a spanning forest;
    what remains is one conjugation per component, found by trying every
    group element.
    """
    if g1.group != g2.group:
        raise StructuralError("gain graphs over different groups")
    if not g1.graph.same_edges(g2.graph):
        raise StructuralError("switching equivalence needs identical underlying graphs")
    group = g1.group
    tab, inv = group.cayley, group.inv
    g2 = GainGraph.from_pairs(g1.graph, group, g2.gain_map) if g1.graph != g2.graph else g2
    t1 = _tree_normalizer(g1, group.identity)
    t2 = _tree_normalizer(g2, group.identity)
    n1 = apply_switching(g1, t1).gains
    n2 = apply_switching(g2, t2).gains
    edges = g1.graph.edges
    comp_of = {}
    for ci, comp in enumerate(g1.graph.components):
        for v in comp:
            comp_of[v] = ci
    by_comp = [[] for _ in g1.graph.components]
    for k in g1.graph.cotree_edge_indices:
        by_comp[comp_of[edges[k][0]]].append(k)

    conj = [group.identity] * len(by_comp)
    for ci, ks in enumerate(by_comp):
        for c in range(group.order):
            ci_inv = inv[c]
            if all(tab[tab[ci_inv][n1[k]]][c] == n2[k] for k in ks):
                conj[ci] = c
                break
        else:
            return None
    return tuple(tab[tab[t1[v]][conj[comp_of[v]]]][inv[t2[v]]] for v in range(g1.graph.n))


def switching_to_constant(g: GainGraph, c: int) -> tuple[int, ...] | None:
    """A switching f with ``g^f`` constantly ``c``, or None. ``c`` central involution."""
    require_central_involution(g.group, c)
    t = _tree_normalizer(g, c)
    switched = apply_switching(g, t)
    if all(x == c for x in switched.gains):
        return tuple(t)
    return None


def is_equivalent_to_constant(g: GainGraph, c: int) -> bool:
    return switching_to_constant(g, c) is not None


def is_balanced(g: GainGraph) -> bool:
    return is_equivalent_to_constant(g, g.group.identity)


def is_switching_isomorphic(
    g1: GainGraph, g2: GainGraph
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A pair ``(phi, f)`` with ``g1^f == g2 o phi``, or None.

    ``phi`` maps g1's vertices to g2's; intended for small graphs.
    """
    if g1.group != g2.group:
        return None
    for phi in isomorphisms(g1.graph, g2.graph):
        pulled = {(u, v): g2.gain(phi[u], phi[v]) for (u, v) in g1.graph.edges}
        f = is_switching_equivalent(g1, GainGraph.from_pairs(g1.graph, g1.group, pulled))
        if f is not None:
            return phi, f
    return None


# ---------------------------------------------------------------------------
# triangles


@dataclass(frozen=True, order=True)
class Triangle:
    vertices: tuple[int, int, int]
    odd: bool

    @property
    def parity(self) -> str:
        return "odd" if self.odd else "even"


def triangles(graph: SimpleGraph) -> list[Triangle]:
    """Every 3-clique once, with odd/even parity.

    A triangle is even when every vertex of the graph sees an even number of
    its corners.
    """
    adj = graph.adjacency
    out = []
    for a in range(graph.n):
        for b, c in combinations(sorted(x for x in adj[a] if x > a), 2):
            if c not in adj[b]:
                continue
            tri = {a, b, c}
            odd = any(len(adj[w] & tri) % 2 for w in range(graph.n) if w not in tri)
            out.append(Triangle((a, b, c), odd))
    return out


def triangle_gain(g: GainGraph, t: Triangle | Sequence[int]) -> int:
    a, b, c = t.vertices if isinstance(t, Triangle) else t
    return walk_gain(g, (a, b, c, a))


def triangle_gain_is(g: GainGraph, t: Triangle | Sequence[int], c: int) -> bool:
    """Whether the closed-walk gain around ``t`` equals the central involution ``c``.

    Any start vertex and direction give the same answer because ``c`` is central.
    """
    require_central_involution(g.group, c)
    return triangle_gain(g, t) == c
