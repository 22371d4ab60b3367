"""Phases, the two gain maps they induce, and line graphs.

A phase ``H`` on a graph is a |V| x |E| matrix whose entry ``H[v][e]`` is a
group element when ``v`` is an endpoint of ``e`` and ``None`` otherwise. It
induces a gain function on the graph itself,

    psi(v_i, v_j) = s1 * H[i][k] * H[j][k]^-1        (e_k = {v_i, v_j}),

and one on its line graph,

    zeta(e_p, e_q) = s * H[r][p]^-1 * H[r][q]        (r the shared endpoint),

for fixed central involutions ``s1`` and ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError, StructuralError
from .gain_graph import GainGraph
from .graphs import SimpleGraph
from .groups import FiniteGroup, require_central_involution


def line_graph(g: SimpleGraph) -> SimpleGraph:
    """Line graph with vertex ``k`` standing for ``g.edges[k]``.

    Line edges are listed as ``(p, q)`` with ``p < q`` in lexicographic order.
    """
    if g.m == 0:
        raise DomainError("the line graph of an edgeless graph is empty")
    inc = [[] for _ in range(g.n)]
    for k, (u, v) in enumerate(g.edges):
        inc[u].append(k)
        inc[v].append(k)
    pairs = set()
    for ks in inc:
        pairs.update(combinations(ks, 2))
    return SimpleGraph(g.m, tuple(sorted(pairs)))


def shared_endpoint(g: SimpleGraph, p: int, q: int) -> int:
    common = set(g.edges[p]) & set(g.edges[q])
    if len(common) != 1:
        raise StructuralError(f"edges {g.edges[p]} and {g.edges[q]} are not adjacent")
    return common.pop()


@dataclass(frozen=True)
class GPhase:
    graph: SimpleGraph
    group: FiniteGroup
    entries: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if len(rows) != self.graph.n or any(len(r) != self.graph.m for r in rows):
            raise StructuralError(f"phase must be {self.graph.n} x {self.graph.m}")
        for k, (u, v) in enumerate(self.graph.edges):
            for i in range(self.graph.n):
                x = rows[i][k]
                if (i == u or i == v) != (x is not None):
                    raise StructuralError(f"entry ({i}, {k}) does not match incidence")
                if x is not None:
                    self.group._check(x)
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_columns(
        cls, graph: SimpleGraph, group: FiniteGroup, columns: Sequence[tuple[int, int]]
    ) -> "GPhase":
        """Build from ``(H[u][k], H[v][k])`` per edge ``(u, v)``."""
        rows = [[None] * graph.m for _ in range(graph.n)]
        for k, ((u, v), (a, b)) in enumerate(zip(graph.edges, columns, strict=True)):
            rows[u][k] = a
            rows[v][k] = b
        return cls(graph, group, tuple(tuple(r) for r in rows))

    def column(self, k: int) -> tuple[int, int]:
        u, v = self.graph.edges[k]
        return self.entries[u][k], self.entries[v][k]

    def labelled(self, zero: str = "0") -> list[list[str]]:
        lab = self.group.labels
        return [[zero if x is None else lab[x] for x in row] for row in self.entries]


def psi_of_phase(h: GPhase, s1: int) -> GainGraph:
    """Gain function induced on the phase's own graph."""
    group = h.group
    require_central_involution(group, s1)
    tab, inv = group.cayley, group.inv
    gains = []
    for k, (u, v) in enumerate(h.graph.edges):
        a, b = h.entries[u][k], h.entries[v][k]
        gains.append(tab[tab[s1][a]][inv[b]])
    return GainGraph(h.graph, group, tuple(gains))


def psi_L_of_phase(h: GPhase, s: int) -> GainGraph:
    """Gain function induced on the line graph of the phase's graph."""
    group = h.group
    require_central_involution(group, s)
    tab, inv = group.cayley, group.inv
    lg = line_graph(h.graph)
    gains = []
    for p, q in lg.edges:
        r = shared_endpoint(h.graph, p, q)
        gains.append(tab[tab[s][inv[h.entries[r][p]]]][h.entries[r][q]])
    return GainGraph(lg, group, tuple(gains))


def canonical_phase(g: GainGraph, s1: int) -> GPhase:
    """Phase putting ``psi(v_i, v_j)`` on the smaller endpoint and ``s1`` on the larger."""
    require_central_involution(g.group, s1)
    cols = [(x, s1) for x in g.gains]
    return GPhase.from_columns(g.graph, g.group, cols)


def line_gain_direct(g: GainGraph, s1: int, s: int) -> GainGraph:
    """Line gains of ``g`` computed from its gains by the closed-form case split.

    For line vertices ``{v_i, v_j}`` and ``{v_i, v_k}`` sharing ``v_i``:

    * ``j < i < k``: ``s1 s psi(v_i, v_k)``
    * ``j, k < i``: ``s``
    * ``i < j, k``: ``s psi(v_j, v_i) psi(v_i, v_k)``
    * ``k < i < j``: ``s1 s psi(v_j, v_i)``
    """
    group = g.group
    require_central_involution(group, s1)
    require_central_involution(group, s)
    tab = group.cayley
    s1s = tab[s1][s]
    lg = line_graph(g.graph)
    edges = g.graph.edges
    gains = []
    for p, q in lg.edges:
        i = shared_endpoint(g.graph, p, q)
        j = edges[p][0] + edges[p][1] - i
        k = edges[q][0] + edges[q][1] - i
        if j < i < k:
            x = tab[s1s][g.gain(i, k)]
        elif j < i and k < i:
            x = s
        elif i < j and i < k:
            x = tab[s][tab[g.gain(j, i)][g.gain(i, k)]]
        else:
            x = tab[s1s][g.gain(j, i)]
        gains.append(x)
    return GainGraph(lg, group, tuple(gains))


@dataclass(frozen=True)
class OrientedGainTriple:
    """A gain graph together with a phase that induces it."""

    gain_graph: GainGraph
    phase: GPhase
    s1: int

    def __post_init__(self):
        if self.phase.graph != self.gain_graph.graph:
            raise StructuralError("phase and gain graph live on different graphs")
        if psi_of_phase(self.phase, self.s1).gains != self.gain_graph.gains:
            raise StructuralError("phase does not induce the stated gain function")

    @classmethod
    def from_phase(cls, h: GPhase, s1: int) -> "OrientedGainTriple":
        return cls(psi_of_phase(h, s1), h, s1)

    def line_gain(self, s: int) -> GainGraph:
        return psi_L_of_phase(self.phase, s)


def induced_phase_by_vertices(h: GPhase, vertices: Iterable[int]) -> tuple[GPhase, tuple[int, ...]]:
    """Rows in ``vertices``, columns of edges with both ends there."""
    sub, verts = h.graph.induced(vertices)
    ks = h.graph.induced_edge_indices(verts)
    rows = tuple(tuple(h.entries[v][k] for k in ks) for v in verts)
    return GPhase(sub, h.group, rows), verts


def induced_phase_by_edges(
    h: GPhase, edge_ids: Iterable[int]
) -> tuple[GPhase, tuple[int, ...], tuple[int, ...]]:
    """Columns in ``edge_ids``, rows of their endpoints."""
    sub, verts, ks = h.graph.edge_subgraph(edge_ids)
    rows = tuple(tuple(h.entries[v][k] for k in ks) for v in verts)
    return GPhase(sub, h.group, rows), verts, ks
