"""Simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import StructuralError


@dataclass(frozen=True)
class SimpleGraph:
    """A loopless graph without multi-edges.

    ``edges`` keeps the caller's edge order (it is the column order of phase
    matrices and the vertex order of line graphs); each pair is stored as
    ``(min, max)``.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise StructuralError("vertex count must be non-negative")
        norm, seen = [], set()
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise StructuralError(f"edge {e} has a vertex outside 0..{self.n - 1}")
            if u == v:
                raise StructuralError(f"loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise StructuralError(f"duplicate edge {pair}")
            seen.add(pair)
            norm.append(pair)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Both orientations of every edge mapped to its position in ``edges``."""
        idx = {}
        for k, (u, v) in enumerate(self.edges):
            idx[(u, v)] = k
            idx[(v, u)] = k
        return idx

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def same_edges(self, other: "SimpleGraph") -> bool:
        return self.n == other.n and self.edge_set == other.edge_set

    # -- connectivity -------------------------------------------------------

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        comps = []
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            comp, queue = [root], deque([root])
            while queue:
                x = queue.popleft()
                for y in sorted(self.adjacency[x]):
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    @cached_property
    def spanning_forest(self) -> tuple[tuple[int, ...], dict[int, int]]:
        """BFS order (roots first in each component) and a parent map."""
        order, parent = [], {}
        seen = [False] * self.n
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            order.append(root)
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y in sorted(self.adjacency[x]):
                    if not seen[y]:
                        seen[y] = True
                        parent[y] = x
                        order.append(y)
                        queue.append(y)
        return tuple(order), parent

    @cached_property
    def tree_edge_indices(self) -> frozenset[int]:
        _, parent = self.spanning_forest
        return frozenset(self.edge_index[(c, p)] for c, p in parent.items())

    @cached_property
    def cotree_edge_indices(self) -> tuple[int, ...]:
        tree = self.tree_edge_indices
        return tuple(k for k in range(self.m) if k not in tree)

    # -- subgraphs -----------------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> tuple["SimpleGraph", tuple[int, ...]]:
        """Subgraph induced by a vertex set, relabelled in increasing order.

        Returns the subgraph and the tuple of host vertices (new label i is
        host vertex ``verts[i]``). Edges keep host edge order.
        """
        verts = tuple(sorted(set(vertices)))
        pos = {v: i for i, v in enumerate(verts)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return SimpleGraph(len(verts), tuple(edges)), verts

    def induced_edge_indices(self, vertices: Iterable[int]) -> tuple[int, ...]:
        vs = set(vertices)
        return tuple(k for k, (u, v) in enumerate(self.edges) if u in vs and v in vs)

    def edge_subgraph(self, edge_ids: Iterable[int]) -> tuple["SimpleGraph", tuple[int, ...], tuple[int, ...]]:
        """Subgraph formed by a set of edges and their endpoints.

        Returns ``(graph, host_vertices, host_edge_ids)`` with both tuples in
        increasing host order.
        """
        ks = tuple(sorted(set(edge_ids)))
        verts = tuple(sorted({x for k in ks for x in self.edges[k]}))
        pos = {v: i for i, v in enumerate(verts)}
        edges = [(pos[self.edges[k][0]], pos[self.edges[k][1]]) for k in ks]
        return SimpleGraph(len(verts), tuple(edges)), verts, ks

    def relabel(self, phi) -> "SimpleGraph":
        """Image graph under the vertex map ``v -> phi[v]`` (edge order kept)."""
        return SimpleGraph(self.n, tuple((phi[u], phi[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={list(self.edges)})"


def circuit_rank(graph: SimpleGraph) -> int:
    """m - n + 1 for a connected graph."""
    from .errors import DomainError

    if not graph.is_connected() or graph.n == 0:
        raise DomainError("circuit rank is defined here for connected graphs only")
    return graph.m - graph.n + 1


def is_path_graph(graph: SimpleGraph) -> bool:
    if graph.n == 0 or not graph.is_connected():
        return False
    if graph.n == 1:
        return True
    return graph.m == graph.n - 1 and max(graph.degrees) <= 2


def is_cycle_graph(graph: SimpleGraph) -> bool:
    return graph.n >= 3 and graph.is_connected() and all(d == 2 for d in graph.degrees)


# -- constructors -------------------------------------------------------------


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple(combinations(range(n), 2)))


def star_graph(k: int) -> SimpleGraph:
    """K_{1,k} with centre 0."""
    return SimpleGraph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def claws(graph: SimpleGraph):
    """Yield induced K_{1,3} as ``(centre, a, b, c)``."""
    adj = graph.adjacency
    for v in range(graph.n):
        for a, b, c in combinations(sorted(adj[v]), 3):
            if b not in adj[a] and c not in adj[a] and c not in adj[b]:
                yield (v, a, b, c)
