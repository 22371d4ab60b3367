"""Exhaustive generation of small connected graphs, one per isomorphism class."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .errors import DomainError
from .graphs import SimpleGraph
from .isomorphism import canonical_form

MAX_VERTICES = 7
MAX_EDGES = 9


def _from_form(form) -> SimpleGraph:
    n, edges = form
    return SimpleGraph(n, edges)


@lru_cache(maxsize=None)
def _by_order(n: int) -> tuple[SimpleGraph, ...]:
    if n == 1:
        return (SimpleGraph(1, ()),)
    seen = {}
    for base in _by_order(n - 1):
        new = n - 1
        for size in range(1, n):
            for nbrs in combinations(range(n - 1), size):
                g = SimpleGraph(n, base.edges + tuple((v, new) for v in nbrs))
                form = canonical_form(g)
                if form not in seen:
                    seen[form] = _from_form(form)
    return tuple(seen[f] for f in sorted(seen))


def connected_graphs(n: int) -> tuple[SimpleGraph, ...]:
    """Connected graphs on exactly ``n`` vertices, in canonical labelling."""
    if not 1 <= n <= MAX_VERTICES:
        raise DomainError(f"graph generation is limited to 1..{MAX_VERTICES} vertices")
    return _by_order(n)


@lru_cache(maxsize=None)
def _by_size(m: int) -> tuple[SimpleGraph, ...]:
    if m == 0:
        return (SimpleGraph(1, ()),)
    seen = {}
    for base in _by_size(m - 1):
        n = base.n
        cands = [SimpleGraph(n, base.edges + ((u, v),))
                 for u, v in combinations(range(n), 2) if not base.has_edge(u, v)]
        cands += [SimpleGraph(n + 1, base.edges + ((u, n),)) for u in range(n)]
        for g in cands:
            form = canonical_form(g)
            if form not in seen:
                seen[form] = _from_form(form)
    return tuple(seen[f] for f in sorted(seen))


def connected_graphs_with_edges(m: int) -> tuple[SimpleGraph, ...]:
    """Connected graphs with exactly ``m`` edges and no isolated vertices."""
    if not 1 <= m <= MAX_EDGES:
        raise DomainError(f"graph generation is limited to 1..{MAX_EDGES} edges")
    return _by_size(m)
