"""Isomorphism search and canonical forms for small graphs.

Both routines are plain backtracking; they are meant for the catalog sizes
used here (at most about ten vertices), not for large inputs.
"""

from __future__ import annotations

from typing import Iterator

from .graphs import SimpleGraph


def _invariant(g: SimpleGraph):
    return g.n, g.m, tuple(sorted(g.degrees))


def isomorphisms(g1: SimpleGraph, g2: SimpleGraph) -> Iterator[tuple[int, ...]]:
    """Yield every isomorphism ``phi`` with ``phi[v]`` the image of v in g2."""
    if _invariant(g1) != _invariant(g2):
        return
    n = g1.n
    adj1, adj2 = g1.adjacency, g2.adjacency
    # neighbour-degree multisets give a cheap extra filter
    sig1 = [(len(adj1[v]), tuple(sorted(len(adj1[u]) for u in adj1[v]))) for v in range(n)]
    sig2 = [(len(adj2[v]), tuple(sorted(len(adj2[u]) for u in adj2[v]))) for v in range(n)]
    cands = [[w for w in range(n) if sig2[w] == sig1[v]] for v in range(n)]
    if any(not c for c in cands):
        return

    # visit vertices so each one after the first touches an earlier one if possible
    order, placed = [], set()
    while len(order) < n:
        frontier = [v for v in range(n) if v not in placed and adj1[v] & placed]
        pool = frontier or [v for v in range(n) if v not in placed]
        v = min(pool, key=lambda x: (len(cands[x]), -len(adj1[x]), x))
        order.append(v)
        placed.add(v)

    phi = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            yield tuple(phi)
            return
        v = order[i]
        for w in cands[v]:
            if used[w]:
                continue
            ok = True
            for u in order[:i]:
                if (u in adj1[v]) != (phi[u] in adj2[w]):
                    ok = False
                    break
            if ok:
                phi[v] = w
                used[w] = True
                yield from extend(i + 1)
                used[w] = False
        phi[v] = -1

    yield from extend(0)


def find_isomorphism(g1: SimpleGraph, g2: SimpleGraph) -> tuple[int, ...] | None:
    return next(isomorphisms(g1, g2), None)


def are_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> bool:
    return find_isomorphism(g1, g2) is not None


def automorphisms(g: SimpleGraph) -> list[tuple[int, ...]]:
    return list(isomorphisms(g, g))


# ---------------------------------------------------------------------------
# canonical form: colour refinement + individualisation, twins pruned


def _refine(adj, colors):
    n = len(colors)
    count = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == count:
            return new
        colors, count = new, len(ranks)


def canonical_form(g: SimpleGraph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """A complete isomorphism invariant: equal iff the graphs are isomorphic."""
    adj = g.adjacency
    n = g.n
    if n == 0:
        return (0, ())
    best = None

    def leaf(colors):
        edges = sorted(
            (min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in g.edges
        )
        return tuple(edges)

    def search(colors):
        nonlocal best
        colors = _refine(adj, colors)
        if len(set(colors)) == n:
            cert = leaf(colors)
            if best is None or cert < best:
                best = cert
            return
        sizes = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, k in sizes.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]
        tried = []
        for v in cell:
            if any(adj[v] - {u} == adj[u] - {v} for u in tried):
                continue
            tried.append(v)
            nxt = [2 * c + 1 for c in colors]
            nxt[v] = 2 * colors[v]
            search(nxt)

    search([0] * n)
    return (n, best)
