"""Exhaustive cross-validation of the recognition predicates at desk scale."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import DomainError
from .gain_graph import GainGraph, is_switching_equivalent, is_switching_isomorphic
from .generate import MAX_VERTICES, connected_graphs, connected_graphs_with_edges
from .graphs import SimpleGraph
from .groups import FiniteGroup
from .isomorphism import are_isomorphic, canonical_form
from .line import line_gain_direct, line_graph
from .recognition import (
    check_small_subgraphs,
    check_triangle_conditions,
    check_Y_free,
    is_gain_line,
    krausz_partition,
    root_search,
    verify_witness,
)
from .spectral import forbidden_signed_subgraph, signed_spectrum

DEFAULT_VERTEX_LIMIT = 6


@dataclass(frozen=True)
class GraphCatalog:
    n_max: int
    graphs: tuple[SimpleGraph, ...]

    def of_order(self, n: int) -> list[SimpleGraph]:
        return [g for g in self.graphs if g.n == n]


def enumerate_connected_graphs(n_max: int) -> GraphCatalog:
    """Every connected graph on 1..n_max vertices, one per isomorphism class."""
    if n_max > MAX_VERTICES:
        raise DomainError(f"n_max > {MAX_VERTICES} is refused")
    graphs = tuple(g for n in range(1, n_max + 1) for g in connected_graphs(n))
    return GraphCatalog(n_max, graphs)


def connected_line_graphs(n_max: int) -> list[SimpleGraph]:
    """Connected line graphs on 1..n_max vertices, one per isomorphism class.

    Obtained as line graphs of connected roots with at most ``n_max`` edges.
    """
    seen = {}
    for m in range(1, n_max + 1):
        for root in connected_graphs_with_edges(m):
            form = canonical_form(line_graph(root))
            seen.setdefault(form, SimpleGraph(form[0], form[1]))
    return [seen[f] for f in sorted(seen)]


def enumerate_switching_classes(graph: SimpleGraph, group: FiniteGroup) -> Iterator[GainGraph]:
    """One gain function per switching class on a connected graph.

    Representatives are the identity on a fixed spanning tree; two of them
    are equivalent exactly when a single conjugation maps one onto the
    other, so each orbit contributes its lexicographically least member.
    """
    if not graph.is_connected():
        raise DomainError("switching classes are enumerated on connected graphs")
    cotree = graph.cotree_edge_indices
    tab, inv = group.cayley, group.inv
    order = range(group.order)
    for values in product(order, repeat=len(cotree)):
        if not group.is_abelian:
            if any(tuple(tab[tab[inv[c]][x]][c] for x in values) < values for c in order):
                continue
        gains = [group.identity] * graph.m
        for k, x in zip(cotree, values):
            gains[k] = x
        yield GainGraph(graph, group, tuple(gains))


def _serialize(g: GainGraph) -> dict:
    lab = g.group.labels
    return {
        "group": g.group.name,
        "vertices": g.graph.n,
        "edges": [[u, v, lab[x]] for (u, v), x in zip(g.graph.edges, g.gains)],
    }


@dataclass
class Report:
    instances: int = 0
    discrepancies: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def write_jsonl(self, path: str | Path) -> None:
        with open(path, "w") as fh:
            for rec in self.discrepancies:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")


def main_predicates(g: GainGraph, s: int) -> dict[str, bool]:
    """The five characterizations, each computed on its own route."""
    return {
        "root_search": root_search(g, s) is not None,
        "krausz": krausz_partition(g, s) is not None,
        "triangles": check_triangle_conditions(g, s).ok,
        "y_free": check_Y_free(g, s) is None,
        "small_subgraphs": check_small_subgraphs(g, s),
    }


def check_instance(g: GainGraph, s: int) -> dict | None:
    """Discrepancy record for one instance, or None when everything agrees."""
    preds = main_predicates(g, s)
    verdict = is_gain_line(g, s)
    preds["verdict"] = verdict.is_gain_line
    witness_ok = verify_witness(g, verdict)
    if len(set(preds.values())) == 1 and witness_ok:
        return None
    return {
        "instance": _serialize(g),
        "s": g.group.labels[s],
        "predicates": preds,
        "witness_verified": witness_ok,
    }


def verify_main_theorem(
    n_max: int,
    groups: Sequence[FiniteGroup | tuple[FiniteGroup, Sequence[int]]],
    allow_large: bool = False,
) -> Report:
    """Check five-way agreement on every (graph, switching class, s).

    ``groups`` entries are a group (all its central involutions are used) or
    a ``(group, involutions)`` pair.
    """
    if n_max > DEFAULT_VERTEX_LIMIT and not allow_large:
        raise DomainError(f"n_max > {DEFAULT_VERTEX_LIMIT} needs allow_large=True")
    cat = enumerate_connected_graphs(n_max)
    report = Report()
    for entry in groups:
        group, invs = entry if isinstance(entry, tuple) else (entry, entry.central_involutions)
        for graph in cat.graphs:
            if graph.m == 0:
                continue
            for g in enumerate_switching_classes(graph, group):
                for s in invs:
                    report.instances += 1
                    rec = check_instance(g, s)
                    if rec is not None:
                        report.discrepancies.append(rec)
    return report


def spectral_predicates(g: GainGraph) -> dict[str, bool]:
    """The six spectral conditions for a signed graph on a line graph."""
    plus, minus = g.group.identity, 1 - g.group.identity
    neg = g.negated()
    return {
        "i": is_gain_line(g, plus).is_gain_line,
        "ii": forbidden_signed_subgraph(g, plus) is None,
        "iii": signed_spectrum(g).at_least(-2.0),
        "iv": is_gain_line(neg, minus).is_gain_line,
        "v": forbidden_signed_subgraph(neg, minus) is None,
        "vi": signed_spectrum(neg).at_most(2.0),
    }


def verify_spectral_theorem(n_max: int, group: FiniteGroup | None = None) -> Report:
    """Check six-way agreement over signed graphs on connected line graphs."""
    from .groups import t2

    if n_max > DEFAULT_VERTEX_LIMIT:
        raise DomainError(f"n_max > {DEFAULT_VERTEX_LIMIT} is refused")
    group = group or t2()
    report = Report()
    for graph in connected_line_graphs(n_max):
        if graph.m == 0:
            continue
        for g in enumerate_switching_classes(graph, group):
            report.instances += 1
            preds = spectral_predicates(g)
            if len(set(preds.values())) != 1:
                eig = signed_spectrum(g)
                report.discrepancies.append({
                    "instance": _serialize(g),
                    "predicates": preds,
                    "eigenvalues": list(eig.eigenvalues),
                })
    return report


# ---------------------------------------------------------------------------
# paths and cycles


def accepts_every_gain(graph: SimpleGraph, group: FiniteGroup, s: int) -> bool:
    """Whether every gain function on the graph is gain-line for ``s``."""
    return all(is_gain_line(g, s).is_gain_line for g in enumerate_switching_classes(graph, group))


# ---------------------------------------------------------------------------
# round trip


def random_connected_graph(rng: random.Random, n_max: int = 8, exclude_k3_line: bool = True) -> SimpleGraph:
    """A random connected graph on 3..n_max vertices.

    At least two edges are drawn so the line graph has an edge. With
    ``exclude_k3_line`` the two graphs whose line graph is K3 are skipped,
    since the root recovered from K3 is not unique.
    """
    from .catalog import CLAW

    k3 = SimpleGraph(3, ((0, 1), (0, 2), (1, 2)))
    while True:
        n = rng.randint(3, n_max)
        p = rng.uniform(0.2, 0.9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        rng.shuffle(edges)
        g = SimpleGraph(n, tuple(edges))
        if g.m < 2 or not g.is_connected():
            continue
        if exclude_k3_line and g.m == 3 and (are_isomorphic(g, k3) or are_isomorphic(g, CLAW)):
            continue
        return g


def random_gain_graph(rng: random.Random, group: FiniteGroup, n_max: int = 8) -> GainGraph:
    graph = random_connected_graph(rng, n_max)
    return GainGraph(graph, group, tuple(rng.randrange(group.order) for _ in graph.edges))


def _edge_induced_vertex_map(root: SimpleGraph, orig: SimpleGraph) -> tuple[int, ...] | None:
    """Vertex bijection sending root edge k onto original edge k, if one exists."""
    if root.n != orig.n or root.m != orig.m:
        return None
    phi = [None] * root.n
    inc = [[] for _ in range(root.n)]
    for k, (u, v) in enumerate(root.edges):
        inc[u].append(k)
        inc[v].append(k)
    for x in range(root.n):
        if len(inc[x]) >= 2:
            common = set(orig.edges[inc[x][0]])
            for k in inc[x][1:]:
                common &= set(orig.edges[k])
            if len(common) != 1:
                return None
            phi[x] = common.pop()
    for k, (u, v) in enumerate(root.edges):
        a, b = orig.edges[k]
        for x, y in ((u, v), (v, u)):
            if phi[x] is None and phi[y] is not None:
                phi[x] = b if phi[y] == a else a
        if phi[u] is None and phi[v] is None:
            phi[u], phi[v] = a, b
    if None in phi or len(set(phi)) != root.n:
        return None
    for k, (u, v) in enumerate(root.edges):
        if {phi[u], phi[v]} != set(orig.edges[k]):
            return None
    return tuple(phi)


@dataclass(frozen=True)
class RoundTrip:
    original: GainGraph
    root: GainGraph
    phi: tuple[int, ...]
    switching: tuple[int, ...]


def round_trip(g: GainGraph, s1: int, s: int) -> RoundTrip | None:
    """Line gains of ``g``, then its recovered root; None if the root is not
    switching isomorphic to ``g``."""
    lg = line_gain_direct(g, s1, s)
    verdict = is_gain_line(lg, s, s1)
    if not verdict.is_gain_line:
        return None
    root = verdict.witness.triple.gain_graph
    phi = _edge_induced_vertex_map(root.graph, g.graph)
    if phi is not None:
        pulled = {(u, v): g.gain(phi[u], phi[v]) for (u, v) in root.graph.edges}
        f = is_switching_equivalent(root, GainGraph.from_pairs(root.graph, g.group, pulled))
        if f is not None:
            return RoundTrip(g, root, phi, f)
    hit = is_switching_isomorphic(root, g)
    if hit is None:
        return None
    return RoundTrip(g, root, *hit)


def central_pairs(group: FiniteGroup) -> Iterable[tuple[int, int]]:
    invs = group.central_involutions
    return [(a, b) for a in invs for b in invs]
