"""Spectra of signed graphs and the eigenvalue -2 test for signed line graphs.

A signed graph is a gain graph over the two-element group; the identity
element reads as ``+1`` and the other element as ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import catalog
from .eigen import jacobi_eigenvalues
from .errors import DomainError, InternalInconsistency
from .gain_graph import GainGraph, is_switching_isomorphic, vertex_induced
from .graphs import SimpleGraph, is_cycle_graph, is_path_graph
from .recognition import ForbiddenWitness, is_line_graph_classical

TOLERANCE = 1e-7


def _require_signed(g: GainGraph) -> None:
    if g.group.order != 2:
        raise DomainError(f"spectra are offered for signed graphs only, not {g.group.name}")


def sign_of(g: GainGraph, element: int) -> int:
    return 1 if element == g.group.identity else -1


@dataclass(frozen=True)
class SignedAdjacency:
    n: int
    entries: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]
    tolerance: float = TOLERANCE

    @property
    def lambda_min(self) -> float:
        return self.eigenvalues[0]

    @property
    def lambda_max(self) -> float:
        return self.eigenvalues[-1]

    @property
    def radius(self) -> float:
        return max(abs(self.lambda_min), abs(self.lambda_max))

    def at_least(self, bound: float) -> bool:
        return self.lambda_min >= bound - self.tolerance

    def at_most(self, bound: float) -> bool:
        return self.lambda_max <= bound + self.tolerance


def signed_adjacency(g: GainGraph) -> SignedAdjacency:
    _require_signed(g)
    n = g.graph.n
    rows = [[0] * n for _ in range(n)]
    for (u, v), x in zip(g.graph.edges, g.gains):
        rows[u][v] = rows[v][u] = sign_of(g, x)
    return SignedAdjacency(n, tuple(tuple(r) for r in rows))


def adjacency(graph: SimpleGraph) -> SignedAdjacency:
    rows = [[0] * graph.n for _ in range(graph.n)]
    for u, v in graph.edges:
        rows[u][v] = rows[v][u] = 1
    return SignedAdjacency(graph.n, tuple(tuple(r) for r in rows))


def spectrum(a: SignedAdjacency, tolerance: float = TOLERANCE) -> Spectrum:
    return Spectrum(tuple(jacobi_eigenvalues(a.entries)), tolerance)


def signed_spectrum(g: GainGraph) -> Spectrum:
    return spectrum(signed_adjacency(g))


def _s_sign(g: GainGraph, s: int) -> int:
    if s not in (0, 1):
        raise DomainError("s must be an element of the two-element group")
    return sign_of(g, s)


def is_signed_line_spectral(g: GainGraph, s: int) -> bool:
    """``lambda_min >= -2`` for ``s = +1``, ``lambda_max <= 2`` for ``s = -1``.

    The underlying graph must be a line graph.
    """
    _require_signed(g)
    sign = _s_sign(g, s)
    if is_line_graph_classical(g.graph) is None:
        raise DomainError("underlying graph is not a line graph")
    eig = signed_spectrum(g)
    return eig.at_least(-2.0) if sign == 1 else eig.at_most(2.0)


def forbidden_signed_subgraph(g: GainGraph, s: int) -> ForbiddenWitness | None:
    """An induced 4-vertex copy of one of the four forbidden signed patterns, or None."""
    _require_signed(g)
    group = g.group
    other = 1 - group.identity
    pats = {
        name: GainGraph(p.graph, group, tuple(group.identity if x == 0 else other for x in p.gains))
        for name, p in catalog.signed_forbidden(_s_sign(g, s) == -1).items()
    }
    for verts in combinations(range(g.graph.n), 4):
        sub, host = vertex_induced(g, verts)
        for name, pat in pats.items():
            if pat.graph.m != sub.graph.m:
                continue
            hit = is_switching_isomorphic(pat, sub)
            if hit is not None:
                phi, _ = hit
                return ForbiddenWitness(host, name, tuple(host[phi[i]] for i in range(4)))
    return None


def classify_by_spectral_radius(graph: SimpleGraph) -> str:
    """``cycle`` or ``path`` when the spectral radius is at most 2, else ``other``."""
    if is_line_graph_classical(graph) is None:
        raise DomainError("graph is not a line graph")
    eig = spectrum(adjacency(graph))
    if not eig.at_most(2.0):
        return "other"
    if is_cycle_graph(graph):
        return "cycle"
    if is_path_graph(graph):
        return "path"
    raise InternalInconsistency("spectral radius at most 2 on a line graph that is no path or cycle")
