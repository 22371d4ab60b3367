"""Named small graphs: the nine minimal non-line graphs, the exceptional line
graphs with two root shapes, and the four-pattern signed catalogs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gain_graph import GainGraph
from .graphs import SimpleGraph, complete_graph, star_graph
from .groups import t2


def _g(n, edges):
    return SimpleGraph(n, tuple(edges))


# paw: triangle 0-1-2 with 3 hanging off 2
PAW = _g(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
# diamond: triangles {0,1,3} and {0,2,3} sharing edge 0-3
DIAMOND = _g(4, [(0, 3), (0, 1), (1, 3), (0, 2), (2, 3)])
K4 = complete_graph(4)
CLAW = star_graph(3)
K14 = star_graph(4)
# spider with legs 1, 1, 2; its line graph is the paw
TP = _g(5, [(0, 1), (0, 2), (0, 3), (3, 4)])

# -- the nine minimal non-line graphs ----------------------------------------

G1 = CLAW
G2 = _g(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (4, 2), (4, 3)])
G3 = _g(5, [e for e in complete_graph(5).edges if e != (3, 4)])
G4 = _g(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (4, 2), (5, 3)])
G5 = _g(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (5, 1), (0, 5), (5, 2), (4, 3)])
G6 = _g(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (4, 1), (0, 4), (4, 2), (5, 1), (0, 5), (5, 3)])
G7 = _g(6, list(G4.edges) + [(4, 5)])
# left column 0,1,2 and right column 3,4,5
G8 = _g(6, [(0, 3), (1, 4), (2, 5), (2, 1), (0, 1), (5, 4), (3, 4), (1, 3), (2, 4)])
# wheel: hub 5 on the 5-cycle 0..4
G9 = _g(6, [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)])

BEINEKE = {
    "G1": G1, "G2": G2, "G3": G3, "G4": G4, "G5": G5,
    "G6": G6, "G7": G7, "G8": G8, "G9": G9,
}

# -- line graphs whose triangle cover needs a 2-colouring ---------------------


@dataclass(frozen=True)
class Exceptional:
    name: str
    graph: SimpleGraph
    colorings: tuple[tuple[tuple[int, int, int], ...], tuple[tuple[int, int, int], ...]]
    root: SimpleGraph


F1 = Exceptional(
    "F1",
    DIAMOND,
    (((0, 2, 3),), ((0, 1, 3),)),
    PAW,
)
# wheel with hub 4 on the 4-cycle 0-1-3-2
F2 = Exceptional(
    "F2",
    _g(5, [(0, 1), (1, 3), (0, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
    (((0, 1, 4), (2, 3, 4)), ((0, 2, 4), (1, 3, 4))),
    _g(4, [e for e in complete_graph(4).edges if e != (2, 3)]),
)
# octahedron; antipodal pairs 0-3, 1-4, 2-5
F3 = Exceptional(
    "F3",
    _g(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if v - u != 3]),
    (
        ((0, 2, 4), (0, 1, 5), (3, 4, 5), (1, 2, 3)),
        ((0, 1, 2), (0, 4, 5), (1, 3, 5), (2, 3, 4)),
    ),
    K4,
)
EXCEPTIONAL = (F1, F2, F3)

# -- signed forbidden patterns -------------------------------------------------


def _signed(graph: SimpleGraph, negative: set[tuple[int, int]] | None = None, all_neg=False):
    group = t2()
    gains = tuple(1 if all_neg or (negative and e in negative) else 0 for e in graph.edges)
    return GainGraph(graph, group, gains)


@lru_cache(maxsize=None)
def signed_forbidden(s_negative: bool = False) -> dict[str, GainGraph]:
    """The four signed patterns for ``s = +1``, or their negations for ``s = -1``."""
    pats = {
        "(P,-1)": _signed(PAW, all_neg=True),
        "(K4,-1)": _signed(K4, all_neg=True),
        "(K4,sigma1)": _signed(K4, {(0, 1)}),
        "(D,-1)": _signed(DIAMOND, all_neg=True),
    }
    if not s_negative:
        return pats
    # the negation of sigma1 is switching isomorphic to sigma1, so it keeps its name
    names = {"(P,-1)": "(P,+1)", "(K4,-1)": "(K4,+1)", "(K4,sigma1)": "(K4,sigma1)", "(D,-1)": "(D,+1)"}
    return {names[name]: g.negated() for name, g in pats.items()}
