"""A signed octahedron with least eigenvalue exactly -2 that is not a signed
line graph for s = +1.

The octahedron is the line graph of K4. Its eight faces split into two
colour classes of four; any clique partition must use all faces of one
class. Make one face of each class negative, the two faces being
antipodal, and every other face positive. Then:

* every induced paw, K4 and diamond is harmless, so the claw, triangle and
  forbidden-subgraph conditions all pass;
* no clique partition has all cells balanced, and a brute-force search over
  every signature of K4 finds no root;
* the spectrum is {-2, -2, 1 - sqrt 3, 1 - sqrt 3, 1 + sqrt 3, 1 + sqrt 3}.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from gainline.catalog import F3, K4
from gainline.gain_graph import GainGraph, is_switching_isomorphic, triangle_gain
from gainline.groups import t2
from gainline.harness import enumerate_switching_classes, spectral_predicates
from gainline.line import line_gain_direct
from gainline.recognition import (
    check_small_subgraphs,
    check_triangle_conditions,
    check_Y_free,
    is_gain_line,
    krausz_partition,
    root_search,
)
from gainline.spectral import forbidden_signed_subgraph, signed_adjacency, signed_spectrum


def counterexample() -> GainGraph:
    """Negative faces (0, 2, 4) and its antipode (1, 3, 5); all others positive."""
    group = t2()
    graph = F3.graph
    gray, white = F3.colorings
    for bits in product((0, 1), repeat=graph.m):
        g = GainGraph(graph, group, bits)
        signs = [triangle_gain(g, t) for t in gray + white]
        if signs == [1, 0, 0, 0, 0, 0, 1, 0]:
            return g
    raise AssertionError("no signature with the requested face signs")


def matching_line_signatures(g: GainGraph) -> int:
    """How many signature classes of K4 have line gains switching isomorphic to ``g``."""
    group = t2()
    hits = 0
    for root in enumerate_switching_classes(K4, group):
        for s1 in (0, 1):
            lg = line_gain_direct(root, s1, group.identity)
            hits += is_switching_isomorphic(lg, g) is not None
    return hits


def main() -> None:
    g = counterexample()
    s = 0  # +1
    print("signature:", [g.group.labels[x] for x in g.gains], "on edges", list(g.graph.edges))
    print("triangle conditions pass:", check_triangle_conditions(g, s).ok)
    print("no forbidden gain subgraph:", check_Y_free(g, s) is None)
    print("no forbidden signed subgraph:", forbidden_signed_subgraph(g, s) is None)
    print("clique partition exists:", krausz_partition(g, s) is not None)
    print("root found by brute force:", root_search(g, s) is not None)
    print("small subgraphs all accepted:", check_small_subgraphs(g, s))
    print("verdict:", is_gain_line(g, s).witness)
    spec = signed_spectrum(g)
    print("spectrum:", " ".join(f"{x:.9f}" for x in spec.eigenvalues))
    print("numpy spectrum:", np.round(np.linalg.eigvalsh(np.array(signed_adjacency(g).entries)), 9))
    print("six spectral conditions:", spectral_predicates(g))
    print("K4 signature classes whose line signature matches:", matching_line_signatures(g))


if __name__ == "__main__":
    main()
