"""Rebuild the eight-vertex worked example: partition, root, and phase.

Vertex order is v1..v6, u1, u2 (indices 0..7). Run with a group spec and
four element labels for a, b, c, d:

    python scripts/worked_example.py "symmetric(3)" "(12)" "(123)" "(13)" "(23)"
"""

from __future__ import annotations

import argparse

from gainline.gain_graph import GainGraph
from gainline.graphs import SimpleGraph
from gainline.groups import FiniteGroup, named_group
from gainline.line import psi_L_of_phase
from gainline.recognition import KrauszPartition, krausz_partition, root_gain_graph

V1, V2, V3, V4, V5, V6, U1, U2 = range(8)
NAMES = ["v1", "v2", "v3", "v4", "v5", "v6", "u1", "u2"]

PLAIN_EDGES = [(V1, V5), (V5, V6), (V3, V4), (V3, U2), (V3, V6), (V4, U2), (V4, V6), (U2, V6)]


def example_graph(group: FiniteGroup, a: int, b: int, c: int, d: int) -> GainGraph:
    e = group.identity
    pairs = {
        (U1, V1): a,
        (V1, V2): b,
        (U1, V2): group.mul(a, b),
        (V1, V4): c,
        (V5, V4): c,
        (V2, V3): d,
    }
    pairs.update({p: e for p in PLAIN_EDGES})
    graph = SimpleGraph(8, tuple(pairs))
    return GainGraph.from_pairs(graph, group, pairs)


EXAMPLE_CELLS = (
    (V1, V2, U1),
    (V1, V4, V5),
    (V5, V6),
    (V3, V4, V6, U2),
    (V2, V3),
)


def example_partition(group: FiniteGroup, a: int, b: int, c: int, d: int) -> KrauszPartition:
    """The five cells with their hand-chosen switching functions."""
    e, inv = group.identity, group.inv
    return KrauszPartition(
        EXAMPLE_CELLS,
        (
            (e, inv[b], a),
            (e, inv[c], e),
            (e, e),
            (e, e, e, e),
            (d, e),
        ),
    )


def expected_phase(group: FiniteGroup, a: int, b: int, c: int, d: int):
    """The 7 x 8 phase, rows x1..x5, w1, w2; ``None`` marks a zero entry."""
    e, inv, Z = group.identity, group.inv, None
    return (
        (e, b, Z, Z, Z, Z, inv[a], Z),
        (e, Z, Z, c, e, Z, Z, Z),
        (Z, Z, Z, Z, e, e, Z, Z),
        (Z, Z, e, e, Z, e, Z, e),
        (Z, inv[d], e, Z, Z, Z, Z, Z),
        (Z, Z, Z, Z, Z, Z, e, Z),
        (Z, Z, Z, Z, Z, Z, Z, e),
    )


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("group")
    ap.add_argument("labels", nargs=4, metavar="LABEL")
    args = ap.parse_args(argv)
    group = named_group(args.group)
    a, b, c, d = (group.element(x) for x in args.labels)
    g = example_graph(group, a, b, c, d)
    s = group.identity

    found = krausz_partition(g, s)
    print("cells found:", [[NAMES[v] for v in cell] for cell in found.cells])

    triple = root_gain_graph(g, example_partition(group, a, b, c, d), s)
    h = triple.phase
    print(f"root: {h.graph.n} vertices, edges {list(h.graph.edges)}")
    print("phase (rows x1..x5, w1, w2; columns", " ".join(NAMES) + "):")
    for row in h.labelled():
        print("  " + " ".join(f"{x:>6}" for x in row))
    print("matches the expected matrix:", h.entries == expected_phase(group, a, b, c, d))
    print("line gains of the phase equal the input:", psi_L_of_phase(h, s).same_gains(g))


if __name__ == "__main__":
    main()
