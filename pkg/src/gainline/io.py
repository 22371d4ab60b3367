"""Text format for gain graphs and JSON encoding of verdicts.

Gain graph files look like::

    # comments start with '#'
    group cyclic(6)
    s 3
    vertices 4
    edge 0 1 2
    edge 1 2 0

Each ``edge u v g`` line gives the gain read from ``u`` to ``v`` as a group
element label. The ``s`` line is optional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import DomainError, GainLineError, ParseError, StructuralError
from .gain_graph import GainGraph
from .graphs import SimpleGraph
from .groups import FiniteGroup, named_group
from .line import GPhase, OrientedGainTriple
from .recognition import (
    ForbiddenWitness,
    KrauszPartition,
    RootWitness,
    TriangleWitness,
    Verdict,
)


@dataclass(frozen=True)
class GainGraphFile:
    gain_graph: GainGraph
    s: int | None = None

    @property
    def group(self) -> FiniteGroup:
        return self.gain_graph.group


def _element(group: FiniteGroup, label: str, lineno: int) -> int:
    try:
        return group.element(label)
    except DomainError as exc:
        raise ParseError(str(exc), lineno) from None


def parse_gain_graph(text: str) -> GainGraphFile:
    group = s = n = None
    pairs = {}
    order = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        key, args = toks[0], toks[1:]
        if key == "group":
            if group is not None or len(args) != 1:
                raise ParseError("expected a single 'group <spec>' line", lineno)
            try:
                group = named_group(args[0])
            except GainLineError as exc:
                raise ParseError(str(exc), lineno) from None
        elif key == "s":
            if group is None or len(args) != 1 or s is not None:
                raise ParseError("'s <label>' must follow the group line once", lineno)
            s = _element(group, args[0], lineno)
        elif key == "vertices":
            if n is not None or len(args) != 1 or not args[0].isdigit():
                raise ParseError("expected 'vertices <n>'", lineno)
            n = int(args[0])
        elif key == "edge":
            if group is None or n is None:
                raise ParseError("edge lines must follow the group and vertices lines", lineno)
            if len(args) != 3:
                raise ParseError("expected 'edge <u> <v> <gain>'", lineno)
            try:
                u, v = int(args[0]), int(args[1])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno) from None
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ParseError(f"bad edge ({u}, {v}) for {n} vertices", lineno)
            if (u, v) in pairs or (v, u) in pairs:
                raise ParseError(f"duplicate edge ({u}, {v})", lineno)
            pairs[(u, v)] = _element(group, args[2], lineno)
            order.append((u, v))
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    if group is None or n is None:
        raise ParseError("missing 'group' or 'vertices' line")
    graph = SimpleGraph(n, tuple(order))
    return GainGraphFile(GainGraph.from_pairs(graph, group, pairs), s)


def read_gain_graph(path: str | Path) -> GainGraphFile:
    return parse_gain_graph(Path(path).read_text())


def format_gain_graph(g: GainGraph, s: int | None = None) -> str:
    lab = g.group.labels
    out = [f"group {g.group.name}"]
    if s is not None:
        out.append(f"s {lab[s]}")
    out.append(f"vertices {g.graph.n}")
    out += [f"edge {u} {v} {lab[x]}" for (u, v), x in zip(g.graph.edges, g.gains)]
    return "\n".join(out) + "\n"


def write_gain_graph(path: str | Path, g: GainGraph, s: int | None = None) -> None:
    Path(path).write_text(format_gain_graph(g, s))


# ---------------------------------------------------------------------------
# JSON


def gain_graph_to_json(g: GainGraph) -> dict:
    lab = g.group.labels
    return {
        "vertices": g.graph.n,
        "edges": [[u, v, lab[x]] for (u, v), x in zip(g.graph.edges, g.gains)],
    }


def gain_graph_from_json(obj: dict, group: FiniteGroup) -> GainGraph:
    graph = SimpleGraph(obj["vertices"], tuple((u, v) for u, v, _ in obj["edges"]))
    pairs = {(u, v): group.element(x) for u, v, x in obj["edges"]}
    return GainGraph.from_pairs(graph, group, pairs)


def verdict_to_json(g: GainGraph, v: Verdict) -> dict:
    lab = g.group.labels
    w = v.witness
    if isinstance(w, RootWitness):
        h = w.triple.phase
        wit = {
            "kind": "root",
            "root": gain_graph_to_json(w.triple.gain_graph),
            "s1": lab[w.triple.s1],
            "phase": [[None if x is None else lab[x] for x in row] for row in h.entries],
            "partition": {
                "cells": [list(c) for c in w.partition.cells],
                "switchers": [[lab[x] for x in f] for f in w.partition.switchers],
            },
        }
    elif isinstance(w, ForbiddenWitness):
        wit = {
            "kind": "forbidden",
            "vertices": list(w.vertices),
            "pattern": w.pattern,
            "mapping": list(w.mapping),
        }
    else:
        wit = {
            "kind": "triangle",
            "condition": w.condition,
            "triangles": [list(t) for t in w.triangles],
            "vertices": list(w.vertices),
        }
    return {
        "group": g.group.name,
        "s": lab[v.s],
        "is_gain_line": v.is_gain_line,
        "input": gain_graph_to_json(g),
        "witness": wit,
    }


def verdict_from_json(obj: dict, group: FiniteGroup) -> Verdict:
    """Rebuild a verdict; raises StructuralError on malformed witnesses."""
    try:
        s = group.element(obj["s"])
        w = obj["witness"]
        kind = w["kind"]
        if kind == "root":
            root = gain_graph_from_json(w["root"], group)
            rows = tuple(
                tuple(None if x is None else group.element(x) for x in row) for row in w["phase"]
            )
            triple = OrientedGainTriple.from_phase(GPhase(root.graph, group, rows), group.element(w["s1"]))
            part = KrauszPartition(
                tuple(tuple(c) for c in w["partition"]["cells"]),
                tuple(tuple(group.element(x) for x in f) for f in w["partition"]["switchers"]),
            )
            wit = RootWitness(triple, part)
        elif kind == "forbidden":
            wit = ForbiddenWitness(tuple(w["vertices"]), w["pattern"], tuple(w["mapping"]))
        elif kind == "triangle":
            wit = TriangleWitness(
                w["condition"], tuple(tuple(t) for t in w["triangles"]), tuple(w["vertices"])
            )
        else:
            raise StructuralError(f"unknown witness kind {kind!r}")
        return Verdict(bool(obj["is_gain_line"]), wit, s)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GainLineError):
            raise
        raise StructuralError(f"malformed verdict JSON: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)
