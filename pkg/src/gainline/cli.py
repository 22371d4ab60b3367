"""Command-line entry point.

Exit codes: 0 success, 1 negative verdict under ``--strict`` or a failed
witness check, 2 input error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import DomainError, GainLineError, InternalInconsistency
from .groups import FiniteGroup, named_group, require_central_involution
from .io import (
    GainGraphFile,
    dumps,
    format_gain_graph,
    read_gain_graph,
    verdict_from_json,
    verdict_to_json,
)
from .line import line_gain_direct

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _involution(group: FiniteGroup, label: str | None, default: int | None) -> int:
    s = group.identity if label is None and default is None else (
        default if label is None else group.element(label)
    )
    require_central_involution(group, s)
    return s


def _load(path: str) -> GainGraphFile:
    f = read_gain_graph(path)
    g = f.gain_graph
    if g.graph.m == 0 or not g.graph.is_connected():
        raise DomainError("input must be a connected graph with at least one edge")
    return f


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_line(args) -> int:
    f = _load(args.input)
    group = f.group
    s1 = _involution(group, args.s1, None)
    s = _involution(group, args.s, f.s)
    lg = line_gain_direct(f.gain_graph, s1, s)
    _emit(format_gain_graph(lg, s), args.output)
    return EXIT_OK


def cmd_root(args) -> int:
    from .recognition import is_gain_line

    f = _load(args.input)
    group = f.group
    s = _involution(group, args.s, f.s)
    s1 = _involution(group, args.s1, None)
    v = is_gain_line(f.gain_graph, s, s1)
    if not v.is_gain_line:
        print("NO: input is not a gain-line graph", file=sys.stderr)
        return EXIT_NO
    _emit(format_gain_graph(v.witness.triple.gain_graph), args.output)
    return EXIT_OK


def _describe(v) -> str:
    from .recognition import ForbiddenWitness, RootWitness

    w = v.witness
    if isinstance(w, RootWitness):
        h = w.triple.phase
        lines = [
            "YES",
            f"root: {h.graph.n} vertices, {h.graph.m} edges",
            f"cells: {[list(c) for c in w.partition.cells]}",
            "phase:",
        ]
        lines += ["  " + " ".join(f"{x:>4}" for x in row) for row in h.labelled()]
        return "\n".join(lines) + "\n"
    if isinstance(w, ForbiddenWitness):
        return f"NO\nforbidden {w.pattern} on vertices {list(w.vertices)} (pattern map {list(w.mapping)})\n"
    return (
        f"NO\ntriangle condition {w.condition} fails: "
        f"triangles {[list(t) for t in w.triangles]} vertices {list(w.vertices)}\n"
    )


def cmd_recognize(args) -> int:
    from .recognition import is_gain_line, verify_witness

    f = _load(args.input)
    group = f.group
    s = _involution(group, args.s, f.s)
    if args.check_witness:
        obj = json.loads(Path(args.check_witness).read_text())
        v = verdict_from_json(obj, group)
        if v.s != s:
            raise DomainError("witness was produced for a different s")
        ok = verify_witness(f.gain_graph, v)
        print("witness OK" if ok else "witness FAILED")
        return EXIT_OK if ok else EXIT_NO
    v = is_gain_line(f.gain_graph, s)
    if args.json:
        print(dumps(verdict_to_json(f.gain_graph, v)))
    else:
        sys.stdout.write(_describe(v))
    if args.strict and not v.is_gain_line:
        return EXIT_NO
    return EXIT_OK


def cmd_spectrum(args) -> int:
    from .spectral import signed_spectrum

    f = _load(args.input)
    eig = signed_spectrum(f.gain_graph)
    print(" ".join(f"{x:.9f}" for x in eig.eigenvalues))
    print(f"lambda_min>=-2: {'YES' if eig.at_least(-2.0) else 'NO'}")
    print(f"lambda_max<=2: {'YES' if eig.at_most(2.0) else 'NO'}")
    return EXIT_OK


def split_groups(text: str) -> list[str]:
    """Split on commas outside parentheses: ``t2,cyclic(3)`` -> two specs."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return [p for p in parts if p]


def cmd_verify(args) -> int:
    from .harness import verify_main_theorem, verify_spectral_theorem

    if args.spectral:
        report = verify_spectral_theorem(args.n_max)
    else:
        groups = [named_group(spec) for spec in split_groups(args.groups)]
        report = verify_main_theorem(args.n_max, groups, allow_large=args.allow_large)
    report.write_jsonl(args.report)
    print(f"{report.instances} instances, {len(report.discrepancies)} discrepancies; report: {args.report}")
    return EXIT_OK if report.ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gainline", description="Gain-line graph recognition tools.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("line", help="write the line gain graph of a gain graph")
    q.add_argument("input")
    q.add_argument("--s1", help="central involution for the root gains (default identity)")
    q.add_argument("--s", help="central involution for the line gains (default: file, else identity)")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_line)

    q = sub.add_parser("root", help="write a root gain graph of a gain-line graph")
    q.add_argument("input")
    q.add_argument("--s1")
    q.add_argument("--s")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_root)

    q = sub.add_parser("recognize", help="decide gain-lineness and print a witness")
    q.add_argument("input")
    q.add_argument("--s")
    q.add_argument("--json", action="store_true")
    q.add_argument("--strict", action="store_true", help="exit 1 on a negative verdict")
    q.add_argument("--check-witness", metavar="JSON", help="re-verify a saved verdict instead")
    q.set_defaults(func=cmd_recognize)

    q = sub.add_parser("spectrum", help="eigenvalues of a signed graph")
    q.add_argument("input")
    q.set_defaults(func=cmd_spectrum)

    q = sub.add_parser("verify", help="run the exhaustive cross-checks")
    q.add_argument("--n-max", type=int, default=5)
    q.add_argument("--groups", default="t2")
    q.add_argument("--spectral", action="store_true")
    q.add_argument("--allow-large", action="store_true", help="permit 7-vertex runs")
    q.add_argument("--report", default="discrepancies.jsonl")
    q.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (GainLineError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
