import random

import pytest
from hypothesis import strategies as st

from gainline.gain_graph import GainGraph
from gainline.graphs import SimpleGraph
from gainline.groups import cyclic, dihedral, quaternion8, symmetric, t2

GROUPS = {
    "t2": t2(),
    "cyclic(6)": cyclic(6),
    "symmetric(3)": symmetric(3),
    "quaternion8": quaternion8(),
    "dihedral(4)": dihedral(4),
}


@pytest.fixture(scope="session")
def groups():
    return GROUPS


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, mask) if keep]
    if connected:
        # thread a random spanning path so the result is connected
        perm = draw(st.permutations(range(n)))
        for a, b in zip(perm, perm[1:]):
            e = (min(a, b), max(a, b))
            if e not in edges:
                edges.append(e)
    order = draw(st.permutations(edges)) if edges else []
    return SimpleGraph(n, tuple(order))


@st.composite
def gain_graphs(draw, group_names=("t2", "cyclic(6)", "symmetric(3)"), min_n=1, max_n=7, connected=False):
    group = GROUPS[draw(st.sampled_from(group_names))]
    graph = draw(graphs(min_n, max_n, connected))
    gains = draw(st.lists(st.integers(0, group.order - 1), min_size=graph.m, max_size=graph.m))
    return GainGraph(graph, group, tuple(gains))


def random_switching(rng: random.Random, g: GainGraph):
    return tuple(rng.randrange(g.group.order) for _ in range(g.graph.n))


# -- acceptance criterion reporting -------------------------------------------

CRITERIA: dict[int, tuple[str, bool, str]] = {}


class criterion:
    """Record one acceptance criterion as PASS or FAIL with a detail line."""

    def __init__(self, number: int, title: str):
        self.number, self.title, self.detail = number, title, ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        ok = exc_type is None
        if not ok and not self.detail:
            self.detail = f"{exc_type.__name__}: {exc}"
        CRITERIA[self.number] = (self.title, ok, self.detail)
        print(self.line())
        return False

    def line(self) -> str:
        title, ok, detail = CRITERIA[self.number]
        return f"criterion {self.number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        title, ok, detail = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n} [{'PASS' if ok else 'FAIL'}] {title}: {detail}")
