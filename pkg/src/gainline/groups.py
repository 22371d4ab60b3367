"""Finite groups given by Cayley tables.

Elements are plain ``int`` indices into the table, so a product is two list
lookups. Hot loops elsewhere in the package read ``group.cayley`` and
``group.inv`` directly instead of going through :meth:`FiniteGroup.mul`.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .errors import DomainError, ParseError, StructuralError

# Full O(n^3) associativity check up to this order; random triples above it.
FULL_ASSOCIATIVITY_LIMIT = 64
ASSOCIATIVITY_SAMPLES = 20_000


@dataclass(frozen=True)
class FiniteGroup:
    """An immutable, validated finite group.

    Build instances with :meth:`from_table` or :func:`named_group`; the
    constructor trusts its arguments.
    """

    cayley: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    name: str = "group"
    labels: tuple[str, ...] = ()
    trusted: bool = False
    canonical_involution: int | None = None

    @property
    def order(self) -> int:
        return len(self.cayley)

    @classmethod
    def from_table(
        cls,
        table,
        name: str = "group",
        labels=None,
        canonical_involution: int | None = None,
        rng: random.Random | None = None,
    ) -> "FiniteGroup":
        cayley = tuple(tuple(int(x) for x in row) for row in table)
        n = len(cayley)
        if n == 0:
            raise StructuralError("empty Cayley table")
        full = tuple(range(n))
        for g, row in enumerate(cayley):
            if len(row) != n or tuple(sorted(row)) != full:
                raise StructuralError(f"row {g} is not a permutation of 0..{n - 1}")
        for h in range(n):
            if tuple(sorted(cayley[g][h] for g in range(n))) != full:
                raise StructuralError(f"column {h} is not a permutation of 0..{n - 1}")

        identity = next((e for e in range(n) if cayley[e] == full), None)
        if identity is None or any(cayley[g][identity] != g for g in range(n)):
            raise StructuralError("table has no two-sided identity")

        trusted = n > FULL_ASSOCIATIVITY_LIMIT
        if trusted:
            rng = rng or random.Random(0)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(ASSOCIATIVITY_SAMPLES)
            )
        else:
            triples = itertools.product(range(n), repeat=3)
        for a, b, c in triples:
            if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]:
                raise StructuralError(f"not associative at ({a}, {b}, {c})")

        inv = tuple(cayley[g].index(identity) for g in range(n))
        if labels is None:
            labels = tuple(str(g) for g in range(n))
        labels = tuple(labels)
        if len(labels) != n or len(set(labels)) != n:
            raise StructuralError("labels must be n distinct strings")
        if any(not lab or any(ch.isspace() for ch in lab) for lab in labels):
            raise StructuralError("labels must be non-empty and contain no whitespace")
        return cls(cayley, identity, inv, name, labels, trusted, canonical_involution)

    # -- arithmetic -------------------------------------------------------

    def _check(self, g: int) -> None:
        if not (isinstance(g, int) and 0 <= g < len(self.cayley)):
            raise StructuralError(f"{g!r} is not an element of {self.name}")

    def mul(self, g: int, h: int) -> int:
        self._check(g)
        self._check(h)
        return self.cayley[g][h]

    def inverse(self, g: int) -> int:
        self._check(g)
        return self.inv[g]

    def product(self, *elements: int) -> int:
        acc = self.identity
        for g in elements:
            self._check(g)
            acc = self.cayley[acc][g]
        return acc

    def conjugate(self, g: int, c: int) -> int:
        """Return ``c^-1 g c``."""
        tab = self.cayley
        return tab[tab[self.inv[c]][g]][c]

    # -- element properties ----------------------------------------------

    def is_central(self, g: int) -> bool:
        self._check(g)
        tab = self.cayley
        return all(tab[g][h] == tab[h][g] for h in range(self.order))

    def is_involution(self, g: int) -> bool:
        self._check(g)
        return self.cayley[g][g] == self.identity

    def is_central_involution(self, g: int) -> bool:
        return self.is_involution(g) and self.is_central(g)

    @cached_property
    def central_involutions(self) -> tuple[int, ...]:
        return tuple(g for g in range(self.order) if self.is_central_involution(g))

    @cached_property
    def is_abelian(self) -> bool:
        tab = self.cayley
        return all(
            tab[a][b] == tab[b][a] for a in range(self.order) for b in range(a + 1, self.order)
        )

    # -- labels -------------------------------------------------------------

    def label(self, g: int) -> str:
        self._check(g)
        return self.labels[g]

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: g for g, lab in enumerate(self.labels)}

    def element(self, label: str) -> int:
        """Map a user-facing label to its element index."""
        idx = self._label_index.get(label)
        if idx is None:
            idx = _ALIASES.get(self.name, {}).get(label)
        if idx is None:
            raise DomainError(f"unknown element label {label!r} for group {self.name}")
        return idx

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


_ALIASES = {
    "t2": {"1": 0, "+": 0, "-": 1},
}


def require_central_involution(group: FiniteGroup, s: int) -> None:
    """Raise DomainError naming the failed property if ``s`` is unusable."""
    group._check(s)
    if not group.is_involution(s):
        raise DomainError(f"{group.label(s)} is not an involution in {group.name}")
    if not group.is_central(s):
        raise DomainError(f"{group.label(s)} is not central in {group.name}")


# ---------------------------------------------------------------------------
# Named groups


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise DomainError("cyclic(n) needs n >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup.from_table(table, name=f"cyclic({n})")


def t2() -> FiniteGroup:
    """The sign group {+1, -1}; -1 is flagged as the canonical involution."""
    return FiniteGroup.from_table(
        [[0, 1], [1, 0]], name="t2", labels=("+1", "-1"), canonical_involution=1
    )


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n. Index k is r^k, index n+k is r^k s."""
    if n < 1:
        raise DomainError("dihedral(n) needs n >= 1")

    def mul(x, y):
        a, fx = divmod(x, n)[1], x >= n
        b, fy = divmod(y, n)[1], y >= n
        rot = (a - b) % n if fx else (a + b) % n
        return rot + n * (fx != fy)

    size = 2 * n
    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    labels = [f"r{k}" for k in range(n)] + [f"s{k}" for k in range(n)]
    return FiniteGroup.from_table(table, name=f"dihedral({n})", labels=labels)


def quaternion8() -> FiniteGroup:
    basis = {
        "1": (1, 0, 0, 0),
        "-1": (-1, 0, 0, 0),
        "i": (0, 1, 0, 0),
        "-i": (0, -1, 0, 0),
        "j": (0, 0, 1, 0),
        "-j": (0, 0, -1, 0),
        "k": (0, 0, 0, 1),
        "-k": (0, 0, 0, -1),
    }
    labels = list(basis)
    vecs = [basis[lab] for lab in labels]

    def qmul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    table = [[vecs.index(qmul(p, q)) for q in vecs] for p in vecs]
    return FiniteGroup.from_table(table, name="quaternion8", labels=labels)


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = perm[x]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def symmetric(n: int) -> FiniteGroup:
    """S_n for n <= 4, composing right to left: (p*q)(x) = p(q(x))."""
    if not 1 <= n <= 4:
        raise DomainError("symmetric(n) is offered for 1 <= n <= 4")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    labels = [_cycle_label(p) for p in perms]
    return FiniteGroup.from_table(table, name=f"symmetric({n})", labels=labels)


def read_table_file(path: str | Path) -> FiniteGroup:
    """Parse the plain-text table format (``order n``, n rows, optional ``labels``)."""
    path = Path(path)
    lines = [
        (no, line.split("#", 1)[0].split())
        for no, line in enumerate(path.read_text().splitlines(), start=1)
    ]
    lines = [(no, toks) for no, toks in lines if toks]
    if not lines or lines[0][1][0] != "order" or len(lines[0][1]) != 2:
        raise ParseError("expected 'order n' as first line", lines[0][0] if lines else 1)
    try:
        n = int(lines[0][1][1])
    except ValueError:
        raise ParseError("order must be an integer", lines[0][0]) from None
    rows, labels = [], None
    for no, toks in lines[1:]:
        if toks[0] == "labels":
            labels = toks[1:]
            continue
        try:
            rows.append([int(t) for t in toks])
        except ValueError:
            raise ParseError("table entries must be integers", no) from None
    if len(rows) != n:
        raise ParseError(f"expected {n} table rows, found {len(rows)}")
    try:
        return FiniteGroup.from_table(rows, name=str(path), labels=labels)
    except StructuralError as exc:
        raise ParseError(f"invalid table: {exc}") from None


def write_table_file(group: FiniteGroup, path: str | Path) -> None:
    out = [f"order {group.order}"]
    out += [" ".join(str(x) for x in row) for row in group.cayley]
    out.append("labels " + " ".join(group.labels))
    Path(path).write_text("\n".join(out) + "\n")


_SPEC = re.compile(r"^\s*([a-z0-9]+)\s*(?:\(\s*(\d+)\s*\))?\s*$")


def named_group(spec: str) -> FiniteGroup:
    """Instantiate a group from a short spec string or a table file path.

    Recognised specs: ``t2``, ``cyclic(n)``, ``dihedral(n)``, ``quaternion8``,
    ``symmetric(n)`` with n <= 4. Anything else is treated as a path.
    """
    m = _SPEC.match(spec)
    if m:
        kind, arg = m.group(1), m.group(2)
        if kind == "t2" and arg is None:
            return t2()
        if kind == "quaternion8" and arg is None:
            return quaternion8()
        if arg is not None:
            builders = {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric}
            if kind in builders:
                return builders[kind](int(arg))
    if Path(spec).is_file():
        return read_table_file(spec)
    raise DomainError(f"unknown group spec {spec!r}")
