"""Finite groups as validated Cayley tables with a fixed element order.

Element 0 is always the identity. Indices are 0-based in memory; the
Cayley table text format uses 1-based indices::

    n=4
    e a b c
    1 2 3 4
    2 1 4 3
    3 4 1 2
    4 3 2 1
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .errors import OrderingError, ParameterError, StructureError

MAX_ORDER = 64


@dataclass(frozen=True)
class GroupDescriptor:
    """A group of order n with ``table[i][j]`` = index of g_i·g_j."""

    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    family: str = "custom"
    param: int = 0
    inv: tuple[int, ...] = dc_field(init=False, compare=False, repr=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "names", tuple(str(x) for x in self.names))
        n = len(table)
        if not 1 <= n <= MAX_ORDER:
            raise ParameterError(f"group order {n} outside 1..{MAX_ORDER}")
        if len(self.names) != n:
            raise StructureError(f"{len(self.names)} names for a group of order {n}")
        full = set(range(n))
        for i, row in enumerate(table):
            if len(row) != n or set(row) != full:
                raise StructureError(f"row {i + 1} is not a permutation of the elements")
        for j in range(n):
            if {table[i][j] for i in range(n)} != full:
                raise StructureError(f"column {j + 1} is not a permutation of the elements")
        if table[0] != tuple(range(n)) or any(table[i][0] != i for i in range(n)):
            raise OrderingError("the first element must be the identity")
        for a in range(n):
            ta = table[a]
            for b in range(n):
                ab = ta[b]
                tab, tb = table[ab], table[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise StructureError(
                            f"associativity fails for ({self.names[a]}, {self.names[b]}, {self.names[c]})")
        object.__setattr__(self, "inv", tuple(table[i].index(0) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.table)

    @property
    def tag(self) -> str:
        return "custom" if self.family == "custom" else f"{self.family}({self.param})"

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    @property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.n) for j in range(i))

    @property
    def is_cyclic(self) -> bool:
        n = self.n
        for g in range(n):
            x, k = g, 1
            while x != 0:
                x = self.table[x][g]
                k += 1
            if k == n:
                return True
        return False

    def to_cayley_text(self) -> str:
        lines = [f"n={self.n}", " ".join(self.names)]
        lines += [" ".join(str(x + 1) for x in row) for row in self.table]
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.tag


def cyclic(k: int) -> GroupDescriptor:
    """C_k with elements 1, g, ..., g^(k-1)."""
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"cyclic group order must be >= 1, got {k}")
    if k > MAX_ORDER:
        raise ParameterError(f"group order {k} exceeds {MAX_ORDER}")
    names = ["1"] + ["g" if i == 1 else f"g^{i}" for i in range(1, k)]
    table = [[(i + j) % k for j in range(k)] for i in range(k)]
    return GroupDescriptor(tuple(names), table, "cyclic", k)


def dihedral(k: int) -> GroupDescriptor:
    """D_k of order 2k, ordered 1, r, ..., r^(k-1), s, sr, ..., sr^(k-1)."""
    if not isinstance(k, int) or k < 3:
        raise ParameterError(f"dihedral group needs k >= 3, got {k}")
    if 2 * k > MAX_ORDER:
        raise ParameterError(f"group order {2 * k} exceeds {MAX_ORDER}")

    def rpow(i):
        return "1" if i == 0 else ("r" if i == 1 else f"r^{i}")

    names = [rpow(i) for i in range(k)] + ["s" if i == 0 else "s" + rpow(i) for i in range(k)]
    # index i < k is r^i, index k+i is s r^i; s r^a = r^-a s
    table = []
    for x in range(2 * k):
        sx, a = divmod(x, k)
        row = []
        for y in range(2 * k):
            sy, b = divmod(y, k)
            exp = (b - a) % k if sy else (a + b) % k
            row.append(((sx ^ sy) * k) + exp)
        table.append(row)
    return GroupDescriptor(tuple(names), table, "dihedral", k)


def from_cayley_table(text: str) -> GroupDescriptor:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise StructureError("first line must be n=<int>")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise StructureError("first line must be n=<int>") from None
    if not 1 <= n <= MAX_ORDER:
        raise ParameterError(f"group order {n} outside 1..{MAX_ORDER}")
    if len(lines) != n + 2:
        raise StructureError(f"expected {n + 2} non-empty lines, got {len(lines)}")
    names = lines[1].split()
    try:
        rows = [[int(x) - 1 for x in ln.split()] for ln in lines[2:]]
    except ValueError:
        raise StructureError("table entries must be integers") from None
    if any(x < 0 or x >= n for row in rows for x in row):
        raise StructureError(f"table entries must lie in 1..{n}")
    return GroupDescriptor(tuple(names), rows, "custom", 0)


def parse_group(spec: str) -> GroupDescriptor:
    """Resolve ``cyclic:<k>``, ``dihedral:<k>`` or ``file:<path>``."""
    kind, _, arg = spec.partition(":")
    if kind == "file":
        return from_cayley_table(Path(arg).read_text())
    if kind in ("cyclic", "dihedral"):
        try:
            k = int(arg)
        except ValueError:
            raise ParameterError(f"bad group spec {spec!r}") from None
        return cyclic(k) if kind == "cyclic" else dihedral(k)
    raise ParameterError(f"unknown group spec {spec!r}")
