"""The group algebra F_{q^m}G in coordinates.

An :class:`AlgebraElement` stores the coefficient vector (u_1, ..., u_n),
coordinate i belonging to group element g_i of the group's fixed order.
The vector and the formal sum are the same object, so no conversion
functions are needed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import _backend
from .errors import BadLength, NoSolution, NotInvertible, ParameterError
from .field import FFElem, FieldParams, decode_coeffs
from .group import GroupDescriptor
from .linalg import Matrix, rank, solve_left, vec_mat


@dataclass(frozen=True)
class AlgebraElement:
    field: FieldParams
    group: GroupDescriptor
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) != self.group.n:
            raise ParameterError(f"{len(coords)} coordinates for a group of order {self.group.n}")
        for c in coords:
            self.field.check(c)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, field, group):
        return cls(field, group, (0,) * group.n)

    @classmethod
    def one(cls, field, group):
        return cls.basis(field, group, 0)

    @classmethod
    def basis(cls, field, group, i):
        """The group element g_i as an algebra element (0-based i)."""
        coords = [0] * group.n
        coords[i] = 1
        return cls(field, group, tuple(coords))

    @classmethod
    def random(cls, field, group, rng: random.Random):
        return cls(field, group, tuple(field.random(rng) for _ in range(group.n)))

    def coord(self, i: int) -> FFElem:
        return FFElem(self.field, self.coords[i])

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"cannot combine AlgebraElement with {type(other).__name__}")
        if other.field != self.field or other.group != self.group:
            raise ParameterError("operands belong to different group algebras")

    def __add__(self, other):
        return ga_add(self, other)

    def __sub__(self, other):
        self._check(other)
        sub = self.field.sub
        return AlgebraElement(self.field, self.group, tuple(sub(x, y) for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElement(self.field, self.group, tuple(self.field.neg(x) for x in self.coords))

    def __mul__(self, other):
        return ga_mul(self, other)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_bytes(self) -> bytes:
        """n·m bytes: coordinate i's m coefficient bytes, i = 1..n."""
        digits = self.field.digits
        return b"".join(bytes(digits(c)) for c in self.coords)

    @classmethod
    def from_bytes(cls, field, group, data: bytes):
        m, n = field.m, group.n
        if len(data) != n * m:
            raise BadLength(f"algebra element needs {n * m} bytes, got {len(data)}")
        return cls(field, group, tuple(decode_coeffs(field, data[i * m:(i + 1) * m]) for i in range(n)))


def ga_add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    add = a.field.add
    return AlgebraElement(a.field, a.group, tuple(add(x, y) for x, y in zip(a.coords, b.coords)))


def ga_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Product sum_g (sum_h a_h b_{h^-1 g}) g, i.e. c[g_i g_j] += a_i b_j."""
    a._check(b)
    field, table = a.field, a.group.table
    if field.q == 2:
        coords = _backend.kernels.group_conv(a.coords, b.coords, table, field.m, field._red)
    else:
        n = a.group.n
        coords = [0] * n
        add, mul = field.add, field.mul
        for i, x in enumerate(a.coords):
            if x:
                row = table[i]
                for j, y in enumerate(b.coords):
                    if y:
                        k = row[j]
                        coords[k] = add(coords[k], mul(x, y))
    return AlgebraElement(field, a.group, tuple(coords))


def lim(a: AlgebraElement) -> Matrix:
    """Left ideal matrix: row i holds the coordinates of g_i·a.

    (g_i a) has coefficient a_j at g_i g_j, so each row is a permutation of
    the coordinates of a and no field multiplication is needed.
    """
    n, table = a.group.n, a.group.table
    rows = []
    for i in range(n):
        row = [0] * n
        ti = table[i]
        for j, x in enumerate(a.coords):
            row[ti[j]] = x
        rows.append(tuple(row))
    return Matrix(a.field, tuple(rows), n)


def vec_lim(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """The product uv computed as coords(u)·LIM(v)."""
    u._check(v)
    return AlgebraElement(u.field, u.group, tuple(vec_mat(u.field, u.coords, lim(v).entries)))


def ga_is_invertible(a: AlgebraElement) -> bool:
    return rank(lim(a)) == a.group.n


def ga_inverse(a: AlgebraElement) -> AlgebraElement:
    """Two-sided inverse, from z·LIM(a) = coords(1)."""
    one = AlgebraElement.one(a.field, a.group)
    try:
        z = solve_left(lim(a), one.coords)
    except NoSolution:
        raise NotInvertible("element is a zero divisor") from None
    z = AlgebraElement(a.field, a.group, tuple(z))
    if ga_mul(z, a) != one or ga_mul(a, z) != one:
        raise NotInvertible("element is a zero divisor")
    return z


def from_coords(field: FieldParams, group: GroupDescriptor, coords: Sequence) -> AlgebraElement:
    """Build an element from ints or FFElems."""
    vals = tuple(c.value if isinstance(c, FFElem) else int(c) for c in coords)
    return AlgebraElement(field, group, vals)
