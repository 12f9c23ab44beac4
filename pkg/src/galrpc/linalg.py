"""Exact linear algebra over F_q and F_{q^m}.

Two layers live here:

* :class:`Matrix` and the dense routines (``rref``, ``solve_left``,
  ``matrix_inverse``, ``null_space``) over any :class:`FieldParams`.
  F_q itself is the degree-1 field returned by ``field.base_field()``.
* :class:`Subspace`, an F_q-subspace of F_{q^m}, where each element of
  F_{q^m} is read as its row of m base-field coefficients. Bases are kept
  in canonical reduced row echelon form (pivot = lowest-index nonzero
  coefficient, rows sorted by pivot), so equal subspaces compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import _backend
from .errors import NoSolution, ParameterError, SamplingError, SingularMatrix
from .field import FFElem, FieldParams


# ---------------------------------------------------------------- kernels

def _eliminate_generic(field, rows, npiv):
    nrows = len(rows)
    pivots = []
    r = 0
    mul, sub = field.mul, field.sub
    for col in range(npiv):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][col]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][col]
        if pv != 1:
            s = field.inv(pv)
            rows[r] = [mul(s, x) if x else 0 for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            f = rows[i][col]
            if i != r and f:
                rows[i] = [sub(x, mul(f, y)) if y else x for x, y in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
    return pivots


def eliminate(field: FieldParams, rows: list[list[int]], npiv: int) -> list[int]:
    """In-place RREF of ``rows`` pivoting on the first ``npiv`` columns."""
    if field.q == 2:
        return _backend.kernels.eliminate(rows, npiv, field.m, field._red)
    return _eliminate_generic(field, rows, npiv)


def vec_mat(field: FieldParams, u: Sequence[int], M: Sequence[Sequence[int]]) -> list[int]:
    if field.q == 2:
        return _backend.kernels.vec_mat(list(u), M, field.m, field._red)
    cols = len(M[0]) if M else 0
    out = [0] * cols
    add, mul = field.add, field.mul
    for ui, row in zip(u, M):
        if ui:
            for j, x in enumerate(row):
                if x:
                    out[j] = add(out[j], mul(ui, x))
    return out


# ---------------------------------------------------------------- matrices

@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix whose entries are field elements stored as ints."""

    field: FieldParams
    entries: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, field: FieldParams, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "Matrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ParameterError("ncols required for an empty matrix")
            ncols = len(data[0])
        if any(len(row) != ncols for row in data):
            raise ParameterError("ragged rows")
        for row in data:
            for x in row:
                if not 0 <= x < field.order:
                    raise ParameterError(f"entry {x} not in {field}")
        return cls(field, data, ncols)

    @classmethod
    def identity(cls, field: FieldParams, n: int) -> "Matrix":
        return cls(field, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, field: FieldParams, rows: int, cols: int) -> "Matrix":
        return cls(field, tuple((0,) * cols for _ in range(rows)), cols)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    @property
    def T(self) -> "Matrix":
        if not self.entries:
            return Matrix(self.field, tuple(() for _ in range(self.ncols)), 0)
        return Matrix(self.field, tuple(zip(*self.entries)), self.nrows)

    def _same(self, other):
        if self.field != other.field:
            raise ParameterError("matrices over different fields")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.ncols != other.nrows:
            raise ParameterError(f"shape mismatch {self.shape} @ {other.shape}")
        B = other.entries
        if not B:
            prod = [[0] * other.ncols for _ in self.entries]
        elif self.field.q == 2:
            prod = _backend.kernels.mat_mul(self.entries, B, self.field.m, self.field._red)
        else:
            prod = [vec_mat(self.field, row, B) for row in self.entries]
        return Matrix(self.field, tuple(tuple(r) for r in prod), other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.shape != other.shape:
            raise ParameterError("shape mismatch")
        add = self.field.add
        return Matrix(self.field, tuple(tuple(add(x, y) for x, y in zip(r, s))
                                        for r, s in zip(self.entries, other.entries)), self.ncols)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.nrows != other.nrows:
            raise ParameterError("row counts differ")
        return Matrix(self.field, tuple(r + s for r, s in zip(self.entries, other.entries)),
                      self.ncols + other.ncols)

    def vec_mul(self, u: Sequence[int]) -> list[int]:
        """Row vector times this matrix."""
        if len(u) != self.nrows:
            raise ParameterError("vector length does not match row count")
        if not self.entries:
            return [0] * self.ncols
        return vec_mat(self.field, u, self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)


def rref(M: Matrix) -> tuple[Matrix, int, Matrix]:
    """Return (R, rank, T) with R in reduced row echelon form and T·M = R."""
    n, c = M.shape
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(M.entries)]
    pivots = eliminate(M.field, aug, c)
    R = Matrix(M.field, tuple(tuple(row[:c]) for row in aug), c)
    T = Matrix(M.field, tuple(tuple(row[c:]) for row in aug), n)
    return R, len(pivots), T


def rank(M: Matrix) -> int:
    rows = M.rows()
    return len(eliminate(M.field, rows, M.ncols))


def solve_left(A: Matrix, b: Sequence[int]) -> list[int]:
    """Find z with z·A = b; raises :class:`NoSolution` if inconsistent."""
    k, n = A.shape
    if len(b) != n:
        raise ParameterError(f"right-hand side has length {len(b)}, expected {n}")
    # z·A = b  <=>  A^T z^T = b^T
    aug = [[A.entries[i][j] for i in range(k)] + [b[j]] for j in range(n)]
    pivots = eliminate(A.field, aug, k)
    for row in aug[len(pivots):]:
        if row[k]:
            raise NoSolution("b is not in the row space of A")
    z = [0] * k
    for row, p in zip(aug, pivots):
        z[p] = row[k]
    return z


def matrix_inverse(A: Matrix) -> Matrix:
    n, c = A.shape
    if n != c:
        raise ParameterError(f"matrix is {n}x{c}, not square")
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(A.entries)]
    if len(eliminate(A.field, aug, n)) < n:
        raise SingularMatrix("matrix is singular")
    return Matrix(A.field, tuple(tuple(row[n:]) for row in aug), n)


def null_space(M: Matrix) -> Matrix:
    """Basis (as rows) of {v : M·v^T = 0}."""
    field, (_, c) = M.field, M.shape
    rows = M.rows()
    pivots = eliminate(field, rows, c)
    free = [j for j in range(c) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * c
        v[f] = 1
        for row, p in zip(rows, pivots):
            v[p] = field.neg(row[f])
        basis.append(v)
    return Matrix(field, tuple(tuple(v) for v in basis), c)


# ---------------------------------------------------------------- F_q rows

def _xor_rref(vectors):
    basis = []
    for v in vectors:
        for b in basis:
            if v & (b & -b):
                v ^= b
        if v:
            p = v & -v
            basis = [b ^ v if b & p else b for b in basis]
            basis.append(v)
    basis.sort(key=lambda b: b & -b)
    return tuple(basis)


def _unpack(v, q, length):
    out = []
    for _ in range(length):
        v, d = divmod(v, q)
        out.append(d)
    return out


def _pack(ds, q):
    v = 0
    for d in reversed(ds):
        v = v * q + d
    return v


def fq_rref(q: int, vectors: Iterable[int], length: int) -> tuple[int, ...]:
    """Canonical RREF basis of the F_q-span of packed length-``length`` vectors."""
    if q == 2:
        return _xor_rref(vectors)
    rows = [_unpack(v, q, length) for v in vectors if v]
    pivots = []
    r = 0
    for col in range(length):
        p = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        s = pow(rows[r][col], q - 2, q)
        prow = rows[r] = [x * s % q for x in rows[r]]
        for i in range(len(rows)):
            f = rows[i][col]
            if i != r and f:
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
    return tuple(_pack(row, q) for row in rows[:r])


# ---------------------------------------------------------------- subspaces

def _as_int(field, v):
    if isinstance(v, FFElem):
        if v.field != field:
            raise ParameterError("element from a different field")
        return v.value
    return field.check(v)


@dataclass(frozen=True)
class Subspace:
    """An F_q-subspace of F_{q^m} with a canonical RREF basis.

    ``basis`` holds the basis rows as packed field elements. Whatever is
    passed in is re-canonicalized, so two instances are equal exactly
    when they describe the same set.
    """

    field: FieldParams
    basis: tuple[int, ...] = ()

    def __post_init__(self):
        rows = [_as_int(self.field, v) for v in self.basis]
        object.__setattr__(self, "basis", fq_rref(self.field.q, rows, self.field.m))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: int) -> int:
        """Residue of v modulo the subspace (zero iff v is a member)."""
        field = self.field
        if field.q == 2:
            for b in self.basis:
                if v & (b & -b):
                    v ^= b
            return v
        q, m = field.q, field.m
        ds = _unpack(v, q, m)
        for b in self.basis:
            bd = _unpack(b, q, m)
            p = next(i for i, x in enumerate(bd) if x)
            c = ds[p]
            if c:
                ds = [(x - c * y) % q for x, y in zip(ds, bd)]
        return _pack(ds, q)

    def __contains__(self, v) -> bool:
        return self.reduce(_as_int(self.field, v)) == 0

    def contains_all(self, values: Iterable[int]) -> bool:
        return all(self.reduce(v) == 0 for v in values)

    def basis_matrix(self) -> Matrix:
        """The k×m basis matrix over F_q."""
        base = self.field.base_field()
        return Matrix(base, tuple(tuple(self.field.digits(b)) for b in self.basis), self.field.m)

    def elements(self) -> Iterator[int]:
        """Every element of the subspace (q**dim of them)."""
        field = self.field
        elems = [0]
        for b in self.basis:
            elems = [field.add(e, field.scale(c, b)) for e in elems for c in range(field.q)]
        return iter(elems)

    def random_element(self, rng) -> int:
        field = self.field
        v = 0
        for b in self.basis:
            v = field.add(v, field.scale(rng.randrange(field.q), b))
        return v

    def __str__(self):
        return "\n".join("".join(str(d) for d in self.field.digits(b)) for b in self.basis)

    def to_bytes(self) -> bytes:
        return b"".join(bytes(self.field.digits(b)) for b in self.basis)


def span(field: FieldParams, vectors: Iterable = ()) -> Subspace:
    return Subspace(field, tuple(_as_int(field, v) for v in vectors))


def zero_subspace(field: FieldParams) -> Subspace:
    return Subspace(field, ())


def full_space(field: FieldParams) -> Subspace:
    return Subspace(field, tuple(field.q ** i for i in range(field.m)))


def _check_same(S, T):
    if S.field != T.field:
        raise ParameterError("subspaces live in different fields")


def subspace_sum(S: Subspace, T: Subspace) -> Subspace:
    _check_same(S, T)
    return Subspace(S.field, S.basis + T.basis)


def intersect(S: Subspace, T: Subspace) -> Subspace:
    """S ∩ T by the Zassenhaus method.

    Rows (s | s) for s in S and (t | 0) for t in T are echelonized over
    2m coordinates; rows whose first half vanishes carry the intersection
    in their second half.
    """
    _check_same(S, T)
    field = S.field
    if S.dim == 0 or T.dim == 0:
        return zero_subspace(field)
    shift = field.q ** field.m
    rows = [s + s * shift for s in S.basis] + list(T.basis)
    reduced = fq_rref(field.q, rows, 2 * field.m)
    return Subspace(field, tuple(r // shift for r in reduced if r % shift == 0))


def scalar_subspace(f, S: Subspace) -> Subspace:
    """The subspace f·S = {f·s : s in S} for nonzero f in F_{q^m}."""
    field = S.field
    f = _as_int(field, f)
    if f == 0:
        raise ParameterError("scaling by zero")
    return Subspace(field, tuple(field.mul(f, s) for s in S.basis))


def subspace_product(E: Subspace, F: Subspace) -> Subspace:
    """F_q-span of all products e·f with e in E, f in F."""
    _check_same(E, F)
    field = E.field
    return Subspace(field, tuple(field.mul(e, f) for e in E.basis for f in F.basis))


def sample_subspace(field: FieldParams, dim: int, rng, max_tries: int = 10_000) -> Subspace:
    """Uniform random subspace of the given dimension.

    Draws dim uniform elements until they are independent; the span of a
    uniformly random full-rank dim×m matrix is uniform over subspaces.
    """
    if not 0 < dim <= field.m:
        raise ParameterError(f"dim={dim} outside 1..{field.m}")
    for _ in range(max_tries):
        S = Subspace(field, tuple(field.random(rng) for _ in range(dim)))
        if S.dim == dim:
            return S
    raise SamplingError("could not draw independent vectors")  # pragma: no cover
