"""Left ideal LRPC codes and the rank support recovery decoder."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, ga_add, ga_inverse, ga_is_invertible, ga_mul, lim
from .errors import DecodeFailure, NotInvertible, ParameterError, SamplingError
from .field import FieldParams
from .group import GroupDescriptor
from .linalg import Matrix, Subspace, intersect, scalar_subspace, span, subspace_product


@dataclass(frozen=True)
class LrpcParams:
    """(lambda, K, N) = (lam, n, 2n) plus the decoding target r."""

    lam: int
    n: int
    m: int
    r: int

    def __post_init__(self):
        if self.lam < 1 or self.r < 1 or self.n < 1:
            raise ParameterError("lambda, r and n must all be positive")
        if self.r * self.lam > min(self.m, self.n):
            raise ParameterError(
                f"r*lambda = {self.r * self.lam} exceeds min(m, n) = {min(self.m, self.n)}")

    @property
    def K(self) -> int:
        return self.n

    @property
    def N(self) -> int:
        return 2 * self.n


@dataclass(frozen=True)
class LrpcCode:
    h1: AlgebraElement
    h2: AlgebraElement
    F: Subspace
    params: LrpcParams

    @property
    def field(self) -> FieldParams:
        return self.h1.field

    @property
    def group(self) -> GroupDescriptor:
        return self.h1.group


def support(*elements: AlgebraElement) -> Subspace:
    """F_q-span of all coordinates of the given elements."""
    field = elements[0].field
    return span(field, [c for e in elements for c in e.coords])


def sample_in(F: Subspace, group: GroupDescriptor, rng) -> AlgebraElement:
    """Random element whose coordinates all lie in F."""
    return AlgebraElement(F.field, group, tuple(F.random_element(rng) for _ in range(group.n)))


def build_code(F: Subspace, group: GroupDescriptor, lam: int, r: int, rng, *,
               max_tries: int = 256) -> LrpcCode:
    """Sample h1, h2 with coordinates in F spanning F, h1 invertible."""
    if F.dim != lam:
        raise ParameterError(f"support has dimension {F.dim}, expected lambda={lam}")
    params = LrpcParams(lam, group.n, F.field.m, r)
    for _ in range(max_tries):
        h1 = sample_in(F, group, rng)
        h2 = sample_in(F, group, rng)
        if support(h1, h2) == F and ga_is_invertible(h1):
            return LrpcCode(h1, h2, F, params)
    raise SamplingError(f"no valid (h1, h2) after {max_tries} draws")


def parity_check(code: LrpcCode) -> Matrix:
    """H = (LIM(h1)^T | LIM(h2)^T), an n×2n matrix."""
    return lim(code.h1).T.hstack(lim(code.h2).T)


def systematic_form(code: LrpcCode) -> Matrix:
    """(I_n | LIM(h2·h1^-1)^T); requires h1 invertible."""
    try:
        h1_inv = ga_inverse(code.h1)
    except NotInvertible:
        raise NotInvertible("systematic form needs h1 invertible") from None
    n = code.group.n
    return Matrix.identity(code.field, n).hstack(lim(ga_mul(code.h2, h1_inv)).T)


def syndrome(h1: AlgebraElement, h2: AlgebraElement, e1: AlgebraElement, e2: AlgebraElement) -> AlgebraElement:
    """e·H^T for e = (e1 | e2), computed in the algebra as e1·h1 + e2·h2."""
    return ga_add(ga_mul(e1, h1), ga_mul(e2, h2))


def code_syndrome(code: LrpcCode, e1: AlgebraElement, e2: AlgebraElement) -> AlgebraElement:
    return syndrome(code.h1, code.h2, e1, e2)


def rsr(F: Subspace, s: AlgebraElement, r: int) -> Subspace:
    """Recover the error support E from a syndrome s.

    With S the span of the syndrome coordinates, E' is the intersection of
    f^-1·S over the basis vectors f of F. E' is returned only if it has
    dimension r and every syndrome coordinate lies in E'·F; otherwise
    :class:`DecodeFailure` is raised.
    """
    lam, field = F.dim, F.field
    if F.field != s.field:
        raise ParameterError("support and syndrome live in different fields")
    LrpcParams(lam, s.group.n, field.m, r)  # range checks only
    S = span(field, s.coords)
    if S.dim < r:
        raise DecodeFailure(f"syndrome support has dimension {S.dim} < r={r}")
    E = None
    for f in F.basis:
        Ei = scalar_subspace(field.inv(f), S)
        E = Ei if E is None else intersect(E, Ei)
        if E.dim < r:
            break
    if E.dim != r:
        raise DecodeFailure(f"recovered support has dimension {E.dim}, expected {r}")
    if not subspace_product(E, F).contains_all(s.coords):
        raise DecodeFailure("syndrome is not contained in E·F")
    return E
