import random

import pytest

from galrpc.algebra import AlgebraElement, ga_is_invertible, ga_mul, lim
from galrpc.errors import DecodeFailure, NotInvertible, ParameterError
from galrpc.field import FieldParams
from galrpc.group import cyclic, dihedral
from galrpc.linalg import (Matrix, null_space, rank, sample_subspace, scalar_subspace, span,
                           subspace_product)
from galrpc.lrpc import (LrpcCode, LrpcParams, build_code, parity_check, rsr, sample_in, support,
                        syndrome, systematic_form)

F31 = FieldParams.preset(31)
F11 = FieldParams.preset(11)


def planted(field, group, lam, r, rng):
    """Random code plus an error pair with support E and dim(E·F) = r*lam."""
    F = sample_subspace(field, lam, rng)
    code = build_code(F, group, lam, r, rng)
    while True:
        E = sample_subspace(field, r, rng)
        if subspace_product(E, F).dim == r * lam:
            break
    e1, e2 = sample_in(E, group, rng), sample_in(E, group, rng)
    return code, E, e1, e2


def test_params():
    p = LrpcParams(3, 14, 31, 2)
    assert (p.K, p.N) == (14, 28)
    with pytest.raises(ParameterError):
        LrpcParams(3, 14, 5, 2)
    with pytest.raises(ParameterError):
        LrpcParams(3, 4, 31, 2)
    with pytest.raises(ParameterError):
        LrpcParams(0, 4, 31, 1)


def test_build_code(rng):
    g = dihedral(7)
    F = sample_subspace(F31, 3, rng)
    code = build_code(F, g, 3, 2, rng)
    assert support(code.h1, code.h2) == F
    assert ga_is_invertible(code.h1)
    with pytest.raises(ParameterError):
        build_code(F, g, 2, 2, rng)


def test_build_code_lambda_one(rng):
    g = dihedral(3)
    one = span(F11, [1])
    code = build_code(one, g, 1, 1, rng)
    assert all(c in (0, 1) for c in code.h1.coords + code.h2.coords)
    assert ga_is_invertible(code.h1)


def test_parity_check(backend, rng):
    g = dihedral(7)
    F = sample_subspace(F31, 3, rng)
    code = build_code(F, g, 3, 2, rng)
    H = parity_check(code)
    assert H.shape == (14, 28)
    assert rank(H) == 14
    assert span(F31, [x for row in H.entries for x in row]) == F
    one, zero = AlgebraElement.one(F31, g), AlgebraElement.zero(F31, g)
    trivial = LrpcCode(one, zero, span(F31, [1]), LrpcParams(1, 14, 31, 1))
    assert parity_check(trivial) == Matrix.identity(F31, 14).hstack(Matrix.zeros(F31, 14, 14))


def test_systematic_form(backend, rng):
    g = dihedral(4)
    F = sample_subspace(F31, 2, rng)
    code = build_code(F, g, 2, 2, rng)
    H, Hs = parity_check(code), systematic_form(code)
    n = g.n
    assert Hs.shape == (n, 2 * n)
    assert tuple(row[:n] for row in Hs.entries) == Matrix.identity(F31, n).entries
    N = null_space(H)
    assert N.nrows == n
    assert (Hs @ N.T).is_zero()
    # 100 random null-space vectors
    for _ in range(100):
        coeffs = [F31.random(rng) for _ in range(N.nrows)]
        c = N.vec_mul(coeffs)
        assert not any(H.T.vec_mul(c))
        assert not any(Hs.T.vec_mul(c))
    same = LrpcCode(AlgebraElement.one(F31, g), code.h2, F, code.params)
    assert systematic_form(same) == parity_check(same)


def test_systematic_form_requires_invertible_h1(rng):
    g = dihedral(3)
    s = AlgebraElement(F11, g, (1,) * g.n)
    code = LrpcCode(s, AlgebraElement.one(F11, g), span(F11, [1]), LrpcParams(1, 6, 11, 1))
    with pytest.raises(NotInvertible):
        systematic_form(code)


def test_syndrome_paths_agree(backend, rng):
    g = dihedral(7)
    for _ in range(20):
        code, E, e1, e2 = planted(F31, g, 3, 2, rng)
        s = syndrome(code.h1, code.h2, e1, e2)
        flat = list(e1.coords) + list(e2.coords)
        assert tuple(parity_check(code).T.vec_mul(flat)) == s.coords
        EF = subspace_product(E, code.F)
        assert EF.contains_all(s.coords)


def test_syndrome_trivial(rng):
    g = dihedral(3)
    zero, one = AlgebraElement.zero(F11, g), AlgebraElement.one(F11, g)
    e1 = AlgebraElement.random(F11, g, rng)
    assert syndrome(one, zero, e1, AlgebraElement.random(F11, g, rng)) == e1
    assert syndrome(one, e1, zero, zero).is_zero()


def test_rsr_zero_syndrome():
    g = dihedral(7)
    with pytest.raises(DecodeFailure):
        rsr(span(F31, [1, 2, 4]), AlgebraElement.zero(F31, g), 2)


def test_rsr_lambda_one(rng):
    g = dihedral(7)
    f = F31.random(rng) or 3
    F = span(F31, [f])
    for _ in range(10):
        E = sample_subspace(F31, 2, rng)
        e1 = sample_in(E, g, rng)
        s = AlgebraElement(F31, g, tuple(F31.mul(x, f) for x in e1.coords))
        S = span(F31, s.coords)
        if S.dim == 2:
            assert scalar_subspace(F31.inv(f), S) == E
            assert rsr(F, s, 2) == E


def test_rsr_planted_dihedral4(backend):
    rng = random.Random(4)
    g = dihedral(4)
    hits = 0
    for _ in range(30):
        code, E, e1, e2 = planted(F11, g, 2, 2, rng)
        s = syndrome(code.h1, code.h2, e1, e2)
        if span(F11, s.coords).dim < 4:
            with pytest.raises(DecodeFailure):
                rsr(code.F, s, 2)
            continue
        try:
            out = rsr(code.F, s, 2)
        except DecodeFailure:
            continue
        assert out == E
        hits += 1
    assert hits >= 15


def test_rsr_invariances(rng):
    g = dihedral(7)
    f3 = FieldParams.preset(13, 3)
    for field, c in ((F31, 1), (f3, 2)):
        code, E, e1, e2 = planted(field, g, 3, 2, rng)
        s = syndrome(code.h1, code.h2, e1, e2)
        E1 = rsr(code.F, s, 2)
        assert E1 == E
        perm = list(s.coords)
        rng.shuffle(perm)
        assert rsr(code.F, AlgebraElement(field, g, tuple(perm)), 2) == E1
        scaled = AlgebraElement(field, g, tuple(field.scale(c, x) for x in s.coords))
        assert rsr(code.F, scaled, 2) == E1
        assert subspace_product(E1, code.F).contains_all(s.coords)


def test_rsr_validation():
    g = cyclic(4)
    with pytest.raises(ParameterError):
        rsr(span(F11, [1, 2]), AlgebraElement.one(F11, g), 3)
