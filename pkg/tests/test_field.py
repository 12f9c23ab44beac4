import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from galrpc.errors import BadCoefficient, BadLength, ParameterError
from galrpc.field import (GF2_PRESETS, FFElem, FieldParams, default_modulus, ff_add, ff_from_bytes,
                          ff_inv, ff_mul, ff_sample, ff_to_bytes, is_irreducible)


def poly_mulmod_oracle(a, b, modulus, q):
    """Schoolbook product of coefficient lists, then long division."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    m = len(modulus) - 1
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k] % q
        for i in range(m + 1):
            prod[k - m + i] -= c * modulus[i]
    return [x % q for x in prod[:m]]


def test_characteristic_two(f8):
    for v in range(8):
        a = f8.elem(v)
        assert (a + a).value == 0
        assert a + f8.zero == a


def test_add_mod_three():
    f3 = FieldParams(3, 1, (0, 1))
    assert ff_add(f3.elem(2), f3.elem(2)) == f3.elem(1)


def test_mul_examples(f8):
    x = FFElem.from_coeffs(f8, [0, 1, 0])
    x2 = FFElem.from_coeffs(f8, [0, 0, 1])
    assert ff_mul(x, x) == x2
    assert ff_mul(x2, x) == FFElem.from_coeffs(f8, [1, 1, 0])
    for v in range(8):
        assert f8.one * f8.elem(v) == f8.elem(v)


def test_inverse_examples(f8):
    assert ff_inv(f8.one) == f8.one
    x = FFElem.from_coeffs(f8, [0, 1, 0])
    # exhaustive search over all 8 elements
    found = [b for b in range(8) if f8.mul(x.value, b) == 1]
    assert found == [FFElem.from_coeffs(f8, [1, 0, 1]).value]
    assert ff_inv(x).value == found[0]
    with pytest.raises(ZeroDivisionError):
        ff_inv(f8.zero)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_exhaustive_gf2_table(backend, m):
    f = FieldParams.preset(m)
    for a, b in itertools.product(range(f.order), repeat=2):
        expect = poly_mulmod_oracle(f.digits(a), f.digits(b), f.modulus, 2)
        assert f.digits(f.mul(a, b)) == expect


@pytest.mark.parametrize("q,m", [(3, 2), (5, 2), (3, 3)])
def test_exhaustive_odd_table(q, m):
    f = FieldParams.preset(m, q)
    for a, b in itertools.product(range(f.order), repeat=2):
        assert f.digits(f.mul(a, b)) == poly_mulmod_oracle(f.digits(a), f.digits(b), f.modulus, q)


@pytest.mark.parametrize("q,m", [(2, 11), (2, 31), (2, 64), (3, 5), (5, 3), (7, 4)])
def test_field_axioms(backend, q, m):
    f = FieldParams.preset(m, q)
    rng = random.Random(q * 100 + m)
    for _ in range(1000):
        a, b, c = (f.random(rng) for _ in range(3))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, b) == f.mul(b, a)
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.sub(f.add(a, b), b) == a
        if a:
            assert f.mul(a, f.inv(a)) == 1


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**31 - 1), st.integers(0, 2**31 - 1))
def test_mul_matches_oracle_m31(a, b):
    f = FieldParams.preset(31)
    assert f.digits(f.mul(a, b)) == poly_mulmod_oracle(f.digits(a), f.digits(b), f.modulus, 2)


def test_bytes(f8, rng):
    assert ff_to_bytes(f8.zero) == bytes(3)
    assert ff_to_bytes(FFElem.from_coeffs(f8, [1, 0, 1])) == bytes([1, 0, 1])
    for field in (f8, FieldParams.preset(5, 3)):
        for _ in range(200):
            a = ff_sample(field, rng)
            assert ff_from_bytes(field, ff_to_bytes(a)) == a
    with pytest.raises(BadLength):
        ff_from_bytes(f8, bytes(4))
    with pytest.raises(BadCoefficient):
        ff_from_bytes(f8, bytes([0, 2, 0]))


def test_mismatched_fields(f8):
    other = FieldParams(2, 3, (1, 0, 1, 1))
    with pytest.raises(ParameterError):
        f8.one + other.one
    with pytest.raises(ParameterError):
        f8.one * other.one


def test_presets_are_irreducible_and_minimal():
    for m, ks in GF2_PRESETS.items():
        mod = default_modulus(2, m)
        assert is_irreducible(2, mod)
        if len(ks) == 3:
            # no irreducible trinomial exists for this m
            assert not any(is_irreducible(2, [1] + [int(i == k) for i in range(1, m)] + [1])
                           for k in range(1, m))
        else:
            assert not any(is_irreducible(2, [1] + [int(i == k) for i in range(1, m)] + [1])
                           for k in range(1, ks[0]))


def test_irreducibility_brute_force():
    # degree-4 polynomials over F_2: compare against trial division by all lower-degree polys
    def divides(d, f):
        r = list(f)
        while len(r) >= len(d):
            if r[-1]:
                for i, x in enumerate(d):
                    r[len(r) - len(d) + i] ^= x
            r.pop()
        return not any(r)

    for low in range(16):
        f = [(low >> i) & 1 for i in range(4)] + [1]
        factors = [[(v >> i) & 1 for i in range(d)] + [1] for d in (1, 2) for v in range(2 ** d)]
        expect = not any(divides(d, f) for d in factors)
        assert is_irreducible(2, f) == expect


def test_validation():
    with pytest.raises(ParameterError):
        FieldParams(4, 2, (1, 1, 1))
    with pytest.raises(ParameterError):
        FieldParams(2, 2, (1, 0, 1))  # X^2 + 1 = (X + 1)^2
    with pytest.raises(ParameterError):
        FieldParams(2, 3, (1, 1, 0, 0))
    with pytest.raises(ParameterError):
        FieldParams.preset(65)


def test_text_form():
    f = FieldParams.parse("q=2,m=3,mod=1,1,0,1")
    assert f == FieldParams(2, 3, (1, 1, 0, 1))
    assert str(f) == "q=2,m=3,mod=1,1,0,1"
    assert FieldParams.parse(str(FieldParams.preset(31))) == FieldParams.preset(31)
    assert FieldParams.parse("q=3,m=4") == FieldParams.preset(4, 3)
    with pytest.raises(ParameterError):
        FieldParams.parse("q=2;m=3")
