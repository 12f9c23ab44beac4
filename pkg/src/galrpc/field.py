"""Arithmetic in F_{q^m} = F_q[X]/(modulus) for prime q.

Field elements are carried around as plain ints holding their base-q
digits: the coefficient of X^i is ``(v // q**i) % q``. For q = 2 this is
the usual bitmask, and multiplication is dispatched to the active kernel
module. :class:`FFElem` wraps an int together with its field for the
public API; the algebra and linear-algebra layers work on raw ints.

Nothing here is constant time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import _backend
from .errors import BadCoefficient, BadLength, ParameterError

MAX_M = 64

# Lowest-weight irreducible modulus for q = 2, listed as the exponents of
# the middle terms: (k,) means X^m + X^k + 1, (a, b, c) means
# X^m + X^a + X^b + X^c + 1. Trinomials use the smallest k; pentanomials
# the lexicographically smallest (a, b, c) with a > b > c.
GF2_PRESETS = {
    3: (1,), 4: (1,), 5: (2,), 6: (1,), 7: (1,), 8: (4, 3, 1), 9: (1,),
    10: (3,), 11: (2,), 12: (3,), 13: (4, 3, 1), 14: (5,), 15: (1,),
    16: (5, 3, 1), 17: (3,), 18: (3,), 19: (5, 2, 1), 20: (3,), 21: (2,),
    22: (1,), 23: (5,), 24: (4, 3, 1), 25: (3,), 26: (4, 3, 1),
    27: (5, 2, 1), 28: (1,), 29: (2,), 30: (1,), 31: (3,), 32: (7, 3, 2),
    33: (10,), 34: (7,), 35: (2,), 36: (9,), 37: (6, 4, 1), 38: (6, 5, 1),
    39: (4,), 40: (5, 4, 3), 41: (3,), 42: (7,), 43: (6, 4, 3), 44: (5,),
    45: (4, 3, 1), 46: (1,), 47: (5,), 48: (5, 3, 2), 49: (9,),
    50: (4, 3, 2), 51: (6, 3, 1), 52: (3,), 53: (6, 2, 1), 54: (9,),
    55: (7,), 56: (7, 4, 2), 57: (4,), 58: (19,), 59: (7, 4, 2), 60: (1,),
    61: (5, 2, 1), 62: (29,), 63: (1,), 64: (4, 3, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# --- dense polynomial helpers over F_q (coefficient lists, low degree first)

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(a, f, q):
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], q - 2, q)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % q
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % q
        _trim(a)
    return a


def _poly_mulmod(a, b, f, q):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % q
    return _poly_mod(prod, f, q)


def _poly_powmod(a, e, f, q):
    result = [1]
    base = _poly_mod(a, f, q)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, q)
        base = _poly_mulmod(base, base, f, q)
        e >>= 1
    return result


def _poly_gcd(a, b, q):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, q)
    return a


def is_irreducible(q: int, modulus: Sequence[int]) -> bool:
    """Ben-Or test: gcd(X^(q^i) - X, f) = 1 for 1 <= i <= deg(f)/2."""
    f = _trim([c % q for c in modulus])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(m // 2):
        xp = _poly_powmod(xp, q, f, q)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % q
        g = _poly_gcd(f, _trim(diff), q)
        if len(g) != 1:
            return False
    return True


def _gf2_modulus(m):
    coeffs = [0] * (m + 1)
    coeffs[0] = coeffs[m] = 1
    for k in GF2_PRESETS[m]:
        coeffs[k] = 1
    return tuple(coeffs)


def default_modulus(q: int, m: int) -> tuple[int, ...]:
    """The preset modulus for (q, m).

    For q = 2 and 3 <= m <= 64 this is the :data:`GF2_PRESETS` entry.
    Otherwise it is the monic irreducible polynomial of degree m whose
    lower coefficients (c_0, ..., c_{m-1}), read as a base-q number with
    c_0 least significant, are smallest.
    """
    if not is_prime(q):
        raise ParameterError(f"q={q} is not prime")
    if not 1 <= m <= MAX_M:
        raise ParameterError(f"m={m} outside 1..{MAX_M}")
    if q == 2 and m in GF2_PRESETS:
        return _gf2_modulus(m)
    for low in range(q ** m):
        coeffs = []
        for _ in range(m):
            low, d = divmod(low, q)
            coeffs.append(d)
        coeffs.append(1)
        if (coeffs[0] or m == 1) and is_irreducible(q, coeffs):
            return tuple(coeffs)
    raise ParameterError(f"no irreducible polynomial found for q={q}, m={m}")  # pragma: no cover


@dataclass(frozen=True)
class FieldParams:
    """The field F_{q^m} defined by a monic irreducible ``modulus``."""

    q: int
    m: int
    modulus: tuple[int, ...]
    order: int = dc_field(init=False, repr=False, compare=False)
    _red: int = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        q, m = self.q, self.m
        if not isinstance(q, int) or q > 251 or not is_prime(q):
            raise ParameterError(f"q={q} must be a prime <= 251")
        if not isinstance(m, int) or not 1 <= m <= MAX_M:
            raise ParameterError(f"m={m} outside 1..{MAX_M}")
        mod = tuple(int(c) for c in self.modulus)
        if len(mod) != m + 1:
            raise ParameterError(f"modulus needs {m + 1} coefficients, got {len(mod)}")
        if any(not 0 <= c < q for c in mod):
            raise ParameterError("modulus coefficients must lie in 0..q-1")
        if mod[m] != 1:
            raise ParameterError("modulus must be monic")
        if not is_irreducible(q, mod):
            raise ParameterError(f"modulus {mod} is reducible over F_{q}")
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "order", q ** m)
        object.__setattr__(self, "_red", sum(c * q ** i for i, c in enumerate(mod[:m])))

    @classmethod
    def preset(cls, m: int, q: int = 2) -> "FieldParams":
        return cls(q, m, default_modulus(q, m))

    @classmethod
    def parse(cls, text: str) -> "FieldParams":
        """Parse ``q=<int>,m=<int>[,mod=<c_0>,...,<c_m>]``."""
        match = re.fullmatch(r"\s*q=(\d+)\s*,\s*m=(\d+)\s*(?:,\s*mod=([\d,\s]+))?\s*", text)
        if not match:
            raise ParameterError(f"cannot parse field spec {text!r}")
        q, m = int(match.group(1)), int(match.group(2))
        if match.group(3) is None:
            return cls.preset(m, q)
        coeffs = tuple(int(c) for c in match.group(3).split(",") if c.strip())
        return cls(q, m, coeffs)

    def __str__(self):
        return f"q={self.q},m={self.m},mod=" + ",".join(map(str, self.modulus))

    def base_field(self) -> "FieldParams":
        """F_q itself, as a degree-1 extension."""
        return FieldParams(self.q, 1, (0, 1))

    # --- digit packing

    def digits(self, v: int) -> list[int]:
        q = self.q
        if q == 2:
            return [(v >> i) & 1 for i in range(self.m)]
        out = []
        for _ in range(self.m):
            v, d = divmod(v, q)
            out.append(d)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        if self.q == 2:
            v = 0
            for i, d in enumerate(ds):
                if d & 1:
                    v |= 1 << i
            return v
        q = self.q
        v = 0
        for d in reversed(ds):
            v = v * q + d % q
        return v

    def check(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.order:
            raise ParameterError(f"{v!r} is not an element of {self}")
        return v

    # --- arithmetic on raw ints

    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        q = self.q
        return self.from_digits([(x + y) % q for x, y in zip(self.digits(a), self.digits(b))])

    def sub(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        q = self.q
        return self.from_digits([(x - y) % q for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.q == 2:
            return a
        q = self.q
        return self.from_digits([-x % q for x in self.digits(a)])

    def scale(self, c: int, a: int) -> int:
        """Multiply by the base-field scalar c in F_q."""
        c %= self.q
        if c == 0:
            return 0
        if c == 1:
            return a
        q = self.q
        return self.from_digits([c * x % q for x in self.digits(a)])

    def mul(self, a: int, b: int) -> int:
        if self.q == 2:
            return _backend.kernels.mul(a, b, self.m, self._red)
        if a == 0 or b == 0:
            return 0
        q, m, mod = self.q, self.m, self.modulus
        if m == 1:
            return a * b % q
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k] % q
            if c:
                base = k - m
                for i in range(m):
                    prod[base + i] -= c * mod[i]
        return self.from_digits([x % q for x in prod[:m]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.q == 2:
            return _backend.kernels.inv(a, self.m, self._red)
        return self._inv_euclid(a)

    def _inv_euclid(self, a):
        q = self.q
        r0, r1 = list(self.modulus), _trim(self.digits(a))
        s0, s1 = [], [1]
        while len(r1) > 1:
            # polynomial division r0 = quo * r1 + rem
            rem = list(r0)
            quo = [0] * max(1, len(r0) - len(r1) + 1)
            inv_lead = pow(r1[-1], q - 2, q)
            while len(rem) >= len(r1):
                c = rem[-1] * inv_lead % q
                shift = len(rem) - len(r1)
                quo[shift] = c
                for i, x in enumerate(r1):
                    rem[shift + i] = (rem[shift + i] - c * x) % q
                _trim(rem)
            prod = [0] * (len(quo) + len(s1))
            for i, x in enumerate(quo):
                for j, y in enumerate(s1):
                    prod[i + j] += x * y
            s_next = [(x - y) % q for x, y in zip(s0 + [0] * len(prod), prod + [0] * len(s0))]
            r0, r1 = r1, rem
            s0, s1 = s1, _trim(s_next)
        c = pow(r1[0], q - 2, q)
        res = _poly_mod([x * c % q for x in s1], list(self.modulus), q)
        return self.from_digits(res + [0] * (self.m - len(res)))

    def pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def random(self, rng) -> int:
        return rng.randrange(self.order)

    def elem(self, v: int) -> "FFElem":
        return FFElem(self, self.check(v))

    @property
    def zero(self) -> "FFElem":
        return FFElem(self, 0)

    @property
    def one(self) -> "FFElem":
        return FFElem(self, 1)


@dataclass(frozen=True)
class FFElem:
    """An element of F_{q^m} bound to its field."""

    field: FieldParams
    value: int

    def _other(self, other):
        if not isinstance(other, FFElem):
            return NotImplemented
        if other.field != self.field:
            raise ParameterError("operands belong to different fields")
        return other.value

    @classmethod
    def from_coeffs(cls, field: FieldParams, coeffs: Sequence[int]) -> "FFElem":
        if len(coeffs) != field.m or any(not 0 <= c < field.q for c in coeffs):
            raise ParameterError(f"need {field.m} coefficients in 0..{field.q - 1}")
        return cls(field, field.from_digits(coeffs))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.digits(self.value))

    def __add__(self, other):
        v = self._other(other)
        return v if v is NotImplemented else FFElem(self.field, self.field.add(self.value, v))

    def __sub__(self, other):
        v = self._other(other)
        return v if v is NotImplemented else FFElem(self.field, self.field.sub(self.value, v))

    def __mul__(self, other):
        v = self._other(other)
        return v if v is NotImplemented else FFElem(self.field, self.field.mul(self.value, v))

    def __truediv__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return FFElem(self.field, self.field.mul(self.value, self.field.inv(v)))

    def __neg__(self):
        return FFElem(self.field, self.field.neg(self.value))

    def __bool__(self):
        return self.value != 0

    def inverse(self) -> "FFElem":
        return FFElem(self.field, self.field.inv(self.value))

    def to_bytes(self) -> bytes:
        return bytes(self.field.digits(self.value))

    @classmethod
    def from_bytes(cls, field: FieldParams, data: bytes) -> "FFElem":
        return cls(field, decode_coeffs(field, data))

    def __repr__(self):
        terms = [f"X^{i}" if i > 1 else ("X" if i == 1 else "1") for i, c in enumerate(self.coeffs) if c]
        if self.field.q != 2:
            terms = [f"{c}*{t}" if c != 1 else t
                     for c, t in zip([c for c in self.coeffs if c], terms)]
        return "FFElem(" + (" + ".join(reversed(terms)) or "0") + ")"


def encode_coeffs(field: FieldParams, v: int) -> bytes:
    return bytes(field.digits(v))


def decode_coeffs(field: FieldParams, data: bytes) -> int:
    if len(data) != field.m:
        raise BadLength(f"expected {field.m} bytes, got {len(data)}")
    if any(b >= field.q for b in data):
        raise BadCoefficient(f"coefficient byte >= q={field.q}")
    return field.from_digits(data)


def ff_add(a: FFElem, b: FFElem) -> FFElem:
    return a + b


def ff_mul(a: FFElem, b: FFElem) -> FFElem:
    return a * b


def ff_inv(a: FFElem) -> FFElem:
    return a.inverse()


def ff_sample(field: FieldParams, rng) -> FFElem:
    return FFElem(field, field.random(rng))


def ff_to_bytes(a: FFElem) -> bytes:
    return a.to_bytes()


def ff_from_bytes(field: FieldParams, data: bytes) -> FFElem:
    return FFElem.from_bytes(field, data)
