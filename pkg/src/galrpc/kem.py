"""ROLLO-I style KEM over a group algebra, with byte serialization.

Wire format (all integers big-endian)::

    "GALR" | version=1 | kind (1=pk, 2=sk, 3=ct)
    field:  q (u32) | m (u32) | modulus c_0..c_m (m+1 bytes)
    group:  tag (0=cyclic, 1=dihedral, 2=custom)
            cyclic/dihedral: k (u32)
            custom: n (u32) | n names (u8 length + UTF-8) | n*n table bytes (0-based)
    params: lambda (u32) | r (u32)
    payload:
        pk: h
        sk: x | y | dim F (u32) | dim F rows of m bytes (RREF basis of F)
        ct: c
    algebra elements are n*m bytes, coordinate-major, one byte per coefficient.

The shared key is SHA3-256 over "GA-LRPC-KEM-v1" | q | m | dim E (u32 each)
followed by the RREF basis rows of E, one byte per coefficient.
"""

from __future__ import annotations

import hashlib
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from .algebra import AlgebraElement, ga_add, ga_inverse, ga_mul
from .errors import (BadField, BadGroup, BadKind, BadLength, BadMagic, BadParams, BadVersion,
                     DecapFailure, DecodeFailure, NotInvertible, ParameterError,
                     SamplingError, StructureError)
from .field import FieldParams, decode_coeffs
from .group import GroupDescriptor, cyclic, dihedral
from .linalg import Subspace, fq_rref, sample_subspace
from .lrpc import rsr, sample_in, support

MAGIC = b"GALR"
VERSION = 1
HASH_TAG = b"GA-LRPC-KEM-v1"
KIND_PK, KIND_SK, KIND_CT = 1, 2, 3
_GROUP_TAGS = {"cyclic": 0, "dihedral": 1, "custom": 2}


class WeakGroupWarning(UserWarning):
    """The group is abelian (or cyclic), which weakens the scheme."""


@dataclass(frozen=True)
class KemParams:
    field: FieldParams
    group: GroupDescriptor
    lam: int
    r: int

    def __post_init__(self):
        m, n = self.field.m, self.group.n
        if self.lam < 1 or self.r < 1:
            raise ParameterError("lambda and r must be positive")
        if self.lam > m:
            raise ParameterError(f"lambda={self.lam} exceeds m={m}")
        if self.r > n:
            raise ParameterError(f"r={self.r} exceeds group order n={n}")
        if self.r * self.lam > min(m, n):
            raise ParameterError(f"r*lambda={self.r * self.lam} exceeds min(m, n)={min(m, n)}")

    def group_warning(self) -> str | None:
        g = self.group
        if g.is_cyclic:
            return f"group {g.tag} is cyclic: the code is quasi-cyclic and open to known structural attacks"
        if g.is_abelian:
            return f"group {g.tag} is abelian; non-abelian groups are recommended"
        return None


@dataclass(frozen=True)
class PublicKey:
    params: KemParams
    h: AlgebraElement


@dataclass(frozen=True)
class SecretKey:
    params: KemParams
    x: AlgebraElement
    y: AlgebraElement
    F: Subspace


@dataclass(frozen=True)
class Ciphertext:
    params: KemParams
    c: AlgebraElement


class EncapTrace(NamedTuple):
    """Everything encapsulation drew, for tests and diagnostics."""

    ct: Ciphertext
    key: bytes
    e1: AlgebraElement
    e2: AlgebraElement
    E: Subspace


def hash_subspace(E: Subspace) -> bytes:
    if fq_rref(E.field.q, E.basis, E.field.m) != E.basis:  # pragma: no cover
        raise RuntimeError("subspace basis is not canonical")
    f = E.field
    h = hashlib.sha3_256()
    h.update(HASH_TAG)
    for v in (f.q, f.m, E.dim):
        h.update(v.to_bytes(4, "big"))
    h.update(E.to_bytes())
    return h.digest()


def _sample_spanning(S: Subspace, group, rng, max_tries):
    for _ in range(max_tries):
        e = sample_in(S, group, rng)
        if support(e) == S:
            return e
    raise SamplingError(f"no element spanning the support after {max_tries} draws")


def keygen(params: KemParams, rng, *, max_tries: int = 256) -> tuple[PublicKey, SecretKey]:
    msg = params.group_warning()
    if msg:
        warnings.warn(msg, WeakGroupWarning, stacklevel=2)
    field, group = params.field, params.group
    F = sample_subspace(field, params.lam, rng)
    for _ in range(max_tries):
        x = sample_in(F, group, rng)
        y = sample_in(F, group, rng)
        if support(x, y) != F:
            continue
        try:
            x_inv = ga_inverse(x)
        except NotInvertible:
            continue
        h = ga_mul(y, x_inv)
        return PublicKey(params, h), SecretKey(params, x, y, F)
    raise SamplingError(f"keygen found no invertible x after {max_tries} draws")


def encap_instrumented(pk: PublicKey, rng, *, max_tries: int = 256) -> EncapTrace:
    params = pk.params
    E = sample_subspace(params.field, params.r, rng)
    e1 = _sample_spanning(E, params.group, rng, max_tries)
    e2 = _sample_spanning(E, params.group, rng, max_tries)
    c = ga_add(e1, ga_mul(e2, pk.h))
    return EncapTrace(Ciphertext(params, c), hash_subspace(E), e1, e2, E)


def encap(pk: PublicKey, rng) -> tuple[Ciphertext, bytes]:
    trace = encap_instrumented(pk, rng)
    return trace.ct, trace.key


def decap(sk: SecretKey, ct: Ciphertext) -> bytes:
    if sk.params != ct.params:
        raise ParameterError("secret key and ciphertext use different parameters")
    s = ga_mul(ct.c, sk.x)
    try:
        E = rsr(sk.F, s, sk.params.r)
    except DecodeFailure as exc:
        raise DecapFailure(str(exc)) from None
    return hash_subspace(E)


def validate_keypair(pk: PublicKey, sk: SecretKey) -> bool:
    """True when sk is a well-formed secret key for pk."""
    if pk.params != sk.params or support(sk.x, sk.y) != sk.F or sk.F.dim != sk.params.lam:
        return False
    return ga_mul(pk.h, sk.x) == sk.y


# ---------------------------------------------------------------- serialization

def _u32(v):
    return int(v).to_bytes(4, "big")


def _params_bytes(params: KemParams) -> bytes:
    f, g = params.field, params.group
    out = bytearray(_u32(f.q) + _u32(f.m) + bytes(f.modulus))
    out.append(_GROUP_TAGS[g.family])
    if g.family == "custom":
        out += _u32(g.n)
        for name in g.names:
            raw = name.encode()
            if len(raw) > 255:
                raise ParameterError(f"group element name too long: {name!r}")
            out.append(len(raw))
            out += raw
        out += bytes(x for row in g.table for x in row)
    else:
        out += _u32(g.param)
    out += _u32(params.lam) + _u32(params.r)
    return bytes(out)


def _header(kind: int, params: KemParams) -> bytes:
    return MAGIC + bytes([VERSION, kind]) + _params_bytes(params)


class _Reader:
    def __init__(self, data: bytes):
        self.data, self.pos = data, 0

    def take(self, k: int) -> bytes:
        if self.pos + k > len(self.data):
            raise BadLength(f"truncated: need {k} bytes at offset {self.pos}")
        chunk = self.data[self.pos:self.pos + k]
        self.pos += k
        return chunk

    def u8(self) -> int:
        return self.take(1)[0]

    def u32(self) -> int:
        return int.from_bytes(self.take(4), "big")

    def done(self):
        if self.pos != len(self.data):
            raise BadLength(f"{len(self.data) - self.pos} trailing bytes")


def _read_params(rd: _Reader) -> KemParams:
    q, m = rd.u32(), rd.u32()
    if not 1 <= m <= 64:
        raise BadField(f"m={m} out of range")
    try:
        field = FieldParams(q, m, tuple(rd.take(m + 1)))
    except ParameterError as exc:
        raise BadField(str(exc)) from None
    tag = rd.u8()
    try:
        if tag == 0:
            group = cyclic(rd.u32())
        elif tag == 1:
            group = dihedral(rd.u32())
        elif tag == 2:
            n = rd.u32()
            if not 1 <= n <= 64:
                raise BadGroup(f"group order {n} out of range")
            names = [rd.take(rd.u8()).decode() for _ in range(n)]
            flat = rd.take(n * n)
            group = GroupDescriptor(tuple(names), [flat[i * n:(i + 1) * n] for i in range(n)])
        else:
            raise BadGroup(f"unknown group tag {tag}")
    except (ParameterError, StructureError, UnicodeDecodeError) as exc:
        raise BadGroup(str(exc)) from None
    lam, r = rd.u32(), rd.u32()
    try:
        return KemParams(field, group, lam, r)
    except ParameterError as exc:
        raise BadParams(str(exc)) from None


def _read_preamble(rd: _Reader) -> int:
    if rd.take(4) != MAGIC:
        raise BadMagic("not a GALR file")
    version = rd.u8()
    if version != VERSION:
        raise BadVersion(f"unsupported version {version}")
    return rd.u8()


def _read_header(data: bytes, kind: int) -> tuple[_Reader, KemParams]:
    rd = _Reader(bytes(data))
    got = _read_preamble(rd)
    if got != kind:
        raise BadKind(f"expected object kind {kind}, found {got}")
    return rd, _read_params(rd)


def _read_element(rd: _Reader, params: KemParams) -> AlgebraElement:
    f, g = params.field, params.group
    return AlgebraElement.from_bytes(f, g, rd.take(f.m * g.n))


def serialize(obj) -> bytes:
    """Serialize a PublicKey, SecretKey or Ciphertext."""
    if isinstance(obj, PublicKey):
        return _header(KIND_PK, obj.params) + obj.h.to_bytes()
    if isinstance(obj, SecretKey):
        return (_header(KIND_SK, obj.params) + obj.x.to_bytes() + obj.y.to_bytes()
                + _u32(obj.F.dim) + obj.F.to_bytes())
    if isinstance(obj, Ciphertext):
        return _header(KIND_CT, obj.params) + obj.c.to_bytes()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def deserialize_public_key(data: bytes) -> PublicKey:
    rd, params = _read_header(data, KIND_PK)
    h = _read_element(rd, params)
    rd.done()
    return PublicKey(params, h)


def deserialize_secret_key(data: bytes) -> SecretKey:
    rd, params = _read_header(data, KIND_SK)
    x = _read_element(rd, params)
    y = _read_element(rd, params)
    k = rd.u32()
    f = params.field
    if k != params.lam:
        raise BadParams(f"support dimension {k} differs from lambda={params.lam}")
    rows = tuple(decode_coeffs(f, rd.take(f.m)) for _ in range(k))
    rd.done()
    F = Subspace(f, rows)
    if F.basis != rows:
        raise BadParams("support basis is not in canonical RREF form")
    return SecretKey(params, x, y, F)


def deserialize_ciphertext(data: bytes) -> Ciphertext:
    rd, params = _read_header(data, KIND_CT)
    c = _read_element(rd, params)
    rd.done()
    return Ciphertext(params, c)


def deserialize(data: bytes):
    """Deserialize any object, dispatching on the kind byte."""
    kind = _read_preamble(_Reader(bytes(data)))
    readers = {KIND_PK: deserialize_public_key, KIND_SK: deserialize_secret_key,
               KIND_CT: deserialize_ciphertext}
    if kind not in readers:
        raise BadKind(f"unknown object kind {kind}")
    return readers[kind](data)
