"""Command-line interface.

Results go to stdout as key=value lines or hex; diagnostics go to stderr.
Exit codes: 0 ok, 2 parameter error, 3 format error, 4 decoding failure,
5 I/O error.
"""

from __future__ import annotations

import argparse
import random
import sys
import warnings
from pathlib import Path

from . import _backend
from .errors import DecodeFailure, FormatError, ParameterError, StructureError
from .field import FieldParams
from .group import parse_group
from .harness import run_dfr, unit_density
from .kem import (KemParams, WeakGroupWarning, decap, deserialize_ciphertext,
                  deserialize_public_key, deserialize_secret_key, encap, keygen, serialize)

EXIT_OK, EXIT_PARAM, EXIT_FORMAT, EXIT_DECODE, EXIT_IO = 0, 2, 3, 4, 5


def _field(args) -> FieldParams:
    if args.modulus:
        coeffs = tuple(int(c) for c in args.modulus.split(","))
        return FieldParams(args.q, args.m, coeffs)
    return FieldParams.preset(args.m, args.q)


def _params(args) -> KemParams:
    return KemParams(_field(args), parse_group(args.group), args.lam, args.r)


def _rng(seed):
    return random.SystemRandom() if seed is None else random.Random(seed)


def _out(*lines):
    for line in lines:
        print(line)


def _warn(msg):
    print(f"warning: {msg}", file=sys.stderr)


def cmd_keygen(args):
    params = _params(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", WeakGroupWarning)
        pk, sk = keygen(params, _rng(args.seed))
    for w in caught:
        _warn(w.message)
    Path(args.pk).write_bytes(serialize(pk))
    Path(args.sk).write_bytes(serialize(sk))
    _out(f"field={params.field}", f"group={params.group.tag}", f"n={params.group.n}",
         f"lambda={params.lam}", f"r={params.r}", f"pk={args.pk}", f"sk={args.sk}")


def cmd_encap(args):
    pk = deserialize_public_key(Path(args.pk).read_bytes())
    ct, key = encap(pk, _rng(args.seed))
    Path(args.ct).write_bytes(serialize(ct))
    if args.out:
        Path(args.out).write_text(key.hex() + "\n")
    _out(key.hex())


def cmd_decap(args):
    sk = deserialize_secret_key(Path(args.sk).read_bytes())
    ct = deserialize_ciphertext(Path(args.ct).read_bytes())
    key = decap(sk, ct)
    if args.out:
        Path(args.out).write_text(key.hex() + "\n")
    _out(key.hex())


def cmd_group(args):
    g = parse_group(args.group)
    _out(f"group={g.tag}", f"n={g.n}", f"abelian={str(g.is_abelian).lower()}",
         f"cyclic={str(g.is_cyclic).lower()}", "elements=" + " ".join(g.names))
    if args.table:
        sys.stdout.write(g.to_cayley_text())


def cmd_bench_dfr(args):
    params = _params(args)
    msg = params.group_warning()
    if msg:
        _warn(msg)
    seed = 0 if args.seed is None else args.seed
    report = run_dfr(params, args.trials, seed, jobs=args.jobs)
    _out(f"field={params.field}", f"group={params.group.tag}", f"lambda={params.lam}",
         f"r={params.r}", f"seed={seed}", *report.lines())
    print(f"wall_time={report.wall_time:.3f}s backend={_backend.backend_name()}", file=sys.stderr)


def cmd_unit_density(args):
    field, group = _field(args), parse_group(args.group)
    seed = 0 if args.seed is None else args.seed
    report = unit_density(field, group, args.trials, seed, exhaustive=args.exhaustive)
    _out(f"field={field}", f"group={group.tag}", *report.lines())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="galrpc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def field_opts(p):
        p.add_argument("--q", type=int, default=2)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--modulus", help="c_0,...,c_m (default: preset)")
        p.add_argument("--group", required=True, help="cyclic:<k> | dihedral:<k> | file:<path>")

    def kem_opts(p):
        field_opts(p)
        p.add_argument("--lambda", dest="lam", type=int, required=True)
        p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("keygen", help="generate a key pair")
    kem_opts(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--pk", default="galrpc.pk")
    p.add_argument("--sk", default="galrpc.sk")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("encap", help="encapsulate a key to a public key")
    p.add_argument("--pk", required=True)
    p.add_argument("--ct", required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="also write the key hex here")
    p.set_defaults(func=cmd_encap)

    p = sub.add_parser("decap", help="recover the key from a ciphertext")
    p.add_argument("--sk", required=True)
    p.add_argument("--ct", required=True)
    p.add_argument("--out", help="also write the key hex here")
    p.set_defaults(func=cmd_decap)

    p = sub.add_parser("group", help="inspect a group")
    p.add_argument("--group", required=True)
    p.add_argument("--table", action="store_true", help="print the Cayley table")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("bench-dfr", help="measure the decapsulation failure rate")
    kem_opts(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench_dfr)

    p = sub.add_parser("unit-density", help="fraction of invertible algebra elements")
    field_opts(p)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int)
    p.add_argument("--exhaustive", action="store_true", help="enumerate the whole algebra")
    p.set_defaults(func=cmd_unit_density)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except DecodeFailure as exc:
        print(f"error: decoding failure: {exc}", file=sys.stderr)
        return EXIT_DECODE
    except FormatError as exc:
        print(f"error: format ({exc.code}): {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (ParameterError, StructureError) as exc:
        print(f"error: parameters: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except OSError as exc:
        print(f"error: I/O: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
