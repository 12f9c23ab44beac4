"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--m 31] [--group dihedral:7] [--repeat 3]
"""

import argparse
import random
import time

from galrpc import _backend
from galrpc.algebra import AlgebraElement, ga_inverse, ga_mul
from galrpc.field import FieldParams
from galrpc.group import parse_group
from galrpc.harness import run_dfr
from galrpc.kem import KemParams
from galrpc.linalg import Matrix, rank


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def workloads(field, group, lam, r):
    rng = random.Random(0)
    pairs = [(field.random(rng), field.random(rng)) for _ in range(20000)]
    elems = [AlgebraElement.random(field, group, rng) for _ in range(400)]
    n = group.n
    mats = [Matrix(field, tuple(tuple(field.random(rng) for _ in range(2 * n)) for _ in range(n)), 2 * n)
            for _ in range(50)]
    params = KemParams(field, group, lam, r)
    return {
        "field mul x20000": lambda: [field.mul(a, b) for a, b in pairs],
        "group product x200": lambda: [ga_mul(elems[i], elems[i + 1]) for i in range(0, 400, 2)],
        f"rank {n}x{2 * n} x50": lambda: [rank(M) for M in mats],
        "algebra inverse x20": lambda: [ga_inverse(e) for e in elems[:20]],
        "kem cycle x50": lambda: run_dfr(params, 50, seed=1),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=31)
    ap.add_argument("--group", default="dihedral:7")
    ap.add_argument("--lam", type=int, default=3)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    field, group = FieldParams.preset(args.m), parse_group(args.group)
    names = sorted(_backend.AVAILABLE)
    results = {}
    for name in names:
        _backend.set_backend(name)
        for label, fn in workloads(field, group, args.lam, args.r).items():
            try:
                results[label, name] = bench(fn, args.repeat)
            except ArithmeticError:
                results[label, name] = float("nan")
    labels = list(workloads(field, group, args.lam, args.r))
    print(f"GF(2^{args.m}), group {group.tag}, best of {args.repeat}")
    print(f"{'workload':<24}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label in labels:
        row = f"{label:<24}" + "".join(f"{results[label, n] * 1e3:>10.1f}ms" for n in names)
        if len(names) > 1:
            row += f"{results[label, 'python'] / results[label, 'cython']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
