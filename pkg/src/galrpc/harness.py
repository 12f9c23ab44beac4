"""Monte-Carlo measurements: decoding failure rate and unit density."""

from __future__ import annotations

import itertools
import random
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algebra import AlgebraElement, ga_is_invertible
from .errors import DecapFailure, ParameterError
from .field import FieldParams
from .group import GroupDescriptor
from .kem import KemParams, WeakGroupWarning, decap, encap, keygen

EXHAUSTIVE_LIMIT = 1 << 20


def trial_rng(seed: int, index: int) -> random.Random:
    """Independent per-trial generator derived from a master seed by counter."""
    return random.Random(f"galrpc/{seed}/{index}")


def kem_trial(params: KemParams, seed: int, index: int) -> str:
    """One keygen/encap/decap cycle: 'ok', 'failure' or 'mismatch'."""
    rng = trial_rng(seed, index)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", WeakGroupWarning)
        pk, sk = keygen(params, rng)
    ct, key = encap(pk, rng)
    try:
        return "ok" if decap(sk, ct) == key else "mismatch"
    except DecapFailure:
        return "failure"


def _trial_star(args):
    return kem_trial(*args)


@dataclass
class DfrReport:
    trials: int
    successes: int
    failures: int
    mismatches: int
    wall_time: float

    @property
    def failure_rate(self) -> float:
        return (self.failures + self.mismatches) / self.trials

    def lines(self) -> list[str]:
        """Deterministic key=value lines (wall time excluded)."""
        return [f"trials={self.trials}", f"successes={self.successes}",
                f"failures={self.failures}", f"mismatches={self.mismatches}",
                f"failure_rate={self.failure_rate:.6f}"]


def run_dfr(params: KemParams, trials: int, seed: int, jobs: int = 1) -> DfrReport:
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    start = time.perf_counter()
    args = [(params, seed, i) for i in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            outcomes = list(pool.map(_trial_star, args, chunksize=max(1, trials // (4 * jobs))))
    else:
        outcomes = [kem_trial(*a) for a in args]
    return DfrReport(trials, outcomes.count("ok"), outcomes.count("failure"),
                     outcomes.count("mismatch"), time.perf_counter() - start)


@dataclass
class DensityReport:
    samples: int
    zero_samples: int
    invertible: int
    exhaustive: bool

    @property
    def density(self) -> float:
        return self.invertible / self.samples

    @property
    def density_nonzero(self) -> float:
        nonzero = self.samples - self.zero_samples
        return self.invertible / nonzero if nonzero else 0.0

    def lines(self) -> list[str]:
        return [f"mode={'exhaustive' if self.exhaustive else 'sampled'}",
                f"samples={self.samples}", f"zero_samples={self.zero_samples}",
                f"invertible={self.invertible}", f"density={self.density:.6f}",
                f"density_nonzero={self.density_nonzero:.6f}"]


def unit_density(field: FieldParams, group: GroupDescriptor, samples: int = 1000,
                 seed: int = 0, exhaustive: bool = False) -> DensityReport:
    """Fraction of invertible elements, by enumeration or by sampling."""
    if exhaustive:
        total = field.order ** group.n
        if total > EXHAUSTIVE_LIMIT:
            raise ParameterError(f"{total} elements is too many to enumerate")
        elements = (AlgebraElement(field, group, c)
                    for c in itertools.product(range(field.order), repeat=group.n))
    else:
        if samples < 1:
            raise ParameterError("samples must be >= 1")
        rng = random.Random(seed)
        elements = (AlgebraElement.random(field, group, rng) for _ in range(samples))
    count = zeros = units = 0
    for a in elements:
        count += 1
        if a.is_zero():
            zeros += 1
        elif ga_is_invertible(a):
            units += 1
    return DensityReport(count, zeros, units, exhaustive)
