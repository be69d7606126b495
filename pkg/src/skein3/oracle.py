"""Exact SL2 representations as an independent check on trace polynomials.

Everything here is exact: matrix entries are ``Fraction`` values and the
trace engine's output is evaluated at the seven coordinates of a
representation with no rounding anywhere.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from .polyring import Polynomial, evaluate, fricke_K
from .trace import trace_poly
from .words import Word, format_word

SHEAR_BOUND = 3
DEFAULT_STEPS = 4
EXPONENTS = (-3, -2, -1, 1, 2, 3)


@dataclass(frozen=True)
class Mat2:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Fraction:
        return self.a + self.d

    def inverse(self) -> "Mat2":
        """Inverse of a determinant-one matrix."""
        return Mat2(self.d, -self.b, -self.c, self.a)

    def power(self, n: int) -> "Mat2":
        base = self if n >= 0 else self.inverse()
        result = Mat2.identity()
        for _ in range(abs(n)):
            result = result @ base
        return result


@dataclass(frozen=True)
class SL2Rep:
    m1: Mat2
    m2: Mat2
    m3: Mat2

    def __post_init__(self):
        for i, m in enumerate((self.m1, self.m2, self.m3), 1):
            if m.det() != 1:
                raise ValueError(f"m{i} has determinant {m.det()}, expected 1")

    def image(self, i: int) -> Mat2:
        return (self.m1, self.m2, self.m3)[i - 1]

    @classmethod
    def trivial(cls) -> "SL2Rep":
        return cls(Mat2.identity(), Mat2.identity(), Mat2.identity())


def random_shear_product(rng: random.Random, steps: int) -> Mat2:
    m = Mat2.identity()
    for _ in range(steps):
        t = rng.randint(-SHEAR_BOUND, SHEAR_BOUND)
        shear = Mat2(1, t, 0, 1) if rng.random() < 0.5 else Mat2(1, 0, t, 1)
        m = m @ shear
    return m


def random_rep(seed: int, steps: int = DEFAULT_STEPS) -> SL2Rep:
    """Three products of ``steps`` random unitriangular shears, seeded."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    rng = random.Random(seed)
    return _rep_from_rng(rng, steps)


def _rep_from_rng(rng: random.Random, steps: int) -> SL2Rep:
    return SL2Rep(*(random_shear_product(rng, steps) for _ in range(3)))


def random_word(rng: random.Random, max_syllables: int) -> Word:
    n = rng.randint(1, max_syllables)
    return Word(tuple((rng.randint(1, 3), rng.choice(EXPONENTS)) for _ in range(n)))


def word_matrix(rep: SL2Rep, w: Word) -> Mat2:
    m = Mat2.identity()
    for g, e in w.syllables:
        m = m @ rep.image(g).power(e)
    return m


def trace_point(rep: SL2Rep) -> Tuple[Fraction, ...]:
    """``(tr m1, tr m2, tr m3, tr m1m2, tr m1m3, tr m2m3, tr m1m2m3)``."""
    m1, m2, m3 = rep.m1, rep.m2, rep.m3
    return (
        m1.trace(),
        m2.trace(),
        m3.trace(),
        (m1 @ m2).trace(),
        (m1 @ m3).trace(),
        (m2 @ m3).trace(),
        (m1 @ m2 @ m3).trace(),
    )


def check_word(
    rep: SL2Rep, w: Word, trace: Callable[[Word], Polynomial] = trace_poly
) -> bool:
    return evaluate(trace(w), trace_point(rep)) == word_matrix(rep, w).trace()


def derive_seed(seed: int, trial: int) -> int:
    digest = hashlib.sha256(f"{seed}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass
class Failure:
    trial: int
    seed: int
    check: str
    word: str
    expected: str
    got: str

    def to_dict(self) -> dict:
        return {
            "trial": self.trial,
            "seed": self.seed,
            "check": self.check,
            "word": self.word,
            "expected": self.expected,
            "got": self.got,
        }


@dataclass
class FuzzReport:
    trials: int
    max_syllables: int
    seed: int
    failures: List[Failure] = field(default_factory=list)
    elapsed_ms: Optional[float] = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "trials": self.trials,
            "max_syllables": self.max_syllables,
            "seed": self.seed,
            "failures": [f.to_dict() for f in self.failures],
        }
        if timing:
            d["elapsed_ms"] = self.elapsed_ms
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2)


def run_trial(
    trial: int,
    seed: int,
    max_syllables: int,
    steps: int = DEFAULT_STEPS,
    trace: Callable[[Word], Polynomial] = trace_poly,
) -> List[Failure]:
    """One fuzz trial: a random representation, a word ``u`` and a partner ``v``.

    Checks the trace polynomial of ``u`` against the matrix trace, that ``K``
    vanishes at the trace point, and ``tr(UV) + tr(UV^-1) = tr(U) tr(V)``.
    """
    s = derive_seed(seed, trial)
    rng = random.Random(s)
    rep = _rep_from_rng(rng, steps)
    u = random_word(rng, max_syllables)
    v = random_word(rng, max_syllables)
    point = trace_point(rep)
    out = []

    U = word_matrix(rep, u)
    got = evaluate(trace(u), point)
    if got != U.trace():
        out.append(Failure(trial, s, "trace", format_word(u), str(U.trace()), str(got)))

    k = evaluate(fricke_K(), point)
    if k != 0:
        out.append(Failure(trial, s, "K", format_word(u), "0", str(k)))

    V = word_matrix(rep, v)
    lhs = (U @ V).trace() + (U @ V.inverse()).trace()
    rhs = U.trace() * V.trace()
    if lhs != rhs:
        pair = f"{format_word(u)} | {format_word(v)}"
        out.append(Failure(trial, s, "product", pair, str(rhs), str(lhs)))
    return out


def _run_chunk(args) -> List[Failure]:
    trials, seed, max_syllables, steps = args
    failures = []
    for t in trials:
        failures.extend(run_trial(t, seed, max_syllables, steps))
    return failures


def worker_count(default: int = 1) -> int:
    raw = os.environ.get("SKEIN_THREADS")
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


def fuzz(
    trials: int,
    max_syllables: int = 12,
    seed: int = 0,
    steps: int = DEFAULT_STEPS,
    workers: Optional[int] = None,
    trace: Optional[Callable[[Word], Polynomial]] = None,
) -> FuzzReport:
    """Run ``trials`` independently seeded oracle trials.

    Trial ``t`` draws everything from ``derive_seed(seed, t)``, so the report
    does not depend on ``workers``.  A custom ``trace`` forces a single worker.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if max_syllables < 1:
        raise ValueError("max_syllables must be >= 1")
    workers = worker_count() if workers is None else max(1, workers)
    start = time.perf_counter()
    failures: List[Failure] = []
    if trace is not None or workers == 1:
        fn = trace or trace_poly
        for t in range(trials):
            failures.extend(run_trial(t, seed, max_syllables, steps, fn))
    else:
        chunks = [list(range(i, trials, workers)) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_chunk, [(c, seed, max_syllables, steps) for c in chunks]):
                failures.extend(part)
    failures.sort(key=lambda f: (f.trial, f.check))
    elapsed = (time.perf_counter() - start) * 1000
    return FuzzReport(trials, max_syllables, seed, failures, elapsed)
