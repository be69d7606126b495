"""Exit criteria, one test each.  Run ``pytest tests/test_acceptance.py`` to
see a PASS/FAIL line per criterion in the terminal summary."""

import itertools
import os
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from skein3 import cli
from skein3.ideal import check_symmetries, verify_theorem3
from skein3.oracle import fuzz
from skein3.polyring import in_ideal_K, parse_poly, rem_mod_K
from skein3.trace import LAST, TraceEngine
from skein3.words import Word, parse_word

from conftest import random_word, record_acceptance

ROOT = Path(__file__).resolve().parent.parent
X = {1: "x1", 2: "x2", 3: "x3"}
PAIR = {(1, 2): "x12", (1, 3): "x13", (2, 3): "x23"}


def test_criterion_1_borromean(capsys):
    start = time.perf_counter()
    report = verify_theorem3(trace=TraceEngine().trace_poly)
    code = cli.main(["verify-borromean"])
    capsys.readouterr()
    elapsed = time.perf_counter() - start
    passed = sum(r.passed for r in report.results)
    ok = report.ok and len(report.results) == 16 and code == 0 and elapsed < 10
    record_acceptance(1, "Borromean ideal generators verified", ok, f"{passed}/16 labels, {elapsed:.2f}s")
    assert ok


def test_criterion_2_short_word_identities():
    t = TraceEngine().trace_poly
    cases = []
    for i in (1, 2, 3):
        cases.append((f"g{i}^2", f"{X[i]}^2 - 2"))
    for i, j in itertools.permutations((1, 2, 3), 2):
        cases.append((f"g{i}*g{j}^-1", f"{X[i]} {X[j]} - {PAIR[tuple(sorted((i, j)))]}"))
    cases += [
        ("g1^-1*g3*g2", "-x2 x13 - x3 x12 + x1 x2 x3 + x123"),
        ("g2^-1*g1*g3", "-x3 x12 - x1 x23 + x1 x2 x3 + x123"),
        ("g3^-1*g2*g1", "-x1 x23 - x2 x13 + x1 x2 x3 + x123"),
    ]
    bad = [w for w, p in cases if t(parse_word(w)) != parse_poly(p)]
    record_acceptance(2, "three-letter trace identities, coefficient-exact", not bad, f"{len(cases) - len(bad)}/{len(cases)}")
    assert not bad


def test_criterion_3_sigma23_swap():
    rep = check_symmetries()
    ok = all(holds for _, _, holds in rep.remark) and len(rep.remark) == 2
    record_acceptance(3, "-s23 maps Q[ab,g1]->Q[gd,g1] and Q[ab,g2]->Q[gd,g3]", ok)
    assert ok


def test_criterion_4_skein_relations():
    engine = TraceEngine()
    t, nf = engine.trace_poly, engine.trace_nf
    rng = random.Random(4)
    start = time.perf_counter()
    failures = 0
    pairs = 250
    for _ in range(pairs):
        n = rng.randint(2, 12)
        k = rng.randint(1, n - 1)
        u, v = random_word(rng, k), random_word(rng, n - k)
        if not rem_mod_K(t(u) * t(v) - t(u * v) - t(u * v.inverse())).is_zero():
            failures += 1
        w = u * v
        h = random_word(rng, 3)
        if not (nf(w) == nf(w.inverse()) == nf(v * u) == nf(h * w * h.inverse())):
            failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 30
    record_acceptance(4, "product relation and trace invariances", ok, f"{pairs} pairs, {failures} failures, {elapsed:.2f}s")
    assert ok


def test_criterion_5_sl2_oracle():
    start = time.perf_counter()
    report = fuzz(500, 12, seed=0, workers=1, trace=TraceEngine().trace_poly)
    elapsed = time.perf_counter() - start
    again = fuzz(25, 12, seed=0, workers=1)
    reproducible = again.to_dict()["failures"] == [f.to_dict() for f in report.failures if f.trial < 25]
    ok = report.ok and report.trials >= 500 and elapsed < 60 and reproducible
    record_acceptance(5, "exact SL2 oracle agrees, K vanishes", ok, f"{report.trials} trials, {len(report.failures)} failures, {elapsed:.2f}s")
    assert ok


def test_criterion_6_representative_independence():
    first, last = TraceEngine(), TraceEngine(split=LAST)
    rng = random.Random(6)
    n, differing, bad = 150, 0, 0
    for _ in range(n):
        w = random_word(rng, 12)
        p, q = first.trace_poly(w), last.trace_poly(w)
        differing += p != q
        bad += not in_ideal_K(p - q)
    ok = bad == 0
    record_acceptance(6, "alternate split agrees modulo K", ok, f"{n} words, {differing} distinct representatives, {bad} failures")
    assert ok


def _run(args, threads):
    env = dict(os.environ, PYTHONPATH=str(ROOT / "src"), SKEIN_THREADS=str(threads))
    proc = subprocess.run([sys.executable, "-m", "skein3", *args], capture_output=True, env=env, cwd=ROOT)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def test_criterion_7_determinism():
    ideal_args = ["ideal", "data/borromean.txt"]
    oracle_args = ["oracle", "--seed", "0", "--format", "json"]
    ideal_out = {_run(ideal_args, n) for n in (1, 1, 4)}
    oracle_out = {_run(oracle_args, n) for n in (1, 1, 4)}
    ok = len(ideal_out) == 1 and len(oracle_out) == 1
    record_acceptance(7, "ideal and oracle output byte-identical across runs and thread counts", ok)
    assert ok
