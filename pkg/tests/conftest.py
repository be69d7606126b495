import random

import pytest
from hypothesis import strategies as st

from skein3.polyring import NVARS, Polynomial
from skein3.words import Word

syllables = st.tuples(st.integers(1, 3), st.sampled_from([-3, -2, -1, 1, 2, 3]))


def words(max_syllables=6):
    return st.lists(syllables, max_size=max_syllables).map(lambda s: Word(tuple(s)))


def polynomials(max_terms=5, max_exp=2, max_coeff=20):
    monomial = st.tuples(*[st.integers(0, max_exp)] * NVARS)
    coeff = st.integers(-max_coeff, max_coeff)
    return st.dictionaries(monomial, coeff, max_size=max_terms).map(Polynomial)


def random_word(rng: random.Random, max_syllables: int) -> Word:
    n = rng.randint(1, max_syllables)
    return Word(tuple((rng.randint(1, 3), rng.choice([-3, -2, -1, 1, 2, 3])) for _ in range(n)))


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_LINES = []


def record_acceptance(number, name, ok, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name}" + (f" ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
