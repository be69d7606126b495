"""Reduced words in the free group on g1, g2, g3.

A word is stored as a tuple of syllables ``(generator, exponent)`` with
adjacent generators distinct and no zero exponents.  The empty tuple is the
identity ``e``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

GENERATORS = (1, 2, 3)
INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

Syllable = Tuple[int, int]


class WordSyntaxError(ValueError):
    """Raised when a word string does not match the word grammar."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


def _check_exponent(e: int) -> int:
    if not INT64_MIN <= e <= INT64_MAX:
        raise OverflowError(f"exponent {e} outside signed 64-bit range")
    return e


def free_reduce(syllables: Iterable[Syllable]) -> Tuple[Syllable, ...]:
    stack: list[Syllable] = []
    for g, e in syllables:
        if g not in GENERATORS:
            raise ValueError(f"unknown generator g{g}")
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            merged = _check_exponent(stack[-1][1] + e)
            stack.pop()
            if merged:
                stack.append((g, merged))
        else:
            stack.append((g, _check_exponent(e)))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        reduced = free_reduce(self.syllables)
        object.__setattr__(self, "syllables", reduced)

    def __len__(self):
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.syllables * abs(n))

    def __lt__(self, other: "Word") -> bool:
        return self.syllables < other.syllables

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    @property
    def weight(self) -> int:
        """Total letter length, the sum of absolute exponents."""
        return sum(abs(e) for _, e in self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"


IDENTITY = Word()


def gen(i: int, exponent: int = 1) -> Word:
    return Word(((i, exponent),))


def multiply(a: Word, b: Word) -> Word:
    return a * b


def invert(w: Word) -> Word:
    return w.inverse()


def format_word(w: Word) -> str:
    if not w.syllables:
        return "e"
    return "*".join(f"g{g}" if e == 1 else f"g{g}^{e}" for g, e in w.syllables)


_TOKEN = re.compile(r"\s*(?:(?P<gen>g[123])(?:\s*\^\s*(?P<exp>[+-]?\d+))?|(?P<star>\*))")


def parse_word(text: str) -> Word:
    """Parse ``g3*g2^-1*g1`` style text.  ``*`` or whitespace separates terms."""
    if text.strip() == "e":
        return IDENTITY
    syllables: list[Syllable] = []
    pos = 0
    expect_term = True
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise WordSyntaxError("unexpected character", text, pos)
        start = m.start("star") if m.group("star") else m.start("gen")
        if m.group("star"):
            if expect_term:
                raise WordSyntaxError("expected a generator", text, start)
            expect_term = True
        else:
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
            if not INT64_MIN <= exp <= INT64_MAX:
                raise WordSyntaxError("exponent outside signed 64-bit range", text, m.start("exp"))
            syllables.append((int(m.group("gen")[1]), exp))
            expect_term = False
        pos = m.end()
    if expect_term:
        raise WordSyntaxError("expected a generator", text, pos)
    return Word(tuple(syllables))


def cyclic_reduce(w: Word) -> Word:
    """Conjugate ``w`` so that its first and last syllables use different generators."""
    syl = list(w.syllables)
    while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        g = syl[0][0]
        e = _check_exponent(syl[0][1] + syl[-1][1])
        syl = syl[1:-1]
        if e:
            syl.insert(0, (g, e))
    return Word(tuple(syl))


def rotations(syl: Tuple[Syllable, ...]):
    for i in range(max(len(syl), 1)):
        yield syl[i:] + syl[:i]


def syllable_order(s: Syllable):
    """Sort key for syllables: generator first, then positive exponents before
    negative ones, smaller magnitude first."""
    g, e = s
    return (g, e < 0, abs(e))


def _word_order(syl: Tuple[Syllable, ...]):
    return [syllable_order(s) for s in syl]


def canonical_trace_key(w: Word) -> Word:
    """Representative of the class of ``w`` under conjugation and inversion.

    The word is cyclically reduced, then the least syllable tuple (under
    :func:`syllable_order`, shorter wins on a common prefix) among all rotations
    of it and of its inverse is returned.
    """
    c = cyclic_reduce(w)
    if not c.syllables:
        return c
    candidates = list(rotations(c.syllables)) + list(rotations(c.inverse().syllables))
    return Word(min(candidates, key=_word_order))
