"""Trace polynomials of words in F3 by skein reduction.

For a reduced word ``w`` the engine returns an integer polynomial ``P`` in
the seven trace coordinates with ``tr(rho(w)) = P(trace_point(rho))`` for
every SL2 representation ``rho``.  The rewriting works on the canonical key
of ``w`` (conjugation and inversion do not change traces) and applies the
first rule that matches:

1. the identity has trace 2;
2. the seven basic words map to their variables;
3. a syllable ``g^m`` with ``|m| >= 2``:
   ``[u g^m v] = x_g [u g^(m-s) v] - [u g^(m-2s) v]`` with ``s = sign(m)``;
4. a generator occurring in two syllables: with ``k = X Y Z`` where ``X``
   ends and ``Y`` ends on the same generator,
   ``[XYZ] = [XZ][Y] - [X Y^-1 Z]``;
5. an inverted syllable (on the orientation of ``k`` with fewer of them):
   ``[u g^-1 v] = x_g [uv] - [u g v]``;
6. the remaining words are rotations of ``g1 g3 g2``:
   ``[g1 g3 g2] = x1 x23 + x2 x13 + x3 x12 - x1 x2 x3 - x123``.

Each rule strictly lowers (letter length, syllable count, inverted syllables
on the minority orientation, unsorted flag), so the recursion terminates.
"""

from __future__ import annotations

import threading
from typing import Dict, Tuple

from .polyring import Polynomial, rem_mod_K, x1, x2, x3, x12, x13, x23, x123
from .words import Syllable, Word, canonical_trace_key, gen

FIRST = "first"
LAST = "last"

_VARS = {1: x1, 2: x2, 3: x3}

BASE_WORDS = {
    gen(1): x1,
    gen(2): x2,
    gen(3): x3,
    gen(1) * gen(2): x12,
    gen(1) * gen(3): x13,
    gen(2) * gen(3): x23,
    gen(1) * gen(2) * gen(3): x123,
}
_BASE_KEYS = {canonical_trace_key(w).syllables: p for w, p in BASE_WORDS.items()}

_G1G3G2 = x1 * x23 + x2 * x13 + x3 * x12 - x1 * x2 * x3 - x123


def _repeat_split(syl: Tuple[Syllable, ...], split: str) -> Tuple[int, int]:
    """Positions ``(s1, s2)``, ``s1 < s2``, of two syllables on one generator.

    ``first``: ``s2`` is the earliest syllable whose generator already
    occurred, ``s1`` that earlier occurrence.  ``last``: ``s1`` is the latest
    syllable whose generator occurs again, ``s2`` its next occurrence.
    """
    n = len(syl)
    if split == FIRST:
        seen: Dict[int, int] = {}
        for j, (g, _) in enumerate(syl):
            if g in seen:
                return seen[g], j
            seen[g] = j
    else:
        nxt: Dict[int, int] = {}
        for j in range(n - 1, -1, -1):
            g = syl[j][0]
            if g in nxt:
                return j, nxt[g]
            nxt[g] = j
    raise ValueError("no repeated generator")


class TraceEngine:
    """Memoized trace-polynomial calculator.

    ``split`` picks where rule 4 cuts a word with a repeated generator.  The
    two choices give representatives that agree modulo ``K``.
    """

    def __init__(self, split: str = FIRST):
        if split not in (FIRST, LAST):
            raise ValueError(f"split must be {FIRST!r} or {LAST!r}")
        self.split = split
        self._cache: Dict[Tuple[Syllable, ...], Polynomial] = dict(_BASE_KEYS)
        self._cache[()] = Polynomial(2)
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._cache)

    def clear(self):
        with self._lock:
            self._cache = dict(_BASE_KEYS)
            self._cache[()] = Polynomial(2)

    def trace_poly(self, w: Word) -> Polynomial:
        key = canonical_trace_key(w).syllables
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        result = self._reduce(key)
        with self._lock:
            return self._cache.setdefault(key, result)

    def trace_nf(self, w: Word) -> Polynomial:
        return rem_mod_K(self.trace_poly(w))

    def _reduce(self, k: Tuple[Syllable, ...]) -> Polynomial:
        t = self.trace_poly

        for j, (g, m) in enumerate(k):
            if abs(m) >= 2:
                s = 1 if m > 0 else -1
                u, v = k[:j], k[j + 1:]
                once = Word(u + ((g, m - s),) + v)
                twice = Word(u + ((g, m - 2 * s),) + v)
                return _VARS[g] * t(once) - t(twice)

        gens = [g for g, _ in k]
        if len(set(gens)) < len(gens):
            s1, s2 = _repeat_split(k, self.split)
            X, Y, Z = Word(k[: s1 + 1]), Word(k[s1 + 1: s2 + 1]), Word(k[s2 + 1:])
            return t(X * Z) * t(Y) - t(X * Y.inverse() * Z)

        inverted = sum(1 for _, e in k if e < 0)
        if inverted:
            if 2 * inverted > len(k):
                k = Word(k).inverse().syllables
            j = next(i for i, (_, e) in enumerate(k) if e < 0)
            g = k[j][0]
            u, v = k[:j], k[j + 1:]
            return _VARS[g] * t(Word(u + v)) - t(Word(u + ((g, 1),) + v))

        if len(k) == 3:
            return _G1G3G2
        raise AssertionError(f"unreachable trace reduction state {k!r}")


_default = TraceEngine()


def default_engine() -> TraceEngine:
    return _default


def trace_poly(w: Word) -> Polynomial:
    """Integer polynomial ``P_w`` in the trace coordinates with ``Phi(P_w) = [w]``."""
    return _default.trace_poly(w)


def trace_nf(w: Word) -> Polynomial:
    """Normal form of ``[w]`` in ``Z[x1..x123]/(K)``: x123-degree at most 1."""
    return _default.trace_nf(w)
