"""Sparse integer polynomials in the seven trace coordinates.

Variables are fixed, in the order ``x1, x2, x3, x12, x13, x23, x123``; a
monomial is a 7-tuple of exponents.  Coefficients are Python ints, so all
arithmetic is exact.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

VARIABLES = ("x1", "x2", "x3", "x12", "x13", "x23", "x123")
NVARS = len(VARIABLES)
X123 = NVARS - 1
_INDEX = {name: i for i, name in enumerate(VARIABLES)}

Monomial = Tuple[int, ...]
ONE: Monomial = (0,) * NVARS

Number = Union[int, Fraction]


def _unit(i: int, power: int = 1) -> Monomial:
    m = [0] * NVARS
    m[i] = power
    return tuple(m)


def term_order(m: Monomial):
    """Graded lexicographic key with x1 < x2 < ... < x123."""
    return (sum(m), m[::-1])


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps monomial -> nonzero int."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Monomial, int], int, None] = None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {ONE: terms} if terms else {}
        self._terms: Dict[Monomial, int] = {m: c for m, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, name: Union[str, int], power: int = 1) -> "Polynomial":
        i = _INDEX[name] if isinstance(name, str) else name
        return cls._raw({_unit(i, power): 1})

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order, highest first."""
        return sorted(self._terms.items(), key=lambda t: term_order(t[0]), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: Sequence[int]) -> int:
        return self._terms.get(tuple(m), 0)

    def constant_term(self) -> int:
        return self._terms.get(ONE, 0)

    def degree(self, var: Union[str, int, None] = None) -> int:
        if not self._terms:
            return -1
        if var is None:
            return max(sum(m) for m in self._terms)
        i = _INDEX[var] if isinstance(var, str) else var
        return max(m[i] for m in self._terms)

    # ring operations

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, int] = {}
        get = out.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3],
                     m1[4] + m2[4], m1[5] + m2[5], m1[6] + m2[6])
                out[m] = get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, k: int) -> "Polynomial":
        if not k:
            return Polynomial()
        return Polynomial._raw({m: k * c for m, c in self._terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = Polynomial(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    # structure with respect to x123

    def split_x123(self) -> Dict[int, "Polynomial"]:
        """Coefficients of powers of x123, as polynomials in the other six variables."""
        parts: Dict[int, Dict[Monomial, int]] = {}
        for m, c in self._terms.items():
            parts.setdefault(m[X123], {})[m[:X123] + (0,)] = c
        return {d: Polynomial._raw(t) for d, t in parts.items()}


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a - b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def negate(a: Polynomial) -> Polynomial:
    return -a


def scalar_mul(a: Polynomial, k: int) -> Polynomial:
    return a.scale(k)


x1, x2, x3, x12, x13, x23, x123 = (Polynomial.var(i) for i in range(NVARS))


def fricke_K() -> Polynomial:
    """The relation among the seven trace coordinates of a free group of rank 3."""
    return _K


_K = (
    x123**2
    - (x12 * x3 + x13 * x2 + x23 * x1 - x1 * x2 * x3) * x123
    + x1**2 + x2**2 + x3**2 + x12**2 + x23**2 + x13**2
    - x1 * x2 * x12 - x1 * x3 * x13 - x2 * x3 * x23 + x12 * x13 * x23
    - 4
)
# K = x123^2 - _K_LINEAR * x123 + _K_CONST
_K_LINEAR = x12 * x3 + x13 * x2 + x23 * x1 - x1 * x2 * x3
_K_CONST = _K - x123**2 + _K_LINEAR * x123


def divmod_K(p: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """Return ``(q, r)`` with ``p == q*K + r`` and ``r`` of degree <= 1 in x123.

    ``K`` is monic of degree 2 in x123, so the division stays over the integers.
    """
    parts = {d: c.terms for d, c in p.split_x123().items()}
    quotient: Dict[Monomial, int] = {}
    lin = _K_LINEAR.split_x123()[0]
    const = _K_CONST.split_x123()[0]
    while True:
        d = max((d for d, t in parts.items() if t), default=0)
        if d < 2:
            break
        lead = parts.pop(d)
        lead_p = Polynomial._raw(lead)
        for m, c in lead.items():
            q = m[:X123] + (d - 2,)
            quotient[q] = quotient.get(q, 0) + c
        # x123^d = x123^(d-2) * (K + lin*x123 - const)
        for deg, piece in ((d - 1, lead_p * lin), (d - 2, -(lead_p * const))):
            bucket = parts.setdefault(deg, {})
            for m, c in piece._terms.items():
                s = bucket.get(m, 0) + c
                if s:
                    bucket[m] = s
                else:
                    bucket.pop(m, None)
    rem: Dict[Monomial, int] = {}
    for d, t in parts.items():
        for m, c in t.items():
            rem[m[:X123] + (d,)] = c
    return Polynomial(quotient), Polynomial(rem)


def rem_mod_K(p: Polynomial) -> Polynomial:
    return divmod_K(p)[1]


def in_ideal_K(p: Polynomial) -> bool:
    return rem_mod_K(p).is_zero()


def evaluate(p: Polynomial, point: Sequence[Number]) -> Number:
    """Exact value of ``p`` at a 7-vector of ints or Fractions."""
    if len(point) != NVARS:
        raise ValueError(f"point must have {NVARS} coordinates")
    pows = [dict() for _ in range(NVARS)]
    total: Number = 0
    for m, c in p._terms.items():
        v: Number = c
        for i, e in enumerate(m):
            if e:
                cache = pows[i]
                if e not in cache:
                    cache[e] = point[i] ** e
                v *= cache[e]
        total += v
    return total


SIGMA_23 = {"x1": "x1", "x2": "x3", "x3": "x2", "x12": "x13", "x13": "x12", "x23": "x23", "x123": "x123"}


def index_permutation(perm: Mapping[int, int]) -> Dict[str, str]:
    """Variable relabeling induced by permuting generator indices.

    ``x123`` is always fixed, so ``{1: 1, 2: 3, 3: 2}`` gives :data:`SIGMA_23`.
    """
    out = {}
    for name in VARIABLES:
        if name == "x123":
            out[name] = name
            continue
        idx = sorted(perm[int(ch)] for ch in name[1:])
        out[name] = "x" + "".join(map(str, idx))
    return out


def substitute_indices(p: Polynomial, mapping: Mapping[str, str]) -> Polynomial:
    """Relabel variables by a bijection of the seven variable names."""
    if sorted(mapping) != sorted(VARIABLES) or sorted(mapping.values()) != sorted(VARIABLES):
        raise ValueError("mapping must be a bijection of the seven variables")
    target = [_INDEX[mapping[name]] for name in VARIABLES]
    out: Dict[Monomial, int] = {}
    for m, c in p._terms.items():
        new = [0] * NVARS
        for i, e in enumerate(m):
            new[target[i]] += e
        out[tuple(new)] = c
    return Polynomial._raw(out)


# text and JSON


def _format_monomial(m: Monomial) -> str:
    parts = []
    for i in range(NVARS):
        e = m[i]
        if e == 1:
            parts.append(VARIABLES[i])
        elif e:
            parts.append(f"{VARIABLES[i]}^{e}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    items = p.items()
    if not items:
        return "0"
    out = []
    for k, (m, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _format_monomial(m)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


class PolySyntaxError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<var>x\d+)|(?P<int>\d+)|(?P<op>[-+*^()]))")


def _tokenize(text: str):
    pos, n = 0, len(text)
    toks = []
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos]!r} at position {pos}")
        if m.group("var"):
            name = m.group("var")
            if name not in _INDEX:
                raise PolySyntaxError(f"unknown variable {name!r} at position {m.start('var')}")
            toks.append(("var", name, m.start("var")))
        elif m.group("int"):
            toks.append(("int", int(m.group("int")), m.start("int")))
        else:
            toks.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    toks.append(("end", None, n))
    return toks


class _Parser:
    # expr   := ["+"|"-"] term (("+"|"-") term)*
    # term   := factor (["*"] factor)*
    # factor := atom ["^" int]
    # atom   := int | var | "(" expr ")"

    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise PolySyntaxError(f"expected {op!r} at position {t[2]}")

    def expr(self):
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        result = self.term().scale(sign)
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                rhs = self.term()
                result = result + rhs if t[1] == "+" else result - rhs
            else:
                return result

    def term(self):
        result = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                result = result * self.factor()
            elif t[0] in ("var", "int") or (t[0] == "op" and t[1] == "("):
                result = result * self.factor()
            else:
                return result

    def factor(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "int":
                raise PolySyntaxError(f"expected integer exponent at position {e[2]}")
            return base ** e[1]
        return base

    def atom(self):
        t = self.take()
        if t[0] == "int":
            return Polynomial(t[1])
        if t[0] == "var":
            return Polynomial.var(t[1])
        if t[0] == "op" and t[1] == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise PolySyntaxError(f"unexpected token at position {t[2]}")

    def parse(self):
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise PolySyntaxError(f"trailing input at position {t[2]}")
        return p


def parse_poly(text: str) -> Polynomial:
    """Parse polynomial text such as ``x123^2 - 2*x1*x23 + 4``.

    ``*`` is optional between factors and parentheses are allowed.  Variable
    names are matched greedily, so ``x123`` is never read as ``x12*3``.
    """
    return _Parser(text).parse()


def to_terms(p: Polynomial) -> list:
    return [{"coeff": str(c), "exps": list(m)} for m, c in p.items()]


def to_json(p: Polynomial) -> str:
    return json.dumps(to_terms(p))


def from_terms(terms: Iterable[Mapping]) -> Polynomial:
    out: Dict[Monomial, int] = {}
    for t in terms:
        exps = tuple(int(e) for e in t["exps"])
        if len(exps) != NVARS or min(exps) < 0:
            raise ValueError(f"bad exponent vector {t['exps']!r}")
        out[exps] = out.get(exps, 0) + int(t["coeff"])
    return Polynomial(out)


def from_json(text: str) -> Polynomial:
    return from_terms(json.loads(text))
