"""Ideals of skein algebras of 3-generator, 2-relator groups.

For ``G = <g1, g2, g3 | alpha = beta, gamma = delta>`` the kernel of the
map from ``Z[x1..x123]`` onto the skein algebra of ``G`` is generated by
``K`` together with the sixteen differences ``P(alpha g) - P(beta g)`` and
``P(gamma g) - P(delta g)`` over the eight words
``g = g1^i1 g2^i2 g3^i3`` with ``i1, i2, i3 in {0, 1}``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from .polyring import (
    VARIABLES,
    Polynomial,
    divmod_K,
    fricke_K,
    format_poly,
    index_permutation,
    parse_poly,
    substitute_indices,
    to_terms,
)
from .trace import trace_poly
from .words import IDENTITY, Word, WordSyntaxError, gen, parse_word

PAIRS = ("ab", "gd")

# Binary order on (i1, i2, i3).
COSETS: Tuple[str, ...] = ("e", "g3", "g2", "g2g3", "g1", "g1g3", "g1g2", "g1g2g3")

Label = Tuple[str, str]


def coset_word(name: str) -> Word:
    if name == "e":
        return IDENTITY
    w = IDENTITY
    for digit in re.findall(r"g(\d)", name):
        w = w * gen(int(digit))
    return w


def format_label(label: Label) -> str:
    return f"Q[{label[0]},{label[1]}]"


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    """Three generators and the relations ``alpha = beta``, ``gamma = delta``."""

    alpha: Word
    beta: Word
    gamma: Word
    delta: Word

    @property
    def relator_pairs(self) -> Tuple[Tuple[Word, Word], Tuple[Word, Word]]:
        return (self.alpha, self.beta), (self.gamma, self.delta)

    def pair(self, name: str) -> Tuple[Word, Word]:
        return self.relator_pairs[PAIRS.index(name)]

    def to_text(self) -> str:
        lines = ["generators: g1 g2 g3"]
        for a, b in self.relator_pairs:
            lines.append(f"relation: {a} = {b}")
        return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    """Read a presentation file.

    Format::

        generators: g1 g2 g3
        relation: g3*g2^-1*g1*g2*g1^-1 = g2^-1*g1*g2*g1^-1*g3
        relation: g2*g1^-1*g3*g1*g3^-1 = g1^-1*g3*g1*g3^-1*g2

    Blank lines and ``#`` comments are ignored.
    """
    generators = None
    relations: List[Tuple[Word, Word]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep:
            raise PresentationError(f"line {lineno}: expected 'generators:' or 'relation:'")
        if key == "generators":
            if generators is not None:
                raise PresentationError(f"line {lineno}: duplicate generators line")
            generators = rest.split()
            if generators != ["g1", "g2", "g3"]:
                raise PresentationError(
                    f"line {lineno}: generators must be exactly 'g1 g2 g3', got {rest.strip()!r}"
                )
        elif key == "relation":
            lhs, eq, rhs = rest.partition("=")
            if not eq:
                raise PresentationError(f"line {lineno}: relation needs '='")
            try:
                relations.append((parse_word(lhs.strip()), parse_word(rhs.strip())))
            except WordSyntaxError as exc:
                raise PresentationError(f"line {lineno}: {exc}") from exc
        else:
            raise PresentationError(f"line {lineno}: unknown key {key!r}")
    if generators is None:
        raise PresentationError("missing 'generators: g1 g2 g3' line")
    if len(relations) != 2:
        raise PresentationError(f"expected 2 relations, got {len(relations)}")
    (a, b), (c, d) = relations
    return Presentation(a, b, c, d)


def borromean_presentation() -> Presentation:
    """Wirtinger-derived presentation of the Borromean rings group."""
    return Presentation(
        alpha=parse_word("g3*g2^-1*g1*g2*g1^-1"),
        beta=parse_word("g2^-1*g1*g2*g1^-1*g3"),
        gamma=parse_word("g2*g1^-1*g3*g1*g3^-1"),
        delta=parse_word("g1^-1*g3*g1*g3^-1*g2"),
    )


def generator_labels() -> List[Label]:
    """The sixteen labels, coset-major in binary order, ``ab`` before ``gd``."""
    return [(pair, coset) for coset in COSETS for pair in PAIRS]


@dataclass
class IdealGenerators:
    k: Polynomial
    diffs: List[Tuple[Label, Polynomial]]

    def polynomials(self) -> List[Polynomial]:
        return [self.k] + [p for _, p in self.diffs]

    def labeled(self) -> List[Tuple[str, Polynomial]]:
        return [("K", self.k)] + [(format_label(l), p) for l, p in self.diffs]


def theorem2_generators(
    p: Presentation, trace: Callable[[Word], Polynomial] = trace_poly
) -> IdealGenerators:
    """``K`` and the sixteen trace differences generating the ideal of ``p``."""
    diffs = []
    for pair, coset in generator_labels():
        a, b = p.pair(pair)
        g = coset_word(coset)
        diffs.append(((pair, coset), trace(a * g) - trace(b * g)))
    return IdealGenerators(fricke_K(), diffs)


# Borromean rings: the twelve nonzero generators besides K, transcribed term for term.
_THEOREM3_TEXT: Dict[Label, str] = {
    ("ab", "g1"): "-2 x12 x23 + 2 x2 x123 - x1^2 x2 x123 + x1 x2 x12 x13 + x1 x2 x23"
                  " + x1 x12 x123 - x12^2 x13 - x2^2 x13",
    ("gd", "g1"): "2x13x23 - 2x3x123 + x1^2x3x123 - x1x3x12x13 - x1x3x23"
                  " - x1x13x123 + x12x13^2 + x3^2x12",
    ("ab", "g2"): "-x1x2x12x23 + x12^2x23 + x1^2x23 + x1x2^2x123 - x2x12x123"
                  " - 2x1x123 - x1x2x13 + 2x12x13",
    ("gd", "g3"): "x1x3x13x23 - x13^2x23 - x1^2x23 - x1x3^2x123 + x3x13x123"
                  " + 2x1x123 + x1x3x12 - 2x12x13",
    ("ab", "g1g2"): "-x1^2x123 + x2^2x123 + x1x12x13 - x2x12x23 - 2x2x13 + 2x1x23",
    ("gd", "g1g2"): "x1^3 + x1x3^2 + x1x13^2 - x1^2x3x13 - 4x1 + x1^2x2x3x123 - x1x2x13x123"
                    " - x1x2x3x23 - x1x3x12x123 + x12x13x123 - x1^2x2x12 + x1x12^2"
                    " + x3x12x23 - x2x3x123 + x2x13x23 + x1x2^2",
    ("ab", "g1g3"): "-4x1 + x1^3 + x1x12^2 + x12x13x123 + x1x13^2 - x1^2x2x12 - x1x2x13x123"
                    " + x1x2^2 + x2x13x23 - x1^2x3x13 - x3x12^2x13 + x2x3x123"
                    " + x1x2x3x12x13 - x2^2x3x13 - x3x12x23 + x1x3^2",
    ("gd", "g1g3"): "x1^2 x123 - x3^2x123 - x1^3 x23 + x3^3x12 - x1 x12 x13 + x3x13 x23"
                    " + 2 x1 x23 - 2 x3x12 - x1 x13^2 x23 + x3x12 x13^2 + x1^2 x3 x12 - x1x3^2x23"
                    " + x1^2x3 x13 x23 - x1 x3^2x12 x13",
    ("ab", "g2g3"): "x2^3 + x2x3^2 + x2x23^2 - x2^2x3x23 - 4x2 + x1x2^2x3x123 - x1x2x23x123"
                    " - x1x2x3x13 - x2x3x12x123 + x12x23x123 - x1x2^2x12 + x2x12^2"
                    " + x3x12x13 - x1x3x123 + x1x13x23 + x1^2x2",
    ("gd", "g2g3"): "-x3^3 - x1^2x3 - x3x13^2 + x1x3^2x13 + 4x3 - x1x2x3^2x123 + x2x3x13x123"
                    " + x1x2x3x12 + x1x3x23x123 - x13x23x123 + x2x3^2x23 - x3x23^2"
                    " - x1x12x23 + x1x2x123 - x2x12x13 - x2^2x3",
    ("ab", "g1g2g3"): "-x2x3x12x23 + x3^2x12 + x1x3x23 - x2x3x13 - 4x12 + x2^2x12"
                      " + x12^3 + x1^2x12 - x1x2x12^2 - x1x2x123^2 + x12x123^2"
                      " + x1x2x3x12x123 - x3x12^2x123 + x2x23x123 - x1^2x3x123 + x1x13x123",
    ("gd", "g1g2g3"): "(-x1x23 + x3x12)x13x123 + (x1x12 - x3x23)x123"
                      " + (x3^2 - x1^2)x12x23 + (x23^2 - x12^2)x13 + (x1^2x3x23 - x1x3^2x12)x123"
                      " + (x12^2 - x23^2)x1x3 + (x1x23 - x3x12)x2",
}

ZERO_LABELS = (("ab", "e"), ("gd", "e"), ("gd", "g2"), ("ab", "g3"))


def theorem3_polynomials() -> List[Tuple[str, Polynomial]]:
    """``K`` followed by the twelve Borromean generators."""
    out = [("K", fricke_K())]
    out.extend((format_label(label), parse_poly(text)) for label, text in _THEOREM3_TEXT.items())
    return out


def theorem3_table() -> Dict[Label, Polynomial]:
    """All sixteen Borromean targets by label; the four absent ones are zero."""
    table = {label: parse_poly(text) for label, text in _THEOREM3_TEXT.items()}
    for label in ZERO_LABELS:
        table[label] = Polynomial()
    return {label: table[label] for label in generator_labels()}


@dataclass
class LabelResult:
    label: Label
    passed: bool
    quotient: Polynomial
    remainder: Polynomial
    zero_target: bool

    def to_dict(self) -> dict:
        d = {
            "label": format_label(self.label),
            "status": "pass" if self.passed else "fail",
            "target": "zero" if self.zero_target else "Q",
            "witness_quotient": to_terms(self.quotient),
        }
        if not self.passed:
            d["remainder"] = format_poly(self.remainder)
        return d


@dataclass
class VerificationReport:
    results: List[LabelResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    def failures(self) -> List[Label]:
        return [r.label for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        return {"labels": [r.to_dict() for r in self.results], "all_passed": self.ok}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def verify_theorem3(
    presentation: Optional[Presentation] = None,
    targets: Optional[Mapping[Label, Polynomial]] = None,
    trace: Callable[[Word], Polynomial] = trace_poly,
) -> VerificationReport:
    """Check ``P(a g) - P(b g) - Q`` is a multiple of ``K`` for all sixteen labels.

    The quotient by ``K`` is kept as a witness for each label.
    """
    presentation = presentation or borromean_presentation()
    targets = theorem3_table() if targets is None else targets
    gens = theorem2_generators(presentation, trace)
    report = VerificationReport()
    for label, diff in gens.diffs:
        target = targets.get(label, Polynomial())
        q, r = divmod_K(diff - target)
        report.results.append(LabelResult(label, r.is_zero(), q, r, target.is_zero()))
    return report


# Symmetries among the Borromean generators.

PERMUTATIONS: Dict[str, Dict[int, int]] = {
    "id": {1: 1, 2: 2, 3: 3},
    "s12": {1: 2, 2: 1, 3: 3},
    "s13": {1: 3, 2: 2, 3: 1},
    "s23": {1: 1, 2: 3, 3: 2},
    "c123": {1: 2, 2: 3, 3: 1},
    "c132": {1: 3, 2: 1, 3: 2},
}
INDEX_MAPS = {name: index_permutation(p) for name, p in PERMUTATIONS.items()}
SIGMA23 = INDEX_MAPS["s23"]

REMARK_PAIRS = ((("ab", "g1"), ("gd", "g1")), (("ab", "g2"), ("gd", "g3")))
SELF_SYMMETRIC = (("ab", "g1g2"), ("gd", "g1g3"), ("gd", "g1g2g3"))
TRIPLE = (("gd", "g1g2"), ("ab", "g2g3"), ("gd", "g2g3"))


def relations_between(p: Polynomial, q: Polynomial, include_identity=True) -> List[Tuple[str, int]]:
    """All ``(map, sign)`` with ``sign * map(p) == q`` over index permutations."""
    found = []
    for name, m in INDEX_MAPS.items():
        if name == "id" and not include_identity:
            continue
        image = substitute_indices(p, m)
        for sign in (1, -1):
            if image.scale(sign) == q:
                found.append((name, sign))
    return found


@dataclass
class SymmetryReport:
    remark: List[Tuple[Label, Label, bool]]
    self_symmetries: Dict[Label, List[Tuple[str, int]]]
    triple: Dict[Tuple[Label, Label], List[Tuple[str, int]]]

    @property
    def ok(self) -> bool:
        return all(ok for _, _, ok in self.remark) and all(self.self_symmetries.values())

    def to_dict(self) -> dict:
        return {
            "remark": [
                {"from": format_label(a), "to": format_label(b), "map": "-s23", "holds": ok}
                for a, b, ok in self.remark
            ],
            "self_symmetries": [
                {"label": format_label(l), "found": [f"{'-' if s < 0 else '+'}{m}" for m, s in found]}
                for l, found in self.self_symmetries.items()
            ],
            "triple": [
                {"from": format_label(a), "to": format_label(b),
                 "found": [f"{'-' if s < 0 else '+'}{m}" for m, s in found]}
                for (a, b), found in self.triple.items()
            ],
            "all_passed": self.ok,
        }


def check_symmetries(targets: Optional[Mapping[Label, Polynomial]] = None) -> SymmetryReport:
    """Index-swap symmetries of the Borromean generators.

    Asserted: ``-s23`` carries ``Q[ab,g1]`` to ``Q[gd,g1]`` and ``Q[ab,g2]``
    to ``Q[gd,g3]``.  Reported: the nontrivial index permutations and signs
    fixing each of ``Q[ab,g1g2]``, ``Q[gd,g1g3]``, ``Q[gd,g1g2g3]``, and any
    permutation relating members of the triple ``Q[gd,g1g2]``,
    ``Q[ab,g2g3]``, ``Q[gd,g2g3]``.
    """
    t = theorem3_table() if targets is None else targets
    remark = [
        (a, b, -substitute_indices(t[a], SIGMA23) == t[b]) for a, b in REMARK_PAIRS
    ]
    selfsym = {l: relations_between(t[l], t[l], include_identity=False) for l in SELF_SYMMETRIC}
    triple = {
        (a, b): relations_between(t[a], t[b])
        for a, b in itertools.permutations(TRIPLE, 2)
    }
    return SymmetryReport(remark, selfsym, triple)
