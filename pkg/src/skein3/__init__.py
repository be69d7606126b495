"""Exact trace polynomials and skein algebra ideals for groups on three generators."""

from .ideal import (
    Presentation,
    borromean_presentation,
    check_symmetries,
    parse_presentation,
    theorem2_generators,
    theorem3_polynomials,
    verify_theorem3,
)
from .oracle import Mat2, SL2Rep, check_word, fuzz, random_rep, trace_point, word_matrix
from .polyring import (
    Polynomial,
    divmod_K,
    evaluate,
    format_poly,
    fricke_K,
    in_ideal_K,
    parse_poly,
    rem_mod_K,
    substitute_indices,
    to_json,
)
from .trace import TraceEngine, trace_nf, trace_poly
from .words import Word, canonical_trace_key, format_word, invert, multiply, parse_word

__version__ = "0.1.0"
