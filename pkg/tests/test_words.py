import pytest
from hypothesis import given

from skein3.words import (
    IDENTITY,
    Word,
    WordSyntaxError,
    canonical_trace_key,
    cyclic_reduce,
    format_word,
    free_reduce,
    invert,
    multiply,
    parse_word,
)

from conftest import words

ALPHA = ((3, 1), (2, -1), (1, 1), (2, 1), (1, -1))


def W(*syl):
    return Word(tuple(syl))


def test_parse_alpha():
    assert parse_word("g3*g2^-1*g1*g2*g1^-1").syllables == ALPHA


def test_parse_identity():
    assert parse_word("e") == IDENTITY
    assert parse_word("e").syllables == ()


def test_parse_free_cancellation():
    assert parse_word("g1*g1^-1*g2").syllables == ((2, 1),)


def test_parse_whitespace_separator():
    assert parse_word("g3 g2^-1 g1 g2   g1^-1").syllables == ALPHA
    assert parse_word("g1 ^ 2 * g2").syllables == ((1, 2), (2, 1))


def test_parse_merges_powers():
    assert parse_word("g1^2*g1^-5").syllables == ((1, -3),)


@pytest.mark.parametrize("text,pos", [("g4", 0), ("g1**g2", 3), ("g1*", 3), ("", 0), ("*g1", 0), ("g1 h", 3)])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(WordSyntaxError) as exc:
        parse_word(text)
    assert exc.value.position == pos


def test_parse_exponent_out_of_range():
    with pytest.raises(WordSyntaxError):
        parse_word(f"g1^{2**63}")
    assert parse_word(f"g1^{2**63 - 1}").syllables == ((1, 2**63 - 1),)


def test_exponent_overflow_on_merge():
    big = W((1, 2**63 - 1))
    with pytest.raises(OverflowError):
        big * W((1, 1))


def test_format_canonical():
    assert format_word(W(*ALPHA)) == "g3*g2^-1*g1*g2*g1^-1"
    assert format_word(IDENTITY) == "e"
    assert str(W((1, 3))) == "g1^3"


@given(words(8))
def test_parse_format_fixpoint(w):
    assert parse_word(format_word(w)) == w


def test_multiply_examples():
    assert multiply(W((1, 1)), W((1, 2))).syllables == ((1, 3),)
    assert multiply(W((1, 1), (2, 1)), W((2, -1), (3, 1))).syllables == ((1, 1), (3, 1))
    assert multiply(W(*ALPHA), W((1, 1))).syllables == ((3, 1), (2, -1), (1, 1), (2, 1))


def test_invert_examples():
    assert invert(W((1, 1), (2, -1))).syllables == ((2, 1), (1, -1))
    assert invert(IDENTITY) == IDENTITY
    assert invert(invert(W(*ALPHA))) == W(*ALPHA)


@given(words(8))
def test_free_reduction_idempotent(w):
    assert free_reduce(w.syllables) == w.syllables
    syl = w.syllables
    assert all(e != 0 for _, e in syl)
    assert all(a[0] != b[0] for a, b in zip(syl, syl[1:]))


@given(words(), words(), words())
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(words())
def test_inverse_cancels(w):
    assert w * invert(w) == IDENTITY
    assert invert(w) * w == IDENTITY


def test_key_examples():
    assert canonical_trace_key(W((1, 1), (2, 1), (1, -1))).syllables == ((2, 1),)
    assert canonical_trace_key(W((2, 1), (1, 1))).syllables == ((1, 1), (2, 1))
    a = W(*ALPHA)
    assert canonical_trace_key(a) == canonical_trace_key(invert(a))


def test_cyclic_reduce_merges_ends():
    assert cyclic_reduce(W((1, 2), (2, 1), (1, 1))).syllables == ((1, 3), (2, 1))
    assert cyclic_reduce(W((1, 1), (2, 1), (3, 1), (2, -1), (1, -1))).syllables == ((3, 1),)


@given(words(6), words(4))
def test_key_conjugation_and_inversion_invariant(w, h):
    k = canonical_trace_key(w)
    assert canonical_trace_key(h * w * invert(h)) == k
    assert canonical_trace_key(invert(w)) == k
    assert canonical_trace_key(k) == k


@given(words(6), words(6))
def test_key_cyclic_rotation(u, v):
    assert canonical_trace_key(u * v) == canonical_trace_key(v * u)


def test_key_is_cyclically_reduced():
    k = canonical_trace_key(parse_word("g1 g2 g3 g1^-1"))
    assert k.syllables == ((2, 1), (3, 1))
