from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixture_algebras import GP22, GP33, KRON, LOOP
from stringbands import (
    DimensionMismatch,
    SameModuleMismatch,
    canonical_class,
    dim_hom,
    enumerate_bands,
    enumerate_strings,
    find_separating_string,
    format_word,
    hom_band_band,
    hom_band_string,
    hom_string_band,
    hom_string_string,
    inverse,
    make_sequence,
    parse_word,
    realize_band,
    realize_string,
)
from stringbands.hom import family_rank, seq_count_from, seq_count_into
from stringbands.words import trivial_word


def fmtc(c):
    return format_word(c.canonical.as_word())


def test_string_string_counts():
    a = parse_word("a")
    assert hom_string_string(GP22, a, a) == 2
    assert hom_string_string(GP22, a, parse_word("b")) == 1
    assert hom_string_string(GP33, a, a) == 2
    assert hom_string_string(GP33, parse_word("a.a"), a) == 2


def test_band_string_counts():
    B22 = canonical_class(GP22, parse_word("a.b^-1"))
    assert hom_band_string(GP22, B22, parse_word("a")) == 1
    BK = canonical_class(KRON, parse_word("a.b^-1"))
    assert hom_band_string(KRON, BK, trivial_word("2")) == 0
    assert hom_string_band(KRON, trivial_word("2"), BK) == 1


def test_band_band_counts():
    B22 = canonical_class(GP22, parse_word("a.b^-1"))
    assert hom_band_band(GP22, B22, B22) == 1
    assert hom_band_band(GP22, B22, B22, same_module=True) == 2
    B2 = canonical_class(GP33, parse_word("a^-1.b"))
    B3 = canonical_class(GP33, parse_word("a.a.b^-1"))
    assert hom_band_band(GP33, B2, B2) == 1
    assert hom_band_band(GP33, B2, B2, same_module=True) == 2
    assert hom_band_band(GP33, B2, B3) == 1
    with pytest.raises(SameModuleMismatch):
        hom_band_band(GP33, B2, B3, same_module=True)


def test_band_band_count_is_stable_under_longer_caps():
    B2 = canonical_class(GP33, parse_word("a^-1.b"))
    B3 = canonical_class(GP33, parse_word("a.a.b^-1"))
    default = hom_band_band(GP33, B2, B3)
    cap = 4 * (B2.period + B3.period)
    assert hom_band_band(GP33, B2, B3, length_cap=cap) == default


def test_sequence_counts_add_up():
    B2 = canonical_class(GP33, parse_word("a.b^-1"))
    B4 = canonical_class(GP33, parse_word("a.a.b^-1.b^-1"))
    seq = make_sequence(GP33, [B2, B4])
    c = parse_word("a")
    assert seq_count_into(GP33, c, seq) == (
        hom_string_band(GP33, c, B2) + hom_string_band(GP33, c, B4)
    )
    assert seq_count_from(GP33, seq, c) == (
        hom_band_string(GP33, B2, c) + hom_band_string(GP33, B4, c)
    )
    assert family_rank(GP33, "a", seq) == 3
    assert family_rank(GP33, "b", seq) == 3


def test_family_rank_matches_realized_matrices():
    B4 = canonical_class(GP33, parse_word("a.a.b^-1.b^-1"))
    seq = make_sequence(GP33, [B4])
    X = realize_band(GP33, B4, Fraction(2))
    from stringbands.oracle import _rank

    for arrow in GP33.arrow_names:
        rows = [list(r) for r in X.mat(arrow)]
        assert family_rank(GP33, arrow, seq) == _rank(rows, X.dim)


def test_make_sequence_keeps_order_but_reorderings_agree_as_families():
    B2 = parse_word("a.b^-1")
    B4 = parse_word("a.a.b^-1.b^-1")
    s1 = make_sequence(GP33, [B4, B2])
    s2 = make_sequence(GP33, [B2, B4])
    assert s1.total_dim == s2.total_dim == 6
    assert [fmtc(c) for c in s1.classes] == ["a.a.b^-1.b^-1", "a.b^-1"]
    assert [fmtc(c) for c in s2.classes] == ["a.b^-1", "a.a.b^-1.b^-1"]
    # same multiset of classes, so nothing can tell the families apart
    assert find_separating_string(GP33, s1, s2, 18) is None


def test_separating_string_for_the_dumbbell_pair():
    S = make_sequence(LOOP, [parse_word("x.a^-1.y.a")])
    T = make_sequence(LOOP, [parse_word("x.a^-1.y^-1.a")])
    wit = find_separating_string(LOOP, S, T, 12)
    assert format_word(wit.word) == "a"
    assert wit.counts == (0, 1, 0, 1)
    assert find_separating_string(LOOP, S, S, 12) is None


def test_separating_string_rejects_dimension_mismatch():
    B2 = canonical_class(GP33, parse_word("a.b^-1"))
    B3 = canonical_class(GP33, parse_word("a.a.b^-1"))
    with pytest.raises(DimensionMismatch):
        find_separating_string(
            GP33, make_sequence(GP33, [B2]), make_sequence(GP33, [B3]), 6
        )


STRING_POOLS = {
    spec: enumerate_strings(spec, 4) for spec in (GP22, GP33, KRON, LOOP)
}
BAND_POOLS = {
    spec: enumerate_bands(spec, 6) for spec in (GP22, GP33, KRON, LOOP)
}


@st.composite
def spec_string_band(draw):
    spec = draw(st.sampled_from(list(BAND_POOLS)))
    c = draw(st.sampled_from(STRING_POOLS[spec]))
    B = draw(st.sampled_from(BAND_POOLS[spec]))
    return spec, c, B


@settings(max_examples=60, deadline=None)
@given(spec_string_band())
def test_band_counts_ignore_string_inversion(case):
    spec, c, B = case
    assert hom_string_band(spec, inverse(c), B) == hom_string_band(spec, c, B)
    assert hom_band_string(spec, B, inverse(c)) == hom_band_string(spec, B, c)


@settings(max_examples=30, deadline=None)
@given(spec_string_band())
def test_counts_match_the_oracle_pointwise(case):
    spec, c, B = case
    M = realize_string(spec, c)
    X = realize_band(spec, B, Fraction(3))
    assert hom_string_band(spec, c, B) == dim_hom(M, X)
    assert hom_band_string(spec, B, c) == dim_hom(X, M)
