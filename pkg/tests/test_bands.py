import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixture_algebras import GP22, GP33, KRON, LOOP
from stringbands import (
    Letter,
    NotBand,
    NotQuasiBand,
    TrivialWord,
    Word,
    are_equivalent,
    band_dimension,
    band_fac_tally,
    band_sub_tally,
    canonical_class,
    class_members,
    dimension_vector,
    enumerate_bands,
    enumerate_strings,
    fac_counts,
    format_word,
    inverse,
    is_band,
    is_quasi_band,
    parse_word,
    parti_counts,
    sub_counts,
)
from stringbands.words import trivial_word


def fmt(c):
    return format_word(c.canonical.as_word())


def test_quasi_band_versus_band():
    band = parse_word("a.b^-1")
    square = parse_word("a.b^-1.a.b^-1")
    assert is_quasi_band(GP22, band.letters)
    assert is_band(GP22, band.letters)
    assert is_quasi_band(GP22, square.letters)
    assert not is_band(GP22, square.letters)  # not primitive
    assert not is_quasi_band(GP22, parse_word("a.b").letters)
    assert not is_quasi_band(GP22, parse_word("a.a^-1").letters)
    # cyclically non-composable in the Kronecker quiver
    assert not is_quasi_band(KRON, parse_word("a.b^-1.a").letters)


def test_canonical_class_normalizes_rotation_and_inversion():
    ref = canonical_class(GP22, parse_word("a.b^-1"))
    for text in ("b^-1.a", "b.a^-1", "a^-1.b"):
        assert canonical_class(GP22, parse_word(text)) == ref
    assert fmt(ref) == "a.b^-1"
    assert fmt(canonical_class(LOOP, parse_word("a.x^-1.a^-1.y^-1"))) == "x.a^-1.y.a"


def test_canonical_class_rejects_non_bands():
    # a proper power is a quasi-band but not a band
    with pytest.raises(NotBand):
        canonical_class(GP22, parse_word("a.b^-1.a.b^-1"))
    with pytest.raises(NotQuasiBand):
        canonical_class(GP22, parse_word("a.b"))
    # a single loop fails once its cube meets the ideal
    with pytest.raises(NotQuasiBand):
        canonical_class(GP33, parse_word("a"))


def test_are_equivalent_up_to_rotation_and_inverse():
    b = parse_word("a.b^-1")
    assert are_equivalent(GP22, b, parse_word("b^-1.a"))
    assert are_equivalent(GP22, b, parse_word("b.a^-1"))
    assert not are_equivalent(
        LOOP, parse_word("x.a^-1.y.a"), parse_word("x.a^-1.y^-1.a")
    )


def test_class_members_lists_every_reading():
    members = class_members(GP22, canonical_class(GP22, parse_word("a.b^-1")))
    assert [format_word(q.as_word()) for q in members] == [
        "a.b^-1", "b^-1.a", "b.a^-1", "a^-1.b",
    ]


def test_enumerate_bands_fixed_inventories():
    assert [fmt(c) for c in enumerate_bands(GP22, 6)] == ["a.b^-1"]
    assert [fmt(c) for c in enumerate_bands(KRON, 6)] == ["a.b^-1"]
    assert [fmt(c) for c in enumerate_bands(LOOP, 6)] == [
        "x.a^-1.y.a", "x.a^-1.y^-1.a",
    ]
    assert [fmt(c) for c in enumerate_bands(GP33, 6)] == [
        "a.b^-1",
        "a.a.b^-1",
        "a.b^-1.b^-1",
        "a.a.b^-1.b^-1",
        "a.a.b^-1.a.b^-1",
        "a.b^-1.a.b^-1.b^-1",
        "a.a.b^-1.a.b^-1.b^-1",
        "a.a.b^-1.b^-1.a.b^-1",
    ]


def test_parti_counts_including_wrapped_windows():
    B22 = canonical_class(GP22, parse_word("a.b^-1"))
    assert parti_counts(GP22, parse_word("a"), B22) == (1, 0)
    assert parti_counts(GP22, parse_word("b"), B22) == (0, 1)
    # length 3 pattern wraps around the period-2 band
    assert parti_counts(GP22, parse_word("a.b^-1.a"), B22)[0] == 1
    four = canonical_class(GP33, parse_word("a^-1.a^-1.b.b"))
    assert sum(parti_counts(GP33, parse_word("a^-1.a^-1"), four)) == 1
    with pytest.raises(TrivialWord):
        parti_counts(GP22, trivial_word("u"), B22)


def test_occurrence_counts_on_bands():
    B2 = canonical_class(GP33, parse_word("a.b^-1"))
    B4 = canonical_class(GP33, parse_word("a.a.b^-1.b^-1"))
    assert sub_counts(GP33, trivial_word("u"), B2) == 1
    assert fac_counts(GP33, trivial_word("u"), B2) == 1
    assert sub_counts(GP33, trivial_word("u"), B4) == 1
    assert sub_counts(GP33, parse_word("a"), B4) == 1


def test_tallies_agree_with_single_counts():
    B4 = canonical_class(GP33, parse_word("a.a.b^-1.b^-1"))
    subs = band_sub_tally(GP33, B4, 6)
    facs = band_fac_tally(GP33, B4, 6)
    for w, n in subs.items():
        assert sub_counts(GP33, w, B4) == n
    for w, n in facs.items():
        assert fac_counts(GP33, w, B4) == n


def test_dimensions():
    B5 = canonical_class(GP33, parse_word("a.a.b^-1.a.b^-1"))
    assert band_dimension(B5) == 5
    assert dimension_vector(GP33, B5) == {"u": 5}
    L = canonical_class(LOOP, parse_word("x.a^-1.y.a"))
    assert band_dimension(L) == 4
    assert dimension_vector(LOOP, L) == {"1": 2, "2": 2}


ALL_CLASSES = [
    (spec, c)
    for spec in (GP22, GP33, KRON, LOOP)
    for c in enumerate_bands(spec, 6)
]

NONTRIVIAL = {
    spec: [w for w in enumerate_strings(spec, 4) if w.letters]
    for spec in (GP22, GP33, KRON, LOOP)
}


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL_CLASSES), st.data())
def test_parti_is_a_class_invariant(case, data):
    spec, cls = case
    w = data.draw(st.sampled_from(NONTRIVIAL[spec]))
    counts = {sum(parti_counts(spec, w, member)) for member in class_members(spec, cls)}
    assert len(counts) == 1
    assert sub_counts(spec, w, cls) == sub_counts(spec, inverse(w), cls)
    assert fac_counts(spec, w, cls) == fac_counts(spec, inverse(w), cls)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ALL_CLASSES))
def test_total_arrow_occurrences_tile_the_period(case):
    spec, cls = case
    total = 0
    for a in spec.arrow_names:
        arrow = Word(None, (Letter(a, False),))
        total += sum(parti_counts(spec, arrow, cls))
    assert total == cls.period
