"""End-to-end acceptance run.

Eight checks, each printing a single PASS or FAIL line on the real stdout
so the verdicts stay visible under pytest's capture.  Everything is exact
rational arithmetic; there are no tolerances anywhere.
"""

import functools
import itertools
import sys
import time
from fractions import Fraction

import acceptance_log
from fixture_algebras import ALL, GP22, GP33, KRON, LOOP, QUADRATIC
from stringbands import (
    Letter,
    Word,
    band_dimension,
    canonical_class,
    decide_component,
    dim_ext1,
    dim_hom,
    dimension_vector,
    direct_sum,
    enumerate_bands,
    enumerate_strings,
    extendable,
    extendable_quadratic,
    find_separating_string,
    format_word,
    hom_band_band,
    hom_band_string,
    hom_string_band,
    hom_string_string,
    is_regular,
    is_string,
    make_sequence,
    negligible,
    negligible_quadratic,
    orbit_dimension,
    parse_word,
    parti_counts,
    projective_word,
    rank_sum,
    realize_band,
    realize_string,
    reverse_piece,
    split_band,
    sub_counts,
)
from stringbands.components import Case1Witness, Case2Witness
from stringbands.hom import family_rank
from stringbands.words import letter_source, letter_target

TWO, THREE, FIVE = Fraction(2), Fraction(3), Fraction(5)
PARAMS = (TWO, THREE, FIVE)


def criterion(n, summary):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                _record(f"FAIL criterion {n}: {summary}")
                raise
            _record(f"PASS criterion {n}: {summary}")
        return wrapper
    return deco


def _record(line):
    # the summary hook replays these after the run; the direct print covers
    # uncaptured runs
    acceptance_log.LINES.append(line)
    print(line, file=sys.__stdout__, flush=True)


@criterion(1, "combinatorial hom counts match the matrix oracle on the full grid")
def test_criterion_1_count_oracle_equivalence():
    started = time.monotonic()
    for spec in ALL.values():
        strings = enumerate_strings(spec, 6)
        bands = enumerate_bands(spec, 6)
        smods = {c: realize_string(spec, c) for c in strings}
        b2 = {B: realize_band(spec, B, TWO) for B in bands}
        b3 = {B: realize_band(spec, B, THREE) for B in bands}
        for c in strings:
            for d in strings:
                assert hom_string_string(spec, c, d) == dim_hom(smods[c], smods[d])
        for B in bands:
            for c in strings:
                assert hom_band_string(spec, B, c) == dim_hom(b2[B], smods[c])
                assert hom_string_band(spec, c, B) == dim_hom(smods[c], b2[B])
        for B in bands:
            for C in bands:
                assert hom_band_band(spec, B, C) == dim_hom(b2[B], b3[C])
    assert time.monotonic() - started < 120


@criterion(2, "extendability matches Ext vanishing for every band pair")
def test_criterion_2_ext_vanishing_both_directions():
    samples = ((TWO, THREE), (FIVE, TWO))
    for spec in ALL.values():
        for B, C in itertools.product(enumerate_bands(spec, 6), repeat=2):
            witness = extendable(spec, B, C)
            for lam, mu in samples:
                ext = dim_ext1(
                    realize_band(spec, B, lam), realize_band(spec, C, mu)
                )
                if witness is None:
                    assert ext == 0
                else:
                    assert ext >= 1


@criterion(3, "cubic two-loop self-pair: extendable, Ext nonzero, doubled family refuted, singleton undecided")
def test_criterion_3_beyond_quadratic_counterexample():
    B = canonical_class(GP33, parse_word("a^-1.b"))
    witness = extendable(GP33, B, B)
    assert witness is not None
    assert canonical_class(GP33, witness.d.as_word()) == canonical_class(
        GP33, parse_word("a^-1.a^-1.b.b")
    )
    for lam, mu in itertools.permutations(PARAMS, 2):
        ext = dim_ext1(realize_band(GP33, B, lam), realize_band(GP33, B, mu))
        assert ext >= 1
    assert decide_component(GP33, [B, B]).status == "NotComponent"
    assert decide_component(GP33, [B]).status == "Unknown"


@criterion(4, "occurrence criteria agree with definitional searches, at the stock and doubled bounds")
def test_criterion_4_quadratic_criteria_agree():
    for spec in QUADRATIC.values():
        bands = enumerate_bands(spec, 6)
        for B, C in itertools.product(bands, repeat=2):
            reference = extendable(spec, B, C) is None
            assert (extendable_quadratic(spec, B, C) is None) == reference
            doubled = 4 * (B.period + C.period)
            assert (extendable_quadratic(spec, B, C, bound=doubled) is None) == reference
        for B in bands:
            reference = negligible(spec, B) is None
            assert (negligible_quadratic(spec, B) is None) == reference
            assert (negligible_quadratic(spec, B, bound=8 * B.period) is None) == reference


@criterion(5, "component verdicts carry dimensions equal to generic orbit dimension plus class count")
def test_criterion_5_component_decisions_and_dimensions():
    refuted = decide_component(LOOP, [parse_word("a.x.a^-1.y^-1")])
    assert refuted.status == "NotComponent" and refuted.dimension is None

    cases = [
        (LOOP, ["a.x^-1.a^-1.y^-1"], 16),
        (GP22, ["a.b^-1"], 3),
        (GP22, ["a.b^-1", "a.b^-1"], 12),
    ]
    for spec, words, expected in cases:
        verdict = decide_component(spec, [parse_word(w) for w in words])
        assert verdict.status == "IsComponent"
        assert verdict.dimension == expected
        classes = [canonical_class(spec, parse_word(w)) for w in words]
        generic = realize_band(spec, classes[0], PARAMS[0])
        for i, cls in enumerate(classes[1:], start=1):
            generic = direct_sum(generic, realize_band(spec, cls, PARAMS[i]))
        assert expected == orbit_dimension(generic) + len(classes)


@criterion(6, "degeneration rewrites only raise hom counts; the concatenation loses a witness occurrence")
def test_criterion_6_degeneration_semicontinuity():
    # loop fixture: reversing the middle piece dominates the negligible band
    neg = canonical_class(LOOP, parse_word("a.x.a^-1.y^-1"))
    wit = negligible(LOOP, neg)
    assert isinstance(wit, Case2Witness)
    dominant = canonical_class(
        LOOP, reverse_piece(LOOP, wit.rot, wit.w, wit.u, wit.v).as_word()
    )
    dom_mod = realize_band(LOOP, dominant, TWO)
    neg_mod = realize_band(LOOP, neg, TWO)
    strict = 0
    for c in enumerate_strings(LOOP, 6):
        M = realize_string(LOOP, c)
        upper = dim_hom(M, dom_mod)
        lower = dim_hom(M, neg_mod)
        assert upper <= lower
        strict += upper < lower
    assert strict >= 1

    # cubic fixture: splitting dominates the original band
    band = canonical_class(GP33, parse_word("b.a^-1.b.b.a^-1"))
    wit = negligible(GP33, band)
    assert isinstance(wit, Case1Witness)
    pieces = split_band(GP33, wit)
    summand = [canonical_class(GP33, p.as_word()) for p in pieces]
    dom_mod = direct_sum(
        realize_band(GP33, summand[0], TWO), realize_band(GP33, summand[1], THREE)
    )
    band_mod = realize_band(GP33, band, FIVE)
    strict = 0
    for c in enumerate_strings(GP33, 6):
        M = realize_string(GP33, c)
        upper = dim_hom(M, dom_mod)
        lower = dim_hom(M, band_mod)
        assert upper <= lower
        strict += upper < lower
    assert strict >= 1

    # the concatenation drops exactly at the witness string
    B = canonical_class(GP33, parse_word("a^-1.b"))
    ew = extendable(GP33, B, B)
    joined = canonical_class(GP33, ew.d.as_word())
    pair_count = sub_counts(GP33, ew.w, B) + sub_counts(GP33, ew.w, B)
    assert pair_count > sub_counts(GP33, ew.w, joined)


@criterion(7, "invariant-matched distinct band sequences separate within three times the dimension")
def test_criterion_7_separation():
    pairs = 0
    for spec in ALL.values():
        classes = enumerate_bands(spec, 6)
        sequences = []
        for r in range(1, 4):
            for combo in itertools.combinations_with_replacement(classes, r):
                if sum(band_dimension(c) for c in combo) <= 6:
                    sequences.append(make_sequence(spec, list(combo)))
        grouped = {}
        for seq in sequences:
            dv = {}
            for cls in seq.classes:
                for v, k in dimension_vector(spec, cls).items():
                    dv[v] = dv.get(v, 0) + k
            ranks = tuple(family_rank(spec, a, seq) for a in spec.arrow_names)
            key = (seq.total_dim, tuple(sorted(dv.items())), ranks)
            grouped.setdefault(key, []).append(seq)
        for key, group in grouped.items():
            for S, T in itertools.combinations(group, 2):
                witness = find_separating_string(spec, S, T, 3 * key[0])
                assert witness is not None
                assert len(witness.word.letters) <= 3 * key[0]
                pairs += 1
    assert pairs == 14


@criterion(8, "occurrences tile the period, extension additivity holds, ranks grade realizations, projectives never extend")
def test_criterion_8_structural_properties():
    for spec in ALL.values():
        for B in enumerate_bands(spec, 6):
            total = 0
            for a in spec.arrow_names:
                arrow = Word(None, (Letter(a, False),))
                total += sum(parti_counts(spec, arrow, B))
            assert total == B.period

            # occurrences of w split by the letter written after it
            for w in enumerate_strings(spec, 2 * B.period - 1):
                if not w.letters:
                    continue
                src = letter_source(spec, w.letters[-1])
                extended = 0
                for a in spec.arrow_names:
                    for inv in (False, True):
                        e = Letter(a, inv)
                        if letter_target(spec, e) != src:
                            continue
                        we = Word(None, w.letters + (e,))
                        if is_string(spec, we):
                            extended += sum(parti_counts(spec, we, B))
                assert sum(parti_counts(spec, w, B)) == extended

            X = realize_band(spec, B, TWO)
            assert rank_sum(X) == X.dim and is_regular(X)

        for c in enumerate_strings(spec, 6):
            M = realize_string(spec, c)
            assert rank_sum(M) == M.dim - 1 and not is_regular(M)

        corpus = [realize_string(spec, c) for c in enumerate_strings(spec, 6)]
        corpus += [realize_band(spec, B, TWO) for B in enumerate_bands(spec, 6)]
        for v in spec.vertices:
            P = realize_string(spec, projective_word(spec, v))
            for Y in corpus:
                assert dim_ext1(P, Y) == 0
