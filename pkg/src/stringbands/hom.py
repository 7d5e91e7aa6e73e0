"""Hom-space dimensions by counting occurrences, no linear algebra involved.

Each formula sums, over representatives d of the inversion classes {d, d^-1},
the product of a fac count on the source side and a sub count on the target
side.  Summing over representatives rather than over all words is what keeps
endomorphism counts honest; both occurrence counters already absorb the two
orientations of d.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .bands import (
    BandClass,
    band_fac_tally,
    band_sub_tally,
    canonical_class,
    parti_counts,
)
from .errors import DimensionMismatch, ParseError, SameModuleMismatch
from .words import (
    Letter,
    Word,
    count_fac,
    count_sub,
    factor_words,
    iter_strings,
)


@dataclass(frozen=True)
class BandSequence:
    """A finite list of band classes; repetition allowed and meaningful."""

    classes: tuple[BandClass, ...]

    @property
    def total_dim(self) -> int:
        return sum(c.period for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def make_sequence(spec, items) -> BandSequence:
    """Canonicalize every entry; accepts words, letter tuples, or classes."""
    return BandSequence(tuple(canonical_class(spec, it) for it in items))


def hom_string_string(spec, c: Word, cp: Word) -> int:
    """dim Hom(M(c), M(c')): fac counts on c against sub counts on c'."""
    total = 0
    for d in factor_words(spec, c):
        f = count_fac(spec, d, c)
        if f:
            total += f * count_sub(spec, d, cp)
    return total


def hom_band_string(spec, B: BandClass, c: Word) -> int:
    """dim Hom(M(b,m,lambda), M(c)); independent of the parameter."""
    tally = band_fac_tally(spec, B.canonical, len(c))
    return sum(
        tally[d] * count_sub(spec, d, c) for d in factor_words(spec, c) if d in tally
    )


def hom_string_band(spec, c: Word, B: BandClass) -> int:
    """dim Hom(M(c), M(b,m,lambda))."""
    tally = band_sub_tally(spec, B.canonical, len(c))
    return sum(
        count_fac(spec, d, c) * tally[d] for d in factor_words(spec, c) if d in tally
    )


def hom_band_band(
    spec, B: BandClass, C: BandClass, same_module: bool = False, length_cap=None
) -> int:
    """dim Hom(M(b,m,lambda), M(c,n,mu)).

    same_module adds the identity's contribution and is legal only for equal
    classes (equal parameters are implied).  The sum over d is truncated at
    2(m+n) by default; any common occurrence longer than that would force
    the two primitive periods to align, which cannot happen.
    """
    if same_module and B != C:
        raise SameModuleMismatch("same_module requires equal band classes")
    cap = length_cap if length_cap is not None else 2 * (B.period + C.period)
    facs = band_fac_tally(spec, B.canonical, cap)
    subs = band_sub_tally(spec, C.canonical, cap)
    total = sum(f * subs[d] for d, f in facs.items() if d in subs)
    return total + 1 if same_module else total


def seq_count_into(spec, c: Word, S: BandSequence) -> int:
    """dim Hom(M(c), X) for generic X in the family of S."""
    return sum(hom_string_band(spec, c, B) for B in S.classes)


def seq_count_from(spec, S: BandSequence, c: Word) -> int:
    """dim Hom(X, M(c)) for generic X in the family of S."""
    return sum(hom_band_string(spec, B, c) for B in S.classes)


def family_rank(spec, alpha: str, S: BandSequence) -> int:
    """rank of the matrix of alpha on any module in the family: total count
    of cyclic positions reading alpha or its inverse."""
    if not spec.has_arrow(alpha):
        raise ParseError(f"unknown arrow {alpha!r}")
    w = Word(None, (Letter(alpha, False),))
    return sum(sum(parti_counts(spec, w, B)) for B in S.classes)


class SeparationWitness(NamedTuple):
    word: Word
    counts: tuple[int, int, int, int]


def find_separating_string(spec, S: BandSequence, T: BandSequence, max_len: int):
    """First string (length-lexicographic) whose counts tell S and T apart.

    None when the sequences agree as multisets, or when no witness shows up
    within the length bound.
    """
    if S.total_dim != T.total_dim:
        raise DimensionMismatch(
            f"total dimensions differ: {S.total_dim} vs {T.total_dim}"
        )
    if Counter(S.classes) == Counter(T.classes):
        return None
    for c in iter_strings(spec, max_len):
        into_s = seq_count_into(spec, c, S)
        into_t = seq_count_into(spec, c, T)
        from_s = seq_count_from(spec, S, c)
        from_t = seq_count_from(spec, T, c)
        if into_s != into_t or from_s != from_t:
            return SeparationWitness(c, (into_s, into_t, from_s, from_t))
    return None
