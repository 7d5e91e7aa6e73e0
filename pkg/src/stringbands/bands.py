"""Cyclic words over the quiver: quasi-bands, bands, their classes, and the
occurrence counts (parti, sub, fac) that drive every hom formula.

A quasi-band is stored by one period b(1)..b(m); indices wrap, with b(i)
read 1-based.  The letter b(i) is traversed after b(i+1), matching the
composition order of finite words.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotBand, NotQuasiBand, ParseError, TrivialWord
from .words import (
    Letter,
    Word,
    canonical_word,
    format_word,
    inverse,
    is_string,
    letter_source,
    letter_target,
    trivial_word,
)


@dataclass(frozen=True)
class QuasiBand:
    letters: tuple[Letter, ...]

    @property
    def period(self) -> int:
        return len(self.letters)

    def at(self, i: int) -> Letter:
        """b(i), 1-based and periodic in both directions."""
        return self.letters[(i - 1) % len(self.letters)]

    def window(self, i: int, length: int) -> tuple[Letter, ...]:
        return tuple(self.at(i + k) for k in range(length))

    def as_word(self) -> Word:
        return Word(None, self.letters)

    def __repr__(self) -> str:
        return f"QuasiBand({format_word(self.as_word())!r})"


@dataclass(frozen=True)
class BandClass:
    """A band up to rotation and inverse-reversal, held in canonical form."""

    canonical: QuasiBand

    @property
    def period(self) -> int:
        return self.canonical.period

    @property
    def letters(self) -> tuple[Letter, ...]:
        return self.canonical.letters

    def __repr__(self) -> str:
        return f"BandClass({format_word(self.canonical.as_word())!r})"


def _fmt(letters: tuple[Letter, ...]) -> str:
    if not letters:
        return "(empty)"
    return format_word(Word(None, letters))


def _as_letters(x) -> tuple[Letter, ...]:
    if isinstance(x, QuasiBand):
        return x.letters
    if isinstance(x, BandClass):
        return x.canonical.letters
    if isinstance(x, Word):
        if x.is_trivial:
            raise NotQuasiBand("a trivial word has no cyclic reading")
        return x.letters
    out = []
    for l in x:
        out.append(l if isinstance(l, Letter) else Letter(l[0], bool(l[1])))
    return tuple(out)


def _as_qb(x) -> QuasiBand:
    if isinstance(x, QuasiBand):
        return x
    if isinstance(x, BandClass):
        return x.canonical
    return QuasiBand(_as_letters(x))


def is_quasi_band(spec, letters) -> bool:
    """Cyclic composability, reducedness, mixed directions, string windows.

    Windows of length max(R, 2) from every start position are checked,
    R being the longest relation; any longer violating factor would show
    up in one of these unless the word runs in a single direction, and
    those words are rejected outright.
    """
    ls = _as_letters(letters)
    if not ls:
        raise NotQuasiBand("empty cyclic word")
    for l in ls:
        if not spec.has_arrow(l.arrow):
            raise ParseError(f"unknown arrow {l.arrow!r}")
    qb = QuasiBand(ls)
    m = qb.period
    for i in range(1, m + 1):
        if letter_source(spec, qb.at(i)) != letter_target(spec, qb.at(i + 1)):
            return False
        if qb.at(i) == qb.at(i + 1).inv():
            return False
    if all(l.inverted for l in ls) or all(not l.inverted for l in ls):
        return False
    w = max(spec.max_relation_length, 2)
    return all(is_string(spec, Word(None, qb.window(i, w))) for i in range(1, m + 1))


def _is_primitive(ls: tuple[Letter, ...]) -> bool:
    m = len(ls)
    for p in range(1, m):
        if m % p == 0 and all(ls[i] == ls[i % p] for i in range(m)):
            return False
    return True


def is_band(spec, letters) -> bool:
    """True iff the quasi-band is not a proper power of a shorter period."""
    ls = _as_letters(letters)
    if not is_quasi_band(spec, ls):
        raise NotQuasiBand(_fmt(ls))
    return _is_primitive(ls)


def _candidates(ls: tuple[Letter, ...]) -> list[tuple[Letter, ...]]:
    m = len(ls)
    inv = tuple(l.inv() for l in reversed(ls))
    out = []
    for k in range(m):
        out.append(ls[k:] + ls[:k])
        out.append(inv[k:] + inv[:k])
    return out


def canonical_class(spec, letters) -> BandClass:
    """Lexicographically least among the 2m rotations of the word and of
    its inverse-reversal, under the declaration-order letter key."""
    ls = _as_letters(letters)
    if not is_band(spec, ls):
        raise NotBand(f"{_fmt(ls)} is a proper power")
    best = min(_candidates(ls), key=lambda c: tuple(spec.letter_key(l) for l in c))
    return BandClass(QuasiBand(best))


def are_equivalent(spec, b, bp) -> bool:
    return canonical_class(spec, b) == canonical_class(spec, bp)


def class_members(spec, B: BandClass) -> tuple[QuasiBand, ...]:
    """All distinct rotations of the class, canonical ones first, then the
    rotations of the inverse-reversal.  Witness searches iterate this order."""
    ls = B.canonical.letters
    m = len(ls)
    inv = tuple(l.inv() for l in reversed(ls))
    seen: list[tuple[Letter, ...]] = []
    for base in (ls, inv):
        for k in range(m):
            rot = base[k:] + base[:k]
            if rot not in seen:
                seen.append(rot)
    return tuple(QuasiBand(r) for r in seen)


@lru_cache(maxsize=None)
def parti_counts(spec, c: Word, qb) -> tuple[int, int]:
    """Occurrences of c and of its inverse among the m cyclic windows."""
    band = _as_qb(qb)
    if c.is_trivial:
        raise TrivialWord("parti is defined for nonempty words only")
    m = band.period

    def occ(target: tuple[Letter, ...]) -> int:
        n = len(target)
        return sum(1 for i in range(1, m + 1) if band.window(i, n) == target)

    return occ(c.letters), occ(inverse(c).letters)


def _flank_count(spec, c: Word, band: QuasiBand, inverted_before: bool) -> int:
    m = band.period
    total = 0
    if c.is_trivial:
        for i in range(1, m + 1):
            if band.at(i).inverted != inverted_before:
                continue
            if letter_source(spec, band.at(i)) != c.trivial_at:
                continue
            if band.at(i + 1).inverted == inverted_before:
                continue
            total += 1
        return total
    # both orientations count and are disjoint for a nontrivial c
    for target in (c.letters, inverse(c).letters):
        n = len(target)
        for i in range(1, m + 1):
            if band.at(i).inverted != inverted_before:
                continue
            if band.window(i + 1, n) != target:
                continue
            if band.at(i + n + 1).inverted == inverted_before:
                continue
            total += 1
    return total


@lru_cache(maxsize=None)
def sub_counts(spec, c: Word, qb) -> int:
    """Indices i with b(i) inverse, the next l(c) letters spelling c or its
    inverse, and the letter after that a plain arrow."""
    return _flank_count(spec, c, _as_qb(qb), inverted_before=True)


@lru_cache(maxsize=None)
def fac_counts(spec, c: Word, qb) -> int:
    return _flank_count(spec, c, _as_qb(qb), inverted_before=False)


def _flank_tally(spec, band: QuasiBand, max_len: int, inverted_before: bool):
    tally: dict[Word, int] = {}
    m = band.period
    for i in range(1, m + 1):
        first = band.at(i)
        if first.inverted != inverted_before:
            continue
        for l in range(max_len + 1):
            if band.at(i + l + 1).inverted == inverted_before:
                continue
            if l == 0:
                mid = trivial_word(letter_source(spec, first))
            else:
                mid = Word(None, band.window(i + 1, l))
            key = canonical_word(spec, mid)
            tally[key] = tally.get(key, 0) + 1
    return tally


@lru_cache(maxsize=None)
def band_sub_tally(spec, qb, max_len: int) -> dict[Word, int]:
    """sub counts of every canonical word of length <= max_len in one scan.

    Cached; treat the returned mapping as read-only.
    """
    return _flank_tally(spec, _as_qb(qb), max_len, inverted_before=True)


@lru_cache(maxsize=None)
def band_fac_tally(spec, qb, max_len: int) -> dict[Word, int]:
    return _flank_tally(spec, _as_qb(qb), max_len, inverted_before=False)


def _linear_strings(spec, m: int) -> list[tuple[Letter, ...]]:
    frontier: list[tuple[Letter, ...]] = []
    for a in spec.arrow_names:
        for inv in (False, True):
            w = Word(None, (Letter(a, inv),))
            if is_string(spec, w):
                frontier.append(w.letters)
    for _ in range(m - 1):
        nxt = []
        for ls in frontier:
            src = letter_source(spec, ls[-1])
            for a in spec.arrow_names:
                for inv in (False, True):
                    l = Letter(a, inv)
                    if letter_target(spec, l) != src or l == ls[-1].inv():
                        continue
                    ls2 = ls + (l,)
                    if is_string(spec, Word(None, ls2)):
                        nxt.append(ls2)
        frontier = nxt
    return frontier


def enumerate_bands(spec, max_len: int) -> list[BandClass]:
    """All band classes of period <= max_len, shortest first, each period
    block sorted by the canonical letter key."""
    out: list[BandClass] = []
    for m in range(1, max_len + 1):
        found: dict = {}
        for ls in _linear_strings(spec, m):
            if not is_quasi_band(spec, ls) or not _is_primitive(ls):
                continue
            cls = canonical_class(spec, ls)
            key = tuple(spec.letter_key(l) for l in cls.letters)
            found.setdefault(key, cls)
        out.extend(found[k] for k in sorted(found))
    return out


def band_dimension(qb) -> int:
    return _as_qb(qb).period


def dimension_vector(spec, qb) -> dict[str, int]:
    """How many basis vectors sit at each vertex: indices i with s(b(i)) = u."""
    band = _as_qb(qb)
    vec = {v: 0 for v in spec.vertices}
    for i in range(1, band.period + 1):
        vec[letter_source(spec, band.at(i))] += 1
    return vec
