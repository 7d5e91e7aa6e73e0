"""Monomial presentations kQ/I and the axioms that make them string algebras.

A presentation is a quiver plus a set of monomial relations (paths declared
zero).  Paths use composition order: in a relation ``a1.a2. ... .ak`` the
rightmost arrow is applied first and s(a_i) = t(a_{i+1}).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import ParseError
from .words import Letter, Word, trivial_word


class ArrowDecl(NamedTuple):
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class AlgebraSpec:
    """Quiver and relations, in declaration order.

    Declaration order is part of the data: enumeration, canonical forms and
    witness searches all break ties by it, so two presentations that differ
    only in ordering are distinct specs.
    """

    vertices: tuple[str, ...]
    arrows: tuple[ArrowDecl, ...]
    relations: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        seen_v = set()
        for v in self.vertices:
            if v in seen_v:
                raise ParseError(f"duplicate vertex {v!r}")
            seen_v.add(v)
        names = set()
        for a in self.arrows:
            if a.name in names or a.name in seen_v:
                raise ParseError(f"arrow name {a.name!r} is not unique")
            names.add(a.name)
            if a.source not in seen_v or a.target not in seen_v:
                raise ParseError(f"arrow {a.name!r} uses an undeclared vertex")
        seen_r = set()
        for rel in self.relations:
            disp = ".".join(rel)
            if len(rel) < 2:
                raise ParseError(f"relation {disp!r} is shorter than 2")
            if rel in seen_r:
                raise ParseError(f"duplicate relation {disp!r}")
            seen_r.add(rel)
            for name in rel:
                if name not in names:
                    raise ParseError(f"relation {disp!r} uses unknown arrow {name!r}")
            for i in range(len(rel) - 1):
                if self.arrow_source(rel[i]) != self.arrow_target(rel[i + 1]):
                    raise ParseError(f"relation {disp!r} is not a composable path")

    @cached_property
    def _arrow_map(self) -> dict[str, ArrowDecl]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def _vertex_order(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _arrow_order(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def arrow_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    @cached_property
    def max_relation_length(self) -> int:
        return max((len(r) for r in self.relations), default=0)

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_order

    def has_arrow(self, name: str) -> bool:
        return name in self._arrow_map

    def arrow_source(self, name: str) -> str:
        return self._arrow_map[name].source

    def arrow_target(self, name: str) -> str:
        return self._arrow_map[name].target

    def vertex_index(self, v: str) -> int:
        return self._vertex_order[v]

    def arrow_index(self, name: str) -> int:
        return self._arrow_order[name]

    def letter_key(self, letter: Letter) -> tuple[int, bool]:
        return (self._arrow_order[letter.arrow], letter.inverted)

    def out_arrows(self, u: str) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows if a.source == u)

    def in_arrows(self, u: str) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows if a.target == u)

    def path_in_ideal(self, path: Iterable[str]) -> bool:
        """True iff some relation occurs as a contiguous factor of path."""
        path = tuple(path)
        for rel in self.relations:
            k = len(rel)
            for i in range(len(path) - k + 1):
                if path[i : i + k] == rel:
                    return True
        return False


def is_member_monomial_ideal(spec: AlgebraSpec, path: Iterable[str]) -> bool:
    """Ideal membership for a path given as a sequence of arrow names."""
    path = tuple(path)
    for name in path:
        if not spec.has_arrow(name):
            raise ParseError(f"unknown arrow {name!r}")
    return spec.path_in_ideal(path)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the axiom check.

    admissibility_bound is the least N with every path of length N in the
    ideal, or None when no such N exists.  redundant_relations lists
    generators that contain a shorter generator as a factor; they are
    harmless but contribute nothing.
    """

    valid: bool
    violations: tuple[tuple[str, str], ...]
    quadratic: bool
    admissibility_bound: int | None
    redundant_relations: tuple[tuple[str, ...], ...]


def _relation_free_paths(spec: AlgebraSpec, upto: int) -> list[list[tuple[str, ...]]]:
    # by_len[l] = relation-free paths of length l, grown by prepending arrows
    by_len: list[list[tuple[str, ...]]] = [[()]]
    current = [(a,) for a in spec.arrow_names]
    for _ in range(upto):
        by_len.append(current)
        nxt = []
        for p in current:
            for b in spec.arrow_names:
                if spec.arrow_source(b) != spec.arrow_target(p[0]):
                    continue
                q = (b,) + p
                if not spec.path_in_ideal(q):
                    nxt.append(q)
        current = nxt
    return by_len


def _admissibility(spec: AlgebraSpec):
    """Returns (bound, cycle_witness); exactly one of the two is None.

    Whether a relation-free path extends depends only on its last R-1
    arrows, so the walk graph on relation-free windows of that length
    has a cycle iff relation-free paths grow without bound.
    """
    K = max(spec.max_relation_length - 1, 1)
    by_len = _relation_free_paths(spec, K)
    states = by_len[-1] if len(by_len) > K else []
    edges: dict[tuple[str, ...], list[tuple[str, ...]]] = {}
    for p in states:
        outs = []
        for b in spec.arrow_names:
            if spec.arrow_source(b) != spec.arrow_target(p[0]):
                continue
            if not spec.path_in_ideal((b,) + p):
                outs.append(((b,) + p)[:K])
        edges[p] = outs

    color: dict[tuple[str, ...], int] = {}
    longest: dict[tuple[str, ...], int] = {}
    for root in states:
        if color.get(root, 0) == 2:
            continue
        stack = [(root, iter(edges[root]))]
        color[root] = 1
        trail = [root]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color.get(nxt, 0) == 1:
                    i = trail.index(nxt)
                    cycle = trail[i:]
                    return None, ".".join(q[0] for q in reversed(cycle))
                if color.get(nxt, 0) == 0:
                    color[nxt] = 1
                    trail.append(nxt)
                    stack.append((nxt, iter(edges[nxt])))
                    advanced = True
                    break
            if not advanced:
                color[node] = 2
                longest[node] = 1 + max(
                    (longest[n] for n in edges[node]), default=-1
                )
                stack.pop()
                trail.pop()

    best = 0
    for l in range(len(by_len) - 1, -1, -1):
        if by_len[l]:
            best = l
            break
    if longest:
        best = max(best, K + max(longest.values()))
    if not spec.vertices:
        return 0, None
    return best + 1, None


def validate_algebra(spec: AlgebraSpec) -> ValidationReport:
    """Checks the string-algebra axioms in a fixed order.

    1. admissibility of the ideal, 2. degree bounds at every vertex,
    3. unique relation-free continuation behind each arrow, 4. the dual
    condition in front of each arrow.  All violations are collected.
    """
    violations: list[tuple[str, str]] = []

    bound, cycle = _admissibility(spec)
    if cycle is not None:
        violations.append(
            ("admissibility", f"relation-free walk cycles through {cycle}")
        )

    for u in spec.vertices:
        outs = spec.out_arrows(u)
        if len(outs) > 2:
            violations.append(
                ("vertex-degree", f"vertex {u} has {len(outs)} outgoing arrows")
            )
        ins = spec.in_arrows(u)
        if len(ins) > 2:
            violations.append(
                ("vertex-degree", f"vertex {u} has {len(ins)} incoming arrows")
            )

    for alpha in spec.arrow_names:
        partners = [
            b
            for b in spec.arrow_names
            if spec.arrow_source(alpha) == spec.arrow_target(b)
            and not spec.path_in_ideal((alpha, b))
        ]
        if len(partners) > 1:
            pair = " and ".join(f"{alpha}.{b}" for b in partners[:2])
            violations.append(
                ("unique-continuation", f"both {pair} avoid the ideal")
            )

    for beta in spec.arrow_names:
        partners = [
            a
            for a in spec.arrow_names
            if spec.arrow_source(a) == spec.arrow_target(beta)
            and not spec.path_in_ideal((a, beta))
        ]
        if len(partners) > 1:
            pair = " and ".join(f"{a}.{beta}" for a in partners[:2])
            violations.append(
                ("unique-precomposition", f"both {pair} avoid the ideal")
            )

    redundant = []
    for rel in spec.relations:
        for other in spec.relations:
            if other is rel or len(other) >= len(rel):
                continue
            k = len(other)
            if any(rel[i : i + k] == other for i in range(len(rel) - k + 1)):
                redundant.append(rel)
                break

    return ValidationReport(
        valid=not violations,
        violations=tuple(violations),
        quadratic=all(len(r) == 2 for r in spec.relations),
        admissibility_bound=bound,
        redundant_relations=tuple(redundant),
    )


def gentle_vertices(spec: AlgebraSpec) -> set[str]:
    """Vertices at which the ideal pairs arrows off uniquely.

    An arrow alpha leaving u may annihilate at most one incoming beta
    (alpha.beta in the ideal), and each incoming beta may be annihilated
    by at most one alpha.
    """
    out = set()
    for u in spec.vertices:
        ok = True
        for alpha in spec.out_arrows(u):
            killed = [b for b in spec.in_arrows(u) if spec.path_in_ideal((alpha, b))]
            if len(killed) > 1:
                ok = False
        for beta in spec.in_arrows(u):
            killers = [a for a in spec.out_arrows(u) if spec.path_in_ideal((a, beta))]
            if len(killers) > 1:
                ok = False
        if ok:
            out.add(u)
    return out


def is_gentle_algebra(spec: AlgebraSpec) -> bool:
    quadratic = all(len(r) == 2 for r in spec.relations)
    return quadratic and gentle_vertices(spec) == set(spec.vertices)


def projective_word(spec: AlgebraSpec, u: str) -> Word:
    """The word w1.w2^-1 built from the maximal relation-free paths out of u.

    The module of this word is the indecomposable projective at u; when u
    has no outgoing arrows it degenerates to the trivial word.  Assumes the
    spec is valid (the extension step then never branches).
    """
    if not spec.has_vertex(u):
        raise ParseError(f"unknown vertex {u!r}")
    branches = []
    for first in spec.out_arrows(u):
        path = [first]
        while True:
            nxt = [
                b
                for b in spec.arrow_names
                if spec.arrow_source(b) == spec.arrow_target(path[0])
                and not spec.path_in_ideal((b, *path))
            ]
            if not nxt:
                break
            path.insert(0, nxt[0])
        branches.append(tuple(path))
    if not branches:
        return trivial_word(u)
    letters = tuple(Letter(a, False) for a in branches[0])
    if len(branches) == 2:
        letters += tuple(Letter(b, True) for b in reversed(branches[1]))
    return Word(None, letters)


_ARROW_RE = re.compile(r"^(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$")


def parse_algebra(text: str) -> AlgebraSpec:
    """Parse the plain-text presentation format.

    Three directives, one per line; ``#`` starts a comment::

        vertex <name> [<name> ...]
        arrow <name> : <src> -> <tgt>
        relation <a1>.<a2>[.<a3> ...]

    Anything else is an error.
    """
    vertices: list[str] = []
    arrows: list[ArrowDecl] = []
    relations: list[tuple[str, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "vertex":
            names = rest.split()
            if not names:
                raise ParseError(f"line {lineno}: vertex directive needs a name")
            vertices.extend(names)
        elif head == "arrow":
            m = _ARROW_RE.match(rest)
            if not m:
                raise ParseError(
                    f"line {lineno}: expected 'arrow <name> : <src> -> <tgt>'"
                )
            arrows.append(ArrowDecl(*m.groups()))
        elif head == "relation":
            parts = tuple(p.strip() for p in rest.split("."))
            if not rest or any(not p for p in parts):
                raise ParseError(f"line {lineno}: malformed relation {rest!r}")
            relations.append(parts)
        else:
            raise ParseError(f"line {lineno}: unknown directive {head!r}")
    return AlgebraSpec(tuple(vertices), tuple(arrows), tuple(relations))


def load_algebra(path) -> AlgebraSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())
