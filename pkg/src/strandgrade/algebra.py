"""The matched strand algebra of a pointed matched circle.

Generators are stored as pairs ``(s, rho)``: a set of occupied handles and a
consistent set of Reeb chords, standing for ``I(s) a(rho)``.  Their
expansion into the unmatched strand algebra is the ground truth for
products and differentials.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator

from .errors import InconsistentChords, InconsistentResult, InputError, JoinRuleViolation
from .pmc import PointedMatchedCircle
from .strands import AlgebraElement, StrandDiagram


@dataclass(frozen=True, order=True)
class ReebChord:
    minus: int
    plus: int

    def __post_init__(self):
        if not 1 <= self.minus < self.plus:
            raise InputError(f"invalid Reeb chord [{self.minus},{self.plus}]")

    def __iter__(self):
        yield self.minus
        yield self.plus

    def __str__(self):
        return f"[{self.minus},{self.plus}]"

    __repr__ = __str__


def chord(minus: int, plus: int) -> ReebChord:
    return ReebChord(minus, plus)


@dataclass(frozen=True)
class ChordSet:
    """A consistent set of Reeb chords: starts distinct, ends distinct."""

    chords: tuple[ReebChord, ...] = ()

    def __post_init__(self):
        cs = tuple(sorted(c if isinstance(c, ReebChord) else ReebChord(*c) for c in self.chords))
        object.__setattr__(self, "chords", cs)
        if len(set(c.minus for c in cs)) != len(cs) or len(set(c.plus for c in cs)) != len(cs):
            raise InconsistentChords(f"chord set {list(cs)} is not consistent")

    @classmethod
    def of(cls, pairs: Iterable) -> ChordSet:
        return cls(tuple(pairs))

    def __iter__(self) -> Iterator[ReebChord]:
        return iter(self.chords)

    def __len__(self):
        return len(self.chords)

    def __bool__(self):
        return bool(self.chords)

    @property
    def minus(self) -> frozenset[int]:
        return frozenset(c.minus for c in self.chords)

    @property
    def plus(self) -> frozenset[int]:
        return frozenset(c.plus for c in self.chords)

    def to_json(self) -> list:
        return [[c.minus, c.plus] for c in self.chords]

    def __str__(self):
        return "{" + ",".join(str(c) for c in self.chords) + "}"

    __repr__ = __str__


class PairType(enum.Enum):
    NESTED = "nested"
    INTERLEAVED = "interleaved"
    ABUTS_FORWARD = "abutting(first->second)"
    ABUTS_BACKWARD = "abutting(second->first)"
    DISJOINT = "disjoint"
    SHARED_ENDPOINT = "shares-other-endpoint"


def classify_pair(r1: ReebChord, r2: ReebChord) -> PairType:
    if r1.plus == r2.minus:
        return PairType.ABUTS_FORWARD
    if r2.plus == r1.minus:
        return PairType.ABUTS_BACKWARD
    if r1.minus == r2.minus or r1.plus == r2.plus:
        return PairType.SHARED_ENDPOINT
    a, b = (r1, r2) if r1.minus < r2.minus else (r2, r1)
    if b.minus > a.plus:
        return PairType.DISJOINT
    if b.plus < a.plus:
        return PairType.NESTED
    return PairType.INTERLEAVED


def join_sets(rho: ChordSet, sigma: ChordSet) -> ChordSet:
    """Union of two chord sets with each abutting pair concatenated."""
    starts = {c.minus: c for c in sigma}
    used = set()
    out = []
    for r in rho:
        s = starts.get(r.plus)
        if s is not None:
            used.add(s)
            out.append(ReebChord(r.minus, s.plus))
        else:
            out.append(r)
    out.extend(s for s in sigma if s not in used)
    try:
        return ChordSet(tuple(out))
    except InconsistentChords as exc:
        raise InconsistentResult(f"join of {rho} and {sigma} is inconsistent") from exc


@dataclass(frozen=True)
class MatchedGenerator:
    pmc: PointedMatchedCircle
    s: frozenset[int]
    chords: ChordSet = ChordSet()

    def __post_init__(self):
        object.__setattr__(self, "s", frozenset(self.s))
        if not isinstance(self.chords, ChordSet):
            object.__setattr__(self, "chords", ChordSet.of(self.chords))
        n = self.pmc.num_points
        for c in self.chords:
            if c.plus > n:
                raise InputError(f"chord {c} leaves the {n} marked points")
        bad = [h for h in self.s if not 1 <= h <= self.pmc.num_handles]
        if bad:
            raise InputError(f"handle labels {sorted(bad)} out of range")

    def is_nonzero(self) -> bool:
        """Criterion for I(s)a(rho) != 0."""
        pmc, rho = self.pmc, self.chords
        if not pmc.is_injective_on(rho.minus) or not pmc.is_injective_on(rho.plus):
            return False
        m_minus = pmc.image(rho.minus)
        if not m_minus <= self.s:
            return False
        return not ((self.s - m_minus) & pmc.image(rho.plus))

    @property
    def target(self) -> frozenset[int]:
        """The right idempotent t = M(rho+) u (s \\ M(rho-))."""
        pmc = self.pmc
        return pmc.image(self.chords.plus) | (self.s - pmc.image(self.chords.minus))

    @cached_property
    def expansion(self) -> AlgebraElement:
        return expand_generator(self)

    def to_json(self) -> dict:
        return {"s": sorted(self.s), "chords": self.chords.to_json()}

    def sort_key(self):
        return (len(self.chords), [tuple(c) for c in self.chords], sorted(self.s))

    def __str__(self):
        return f"I({{{','.join(map(str, sorted(self.s)))}}})a({self.chords})"

    __repr__ = __str__


def generator(pmc: PointedMatchedCircle, s: Iterable[int], chords: Iterable = ()) -> MatchedGenerator:
    return MatchedGenerator(pmc, frozenset(s), ChordSet.of(chords))


def expand_generator(g: MatchedGenerator) -> AlgebraElement:
    """Sum of strand diagrams making up I(s)a(rho); zero if the criterion fails."""
    pmc = g.pmc
    n = pmc.num_points
    if not g.is_nonzero():
        return AlgebraElement.zero(n)
    chord_strands = [(c.minus, c.plus) for c in g.chords]
    free = sorted(g.s - pmc.image(g.chords.minus))
    endpoints = g.chords.minus | g.chords.plus
    choices = [[p for p in pmc.points_of(h) if p not in endpoints] for h in free]
    terms = set()
    for picks in product(*choices):
        strands = chord_strands + [(p, p) for p in picks]
        terms.add(StrandDiagram(n, tuple(strands)))
    return AlgebraElement(n, frozenset(terms))


def mul(g1: MatchedGenerator, g2: MatchedGenerator) -> AlgebraElement:
    if g1.pmc != g2.pmc:
        raise InputError("generators live on different pointed matched circles")
    return g1.expansion * g2.expansion


def mul_generator(g1: MatchedGenerator, g2: MatchedGenerator) -> MatchedGenerator | None:
    """The product as a single generator, or None when it vanishes.

    The product is computed on expansions and then checked against the
    join rule a(rho)a(sigma) = a(rho joined with sigma).
    """
    prod = mul(g1, g2)
    if not prod:
        return None
    joined = generator(g1.pmc, g1.s, join_sets(g1.chords, g2.chords).chords)
    if joined.expansion != prod:
        raise JoinRuleViolation(f"{g1} * {g2} = {prod} but join gives {joined.expansion}")
    return joined


def diff(g: MatchedGenerator) -> AlgebraElement:
    return g.expansion.differential()


def decompose(element: AlgebraElement, pmc: PointedMatchedCircle) -> list[MatchedGenerator]:
    """Write an element of the matched algebra as a sum of generators I(s)a(rho).

    Raises InputError if the element is not in the matched subalgebra.
    """
    groups: dict[MatchedGenerator, set[StrandDiagram]] = {}
    for d in element.terms:
        if not pmc.is_injective_on(d.sources):
            raise InputError(f"term {d} is not killed by any idempotent")
        g = generator(pmc, pmc.image(d.sources), d.moving)
        groups.setdefault(g, set()).add(d)
    gens = []
    for g, terms in groups.items():
        if g.expansion.terms != frozenset(terms):
            raise InputError(f"terms {sorted(map(str, terms))} do not assemble into {g}")
        gens.append(g)
    return sorted(gens, key=MatchedGenerator.sort_key)


def consistent_chord_sets(pmc: PointedMatchedCircle, max_size: int | None = None) -> list[ChordSet]:
    """Chord sets with M injective on starts and on ends.

    Such sets have at most 2k chords.
    """
    n = pmc.num_points
    cap = pmc.num_handles if max_size is None else min(max_size, pmc.num_handles)
    out: list[ChordSet] = []

    def rec(p: int, acc: list[ReebChord], ends: set[int], hm: set[int], hp: set[int]):
        if p > n:
            out.append(ChordSet(tuple(acc)))
            return
        rec(p + 1, acc, ends, hm, hp)
        hp_ = pmc.handle(p)
        if len(acc) >= cap or hp_ in hm:
            return
        for q in range(p + 1, n + 1):
            hq = pmc.handle(q)
            if q in ends or hq in hp:
                continue
            acc.append(ReebChord(p, q))
            ends.add(q)
            hm.add(hp_)
            hp.add(hq)
            rec(p + 1, acc, ends, hm, hp)
            acc.pop()
            ends.discard(q)
            hm.discard(hp_)
            hp.discard(hq)

    rec(1, [], set(), set(), set())
    return sorted(out, key=lambda c: (len(c), [tuple(x) for x in c]))


def all_consistent_sets(num_points: int, max_size: int | None = None) -> list[ChordSet]:
    """Every consistent chord set on ``num_points`` points, no matching constraint."""
    out: list[ChordSet] = []

    def rec(p: int, acc: list[ReebChord], ends: set[int]):
        if p > num_points:
            out.append(ChordSet(tuple(acc)))
            return
        rec(p + 1, acc, ends)
        if max_size is not None and len(acc) >= max_size:
            return
        for q in range(p + 1, num_points + 1):
            if q not in ends:
                acc.append(ReebChord(p, q))
                ends.add(q)
                rec(p + 1, acc, ends)
                acc.pop()
                ends.discard(q)

    rec(1, [], set())
    return sorted(out, key=lambda c: (len(c), [tuple(x) for x in c]))


def enumerate_generators(
    pmc: PointedMatchedCircle, max_chords: int | None = None, sizes: Iterable[int] | None = None
) -> list[MatchedGenerator]:
    """All nonzero I(s)a(rho), ordered by chord count, chords, then s.

    ``sizes`` optionally restricts |s|.
    """
    handles = range(1, pmc.num_handles + 1)
    wanted = None if sizes is None else set(sizes)
    gens = []
    for rho in consistent_chord_sets(pmc, max_chords):
        m_minus = pmc.image(rho.minus)
        spare = [h for h in handles if h not in m_minus and h not in pmc.image(rho.plus)]
        for r in range(len(spare) + 1):
            for extra in combinations(spare, r):
                s = m_minus | frozenset(extra)
                if wanted is not None and len(s) not in wanted:
                    continue
                gens.append(MatchedGenerator(pmc, s, rho))
    return sorted(gens, key=MatchedGenerator.sort_key)


def composable_pairs(gens: list[MatchedGenerator]) -> Iterator[tuple[MatchedGenerator, MatchedGenerator]]:
    """Pairs (g1, g2) whose idempotents match: t(g1) = s(g2)."""
    by_s: dict[frozenset[int], list[MatchedGenerator]] = {}
    for g in gens:
        by_s.setdefault(g.s, []).append(g)
    for g1 in gens:
        for g2 in by_s.get(g1.target, ()):
            yield g1, g2
