"""The strand algebra on 4k points with Z/2 coefficients.

A basis element is an upward partial permutation: a set of strands
``(i, phi(i))`` with ``phi(i) >= i``, sources and targets each distinct.
Elements of the algebra are finite sets of such diagrams; addition is
symmetric difference.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import AmbientMismatch, InputError


def _mask(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


@dataclass(frozen=True)
class StrandDiagram:
    ambient: int
    strands: tuple[tuple[int, int], ...]

    def __post_init__(self):
        strands = tuple(sorted((int(a), int(b)) for a, b in self.strands))
        object.__setattr__(self, "strands", strands)
        sources = [a for a, _ in strands]
        targets = [b for _, b in strands]
        if len(set(sources)) != len(sources):
            raise InputError(f"repeated source in {strands}")
        if len(set(targets)) != len(targets):
            raise InputError(f"repeated target in {strands}")
        for a, b in strands:
            if not 1 <= a <= b <= self.ambient:
                raise InputError(f"strand {a}->{b} invalid on {self.ambient} points")

    @classmethod
    def from_map(cls, ambient: int, phi: Mapping[int, int]) -> StrandDiagram:
        return cls(ambient, tuple(phi.items()))

    @cached_property
    def phi(self) -> dict[int, int]:
        return dict(self.strands)

    @cached_property
    def sources(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.strands)

    @cached_property
    def targets(self) -> frozenset[int]:
        return frozenset(b for _, b in self.strands)

    @cached_property
    def source_mask(self) -> int:
        return _mask(self.sources)

    @cached_property
    def target_mask(self) -> int:
        return _mask(self.targets)

    @cached_property
    def inv(self) -> int:
        return inversions(self)

    @property
    def moving(self) -> tuple[tuple[int, int], ...]:
        """Strands that are not horizontal."""
        return tuple((a, b) for a, b in self.strands if a < b)

    @property
    def horizontal(self) -> frozenset[int]:
        return frozenset(a for a, b in self.strands if a == b)

    def __mul__(self, other: StrandDiagram) -> AlgebraElement:
        return multiply(self, other)

    def to_json(self) -> dict:
        return {"ambient": self.ambient, "strands": [list(s) for s in self.strands]}

    def __str__(self):
        inner = ", ".join(f"{a}->{b}" for a, b in self.strands)
        return "{" + inner + "}"


def inversions(d: StrandDiagram) -> int:
    s = d.strands  # sorted by source
    return sum(1 for (_, x), (_, y) in combinations(s, 2) if x > y)


def idempotent(points: Iterable[int], ambient: int) -> StrandDiagram:
    return StrandDiagram(ambient, tuple((p, p) for p in points))


def _compose(d1: StrandDiagram, d2: StrandDiagram) -> StrandDiagram | None:
    if d1.target_mask != d2.source_mask:
        return None
    phi2 = d2.phi
    composite = StrandDiagram(d1.ambient, tuple((a, phi2[b]) for a, b in d1.strands))
    if composite.inv != d1.inv + d2.inv:
        return None
    return composite


def multiply(d1: StrandDiagram, d2: StrandDiagram) -> AlgebraElement:
    if d1.ambient != d2.ambient:
        raise AmbientMismatch(f"{d1.ambient} != {d2.ambient}")
    c = _compose(d1, d2)
    return AlgebraElement(d1.ambient, frozenset() if c is None else frozenset([c]))


def smoothings(d: StrandDiagram) -> Iterator[tuple[tuple[int, int], StrandDiagram]]:
    """Yield ``((i, j), smoothed)`` for every crossing of ``d``.

    The crossing between sources ``i < j`` with ``phi(i) > phi(j)`` is
    replaced by the strands ``i -> phi(j)`` and ``j -> phi(i)``.
    """
    s = d.strands
    for x, y in combinations(range(len(s)), 2):
        (i, pi), (j, pj) = s[x], s[y]
        if pi > pj:
            new = list(s)
            new[x] = (i, pj)
            new[y] = (j, pi)
            yield (i, j), StrandDiagram(d.ambient, tuple(new))


def differential(d: StrandDiagram) -> AlgebraElement:
    terms: set[StrandDiagram] = set()
    for _, sm in smoothings(d):
        if sm.inv == d.inv - 1:
            terms ^= {sm}
    return AlgebraElement(d.ambient, frozenset(terms))


@dataclass(frozen=True)
class AlgebraElement:
    """A Z/2 combination of strand diagrams on a fixed number of points."""

    ambient: int
    terms: frozenset[StrandDiagram] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "terms", frozenset(self.terms))
        for t in self.terms:
            if t.ambient != self.ambient:
                raise AmbientMismatch(f"term {t} not on {self.ambient} points")

    @classmethod
    def zero(cls, ambient: int) -> AlgebraElement:
        return cls(ambient, frozenset())

    @classmethod
    def of(cls, *diagrams: StrandDiagram) -> AlgebraElement:
        if not diagrams:
            raise InputError("need at least one diagram to infer the ambient size")
        acc: set[StrandDiagram] = set()
        for d in diagrams:
            acc ^= {d}
        return cls(diagrams[0].ambient, frozenset(acc))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[StrandDiagram]:
        return sorted(self.terms, key=lambda d: d.strands)

    def _check(self, other: AlgebraElement):
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"{self.ambient} != {other.ambient}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        return AlgebraElement(self.ambient, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, StrandDiagram):
            other = AlgebraElement(other.ambient, frozenset([other]))
        self._check(other)
        by_source: dict[int, list[StrandDiagram]] = {}
        for t in other.terms:
            by_source.setdefault(t.source_mask, []).append(t)
        acc: set[StrandDiagram] = set()
        for a in self.terms:
            for b in by_source.get(a.target_mask, ()):
                c = _compose(a, b)
                if c is not None:
                    acc ^= {c}
        return AlgebraElement(self.ambient, frozenset(acc))

    def differential(self) -> AlgebraElement:
        acc: set[StrandDiagram] = set()
        for t in self.terms:
            acc ^= differential(t).terms
        return AlgebraElement(self.ambient, frozenset(acc))

    def to_json(self) -> dict:
        return {"ambient": self.ambient, "terms": [t.to_json()["strands"] for t in self]}

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(str(t) for t in self)


def all_diagrams(ambient: int) -> list[StrandDiagram]:
    """Every basis element of the strand algebra on ``ambient`` points."""
    out: list[StrandDiagram] = []

    def rec(i: int, used: int, acc: list[tuple[int, int]]):
        if i > ambient:
            out.append(StrandDiagram(ambient, tuple(acc)))
            return
        rec(i + 1, used, acc)
        for t in range(i, ambient + 1):
            if not used >> t & 1:
                acc.append((i, t))
                rec(i + 1, used | 1 << t, acc)
                acc.pop()

    rec(1, 0, [])
    return out
