"""The grading group G'(4k) and the bookkeeping around it.

A grading element is a pair ``(j, alpha)``: a half-integer Maslov component
and a class in H_1(Z minus z, a), recorded as multiplicities on the 4k-1
segments between consecutive marked points.  All arithmetic is exact;
half-integers are stored as twice their value.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Iterable, Sequence

from .algebra import ChordSet, MatchedGenerator, PairType, ReebChord, classify_pair
from .errors import EpsilonViolation, InputError, ZeroGenerator
from .pmc import PointedMatchedCircle
from .strands import StrandDiagram


@functools.total_ordering
class HalfInteger:
    """An element of (1/2)Z."""

    __slots__ = ("twice",)

    def __init__(self, twice: int = 0):
        if not isinstance(twice, int):
            raise TypeError(f"twice-value must be an int, got {twice!r}")
        self.twice = twice

    @classmethod
    def of(cls, value) -> HalfInteger:
        if isinstance(value, HalfInteger):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, Rational):
            doubled = Fraction(value) * 2
            if doubled.denominator != 1:
                raise InputError(f"{value} is not a half-integer")
            return cls(int(doubled))
        raise TypeError(f"cannot make a half-integer from {value!r}")

    @staticmethod
    def _coerce(other):
        try:
            return HalfInteger.of(other)
        except (TypeError, InputError):
            return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return HalfInteger(self.twice + o.twice)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return HalfInteger(self.twice - o.twice)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return HalfInteger(o.twice - self.twice)

    def __neg__(self):
        return HalfInteger(-self.twice)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return HalfInteger(self.twice * n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, HalfInteger):
            return self.twice == other.twice
        if isinstance(other, Rational):
            return Fraction(self.twice, 2) == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, HalfInteger):
            return self.twice < other.twice
        if isinstance(other, Rational):
            return Fraction(self.twice, 2) < other
        return NotImplemented

    def __hash__(self):
        return hash(Fraction(self.twice, 2))

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __int__(self):
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def mod1(self) -> HalfInteger:
        """Representative in {0, 1/2}."""
        return HalfInteger(self.twice % 2)

    def __str__(self):
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInteger({self})"


HALF = HalfInteger(1)
ZERO = HalfInteger(0)


@dataclass(frozen=True)
class HomologyClass:
    """Segment multiplicities; entry i is the segment between points i+1 and i+2."""

    mults: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))

    @classmethod
    def zero(cls, num_points: int) -> HomologyClass:
        return cls((0,) * (num_points - 1))

    @property
    def num_points(self) -> int:
        return len(self.mults) + 1

    def segment(self, i: int) -> int:
        """Multiplicity on the segment from point i to point i+1 (0 next to z)."""
        if 1 <= i < self.num_points:
            return self.mults[i - 1]
        return 0

    def _check(self, other: HomologyClass):
        if len(self.mults) != len(other.mults):
            raise InputError(f"classes on {self.num_points} and {other.num_points} points")

    def __add__(self, other: HomologyClass) -> HomologyClass:
        self._check(other)
        return HomologyClass(tuple(a + b for a, b in zip(self.mults, other.mults)))

    def __neg__(self) -> HomologyClass:
        return HomologyClass(tuple(-a for a in self.mults))

    def __sub__(self, other: HomologyClass) -> HomologyClass:
        return self + (-other)

    def __mul__(self, n: int) -> HomologyClass:
        return HomologyClass(tuple(n * a for a in self.mults))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.mults)

    def __str__(self):
        return "(" + ",".join(map(str, self.mults)) + ")"


def interval_class(minus: int, plus: int, num_points: int) -> HomologyClass:
    return HomologyClass(tuple(1 if minus <= i < plus else 0 for i in range(1, num_points)))


def homology_class(x, num_points: int | None = None) -> HomologyClass:
    """Class of a strand diagram, chord set, or single chord.

    ``num_points`` is required for chords (a strand diagram carries it).
    """
    if isinstance(x, StrandDiagram):
        num_points = x.ambient
        pairs: Iterable = x.strands
    elif isinstance(x, ReebChord):
        pairs = [tuple(x)]
    else:
        pairs = [tuple(c) for c in x]
    if num_points is None:
        raise InputError("number of points needed to build a class from chords")
    mults = [0] * (num_points - 1)
    for a, b in pairs:
        if b > num_points:
            raise InputError(f"chord [{a},{b}] beyond {num_points} points")
        for i in range(a, b):
            mults[i - 1] += 1
    return HomologyClass(tuple(mults))


def boundary(alpha: HomologyClass) -> tuple[int, ...]:
    """Boundary as a vector over points 1..4k: +1 at a chord's end, -1 at its start."""
    return tuple(alpha.segment(p - 1) - alpha.segment(p) for p in range(1, alpha.num_points + 1))


def point_multiplicity(points, alpha: HomologyClass) -> HalfInteger:
    """m(p, alpha): average multiplicity on the two segments next to p.

    ``points`` may be a single point or an iterable of points (summed).
    """
    if isinstance(points, int):
        points = (points,)
    return HalfInteger(sum(alpha.segment(p - 1) + alpha.segment(p) for p in points))


def _m_weighted(vec: Sequence[int], alpha: HomologyClass) -> HalfInteger:
    return HalfInteger(
        sum(c * (alpha.segment(p - 1) + alpha.segment(p)) for p, c in enumerate(vec, start=1) if c)
    )


def pairing_L(alpha1: HomologyClass, alpha2: HomologyClass) -> HalfInteger:
    """L(a1, a2) = m(boundary a1, a2)."""
    alpha1._check(alpha2)
    return _m_weighted(boundary(alpha1), alpha2)


def epsilon(alpha: HomologyClass) -> HalfInteger:
    """A quarter of the number of parity changes, reduced to {0, 1/2}."""
    changes = sum(
        1 for p in range(1, alpha.num_points + 1) if (alpha.segment(p - 1) - alpha.segment(p)) % 2
    )
    # the count is always even
    return HalfInteger(changes // 2).mod1()


def iota_strands(d: StrandDiagram) -> HalfInteger:
    """inv(d) - m(S, [d])."""
    return HalfInteger(2 * d.inv) - point_multiplicity(d.sources, homology_class(d))


def chord_multiplicity(p: int, sigma: ReebChord) -> HalfInteger:
    """The table m(p, sigma): 1 inside, 1/2 at an endpoint, 0 outside."""
    if sigma.minus < p < sigma.plus:
        return HalfInteger(2)
    if p in (sigma.minus, sigma.plus):
        return HALF
    return ZERO


def chord_pairing(rho: ReebChord, sigma: ReebChord) -> HalfInteger:
    """L([rho], [sigma]) evaluated straight from the multiplicity table."""
    return chord_multiplicity(rho.plus, sigma) - chord_multiplicity(rho.minus, sigma)


def set_pairing(rho: Iterable[ReebChord], sigma: Iterable[ReebChord]) -> HalfInteger:
    sigma = list(sigma)
    return sum((chord_pairing(r, s) for r in rho for s in sigma), ZERO)


def iota_chordset(rho: ChordSet) -> HalfInteger:
    """-|rho|/2 - |abutting pairs|/2 - |interleaved pairs|."""
    if not isinstance(rho, ChordSet):
        rho = ChordSet.of(rho)
    abutting = interleaved = 0
    for a, b in combinations(rho.chords, 2):
        kind = classify_pair(a, b)
        if kind in (PairType.ABUTS_FORWARD, PairType.ABUTS_BACKWARD):
            abutting += 1
        elif kind is PairType.INTERLEAVED:
            interleaved += 1
    return HalfInteger(-len(rho) - abutting - 2 * interleaved)


def iota_sequence(seq: Sequence) -> HalfInteger:
    """Sum of iota over the entries plus L over every ordered pair i < j."""
    sets = [s if isinstance(s, ChordSet) else ChordSet.of(s) for s in seq]
    total = sum((iota_chordset(s) for s in sets), ZERO)
    for i, j in combinations(range(len(sets)), 2):
        total += set_pairing(sets[i], sets[j])
    return total


@dataclass(frozen=True)
class GradingElement:
    maslov: HalfInteger
    alpha: HomologyClass

    def __post_init__(self):
        object.__setattr__(self, "maslov", HalfInteger.of(self.maslov))
        if epsilon(self.alpha) != self.maslov.mod1():
            raise EpsilonViolation(
                f"epsilon{self.alpha} = {epsilon(self.alpha)} but Maslov component is {self.maslov}"
            )

    @classmethod
    def identity(cls, num_points: int) -> GradingElement:
        return cls(ZERO, HomologyClass.zero(num_points))

    def __mul__(self, other: GradingElement) -> GradingElement:
        return compose(self, other)

    def to_json(self) -> dict:
        return {"maslov2": self.maslov.twice, "alpha": list(self.alpha.mults)}

    def __str__(self):
        return f"({self.maslov}, {self.alpha})"


def compose(g1: GradingElement, g2: GradingElement) -> GradingElement:
    return GradingElement(g1.maslov + g2.maslov + pairing_L(g1.alpha, g2.alpha), g1.alpha + g2.alpha)


def inverse(g: GradingElement) -> GradingElement:
    return GradingElement(-g.maslov + pairing_L(g.alpha, g.alpha), -g.alpha)


def lambda_pow(n: int, g: GradingElement) -> GradingElement:
    """lambda^n . g, where lambda = (1, 0) is central."""
    return compose(GradingElement(HalfInteger(2 * n), HomologyClass.zero(g.alpha.num_points)), g)


def grade(x) -> GradingElement:
    """gr'(x) = (iota, [x]) for a strand diagram or a nonzero matched generator.

    For a generator every expansion term is graded and all must agree.
    """
    if isinstance(x, StrandDiagram):
        return GradingElement(iota_strands(x), homology_class(x))
    if isinstance(x, MatchedGenerator):
        terms = x.expansion.sorted_terms()
        if not terms:
            raise ZeroGenerator(f"{x} is zero")
        grades = {grade(t) for t in terms}
        if len(grades) != 1:
            raise InputError(f"expansion terms of {x} have different gradings: {sorted(map(str, grades))}")
        return grades.pop()
    raise TypeError(f"cannot grade {type(x).__name__}")


@dataclass(frozen=True)
class Membership:
    """Idempotent data (s, t) with M_*(boundary alpha) = t - s.

    ``s`` and ``t`` are the smallest such pair; any common superset pair is
    also admissible.  ``diagonal`` is set when the class has zero pushforward.
    """

    s: frozenset[int]
    t: frozenset[int]
    diagonal: bool

    def admits(self, s: Iterable[int], t: Iterable[int]) -> bool:
        s, t = frozenset(s), frozenset(t)
        return len(s) == len(t) and s - t == self.s and t - s == self.t

    def to_json(self) -> dict:
        return {"s": sorted(self.s), "t": sorted(self.t), "diagonal": self.diagonal}


def pushforward_boundary(alpha: HomologyClass, pmc: PointedMatchedCircle) -> dict[int, int]:
    if alpha.num_points != pmc.num_points:
        raise InputError(f"class on {alpha.num_points} points, circle has {pmc.num_points}")
    out = {h: 0 for h in range(1, pmc.num_handles + 1)}
    for p, c in enumerate(boundary(alpha), start=1):
        out[pmc.handle(p)] += c
    return out


def refined_membership(g: GradingElement, pmc: PointedMatchedCircle) -> Membership | None:
    """The (s, t) data placing ``g`` in the refined groupoid, or None."""
    push = pushforward_boundary(g.alpha, pmc)
    if any(abs(v) > 1 for v in push.values()):
        return None
    s = frozenset(h for h, v in push.items() if v == -1)
    t = frozenset(h for h, v in push.items() if v == 1)
    return Membership(s, t, diagonal=not s and not t)
