"""Combinatorics of bordered Heegaard diagrams given as region data.

The surface itself is never built.  A diagram is a list of regions (those
not containing the basepoint) with their Euler characteristic, corner
counts, corner quadrants at intersection points and multiplicities on the
boundary segments of the pointed matched circle.  Domains are integer
vectors over the regions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import BoundaryMismatch, BoundaryNonzero, InputError, NonIntegralIndex
from .grading import HomologyClass, homology_class, iota_sequence
from .pmc import PointedMatchedCircle

# Counterclockwise from the sector between the positive alpha and positive
# beta directions.
QUADRANTS = ("ne", "nw", "sw", "se")


@dataclass(frozen=True)
class IntersectionPoint:
    id: int
    alpha: int
    beta: int
    arc: bool = False


@dataclass(frozen=True)
class RegionData:
    euler_char: int
    convex: int
    concave: int
    # point id -> quadrant labels occupied by this region at that point
    quadrants: Mapping[int, tuple[str, ...]] = field(default_factory=dict)
    bseg: tuple[int, ...] = ()
    # point id -> corner count when quadrants are not labelled
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for p, labels in self.quadrants.items():
            bad = [q for q in labels if q not in QUADRANTS]
            if bad or len(set(labels)) != len(labels):
                raise InputError(f"bad quadrant labels {list(labels)} at point {p}")
        for p, c in self.counts.items():
            if not 0 <= c <= 4:
                raise InputError(f"corner count {c} at point {p} outside 0..4")

    def corners_at(self, point: int) -> int:
        if point in self.quadrants:
            return len(self.quadrants[point])
        return self.counts.get(point, 0)

    @property
    def euler_measure(self) -> Fraction:
        return self.euler_char + Fraction(self.concave - self.convex, 4)

    @property
    def labelled(self) -> bool:
        return not self.counts


@dataclass(frozen=True)
class BorderedDiagramData:
    pmc: PointedMatchedCircle
    regions: tuple[RegionData, ...]
    points: tuple[IntersectionPoint, ...]
    num_beta: int
    num_alpha_circles: int

    def __post_init__(self):
        ids = [p.id for p in self.points]
        if len(set(ids)) != len(ids):
            raise InputError("repeated intersection point id")
        known = set(ids)
        nseg = self.pmc.num_points - 1
        for i, r in enumerate(self.regions):
            unknown = (set(r.quadrants) | set(r.counts)) - known
            if unknown:
                raise InputError(f"region {i} refers to unknown points {sorted(unknown)}")
            if len(r.bseg) != nseg:
                raise InputError(f"region {i} has {len(r.bseg)} boundary entries, expected {nseg}")
        for p in self.points:
            if not 1 <= p.beta <= self.num_beta:
                raise InputError(f"point {p.id} on beta circle {p.beta} out of range")
            limit = self.num_alpha_arcs if p.arc else self.num_alpha_circles
            if not 1 <= p.alpha <= limit:
                raise InputError(f"point {p.id} on alpha {'arc' if p.arc else 'circle'} {p.alpha} out of range")

    @property
    def num_alpha_arcs(self) -> int:
        return self.pmc.num_handles

    def point(self, pid: int) -> IntersectionPoint:
        for p in self.points:
            if p.id == pid:
                return p
        raise InputError(f"no intersection point {pid}")


@dataclass(frozen=True)
class Generator:
    points: frozenset[int]
    occupied_arcs: frozenset[int] = frozenset()

    def __iter__(self):
        return iter(sorted(self.points))


@dataclass(frozen=True)
class BorderedDomain:
    mult: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mult", tuple(int(m) for m in self.mult))

    def __add__(self, other: BorderedDomain) -> BorderedDomain:
        return BorderedDomain(tuple(a + b for a, b in zip(self.mult, other.mult, strict=True)))

    def __mul__(self, n: int) -> BorderedDomain:
        return BorderedDomain(tuple(n * a for a in self.mult))

    __rmul__ = __mul__


def _check_domain(D: BorderedDiagramData, B: BorderedDomain):
    if len(B.mult) != len(D.regions):
        raise InputError(f"domain has {len(B.mult)} entries for {len(D.regions)} regions")


def make_generator(D: BorderedDiagramData, point_ids: Iterable[int]) -> Generator:
    pts = frozenset(point_ids)
    arcs = frozenset(D.point(p).alpha for p in pts if D.point(p).arc)
    return Generator(pts, arcs)


def is_generator(D: BorderedDiagramData, point_ids: Iterable[int]) -> bool:
    pts = [D.point(p) for p in point_ids]
    betas = [p.beta for p in pts]
    circles = [p.alpha for p in pts if not p.arc]
    arcs = [p.alpha for p in pts if p.arc]
    return (
        sorted(betas) == list(range(1, D.num_beta + 1))
        and sorted(circles) == list(range(1, D.num_alpha_circles + 1))
        and len(set(arcs)) == len(arcs)
    )


def enumerate_gens(D: BorderedDiagramData) -> list[Generator]:
    """One point per beta circle, one per alpha circle, at most one per alpha arc."""
    by_beta = [[p.id for p in D.points if p.beta == b] for b in range(1, D.num_beta + 1)]
    gens = []
    for choice in product(*by_beta):
        if is_generator(D, choice):
            gens.append(make_generator(D, choice))
    return sorted(gens, key=lambda g: sorted(g.points))


def euler_measure(D: BorderedDiagramData, B: BorderedDomain) -> Fraction:
    _check_domain(D, B)
    return sum((m * r.euler_measure for m, r in zip(B.mult, D.regions)), Fraction(0))


def point_measure(D: BorderedDiagramData, B: BorderedDomain, x: Iterable[int]) -> Fraction:
    """n_x(B): a quarter of the corners at points of x, with multiplicity."""
    _check_domain(D, B)
    pts = x.points if isinstance(x, Generator) else frozenset(x)
    total = sum(m * r.corners_at(p) for m, r in zip(B.mult, D.regions) for p in pts)
    return Fraction(total, 4)


def boundary_reeb(D: BorderedDiagramData, B: BorderedDomain) -> HomologyClass:
    _check_domain(D, B)
    acc = [0] * (D.pmc.num_points - 1)
    for m, r in zip(B.mult, D.regions):
        for i, v in enumerate(r.bseg):
            acc[i] += m * v
    return HomologyClass(tuple(acc))


def corner_defect(D: BorderedDiagramData, B: BorderedDomain, point: int) -> int:
    """(n_ne + n_sw) - (n_nw + n_se) at an intersection point."""
    _check_domain(D, B)
    local = dict.fromkeys(QUADRANTS, 0)
    for m, r in zip(B.mult, D.regions):
        if not m:
            continue
        count = r.counts.get(point, 0)
        # all four corners cancel; anything less needs the labels
        if count not in (0, 4):
            raise InputError(f"corner quadrants at point {point} are not labelled")
        for q in r.quadrants.get(point, ()):
            local[q] += m
    return local["ne"] + local["sw"] - local["nw"] - local["se"]


def validate_domain(D: BorderedDiagramData, B: BorderedDomain, x, y) -> bool:
    """Corner test for B connecting x to y: defect +1 on y\\x, -1 on x\\y, 0 elsewhere."""
    xs = x.points if isinstance(x, Generator) else frozenset(x)
    ys = y.points if isinstance(y, Generator) else frozenset(y)
    for p in D.points:
        want = (p.id in ys) - (p.id in xs)
        if corner_defect(D, B, p.id) != want:
            return False
    return True


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralIndex(f"{what} = {value} is not an integer")
    return int(value)


def index(D: BorderedDiagramData, B: BorderedDomain, x, y, rho_seq: Sequence = ()) -> int:
    """e(B) + n_x(B) + n_y(B) + iota(rho) + l, for boundary(B) = sum of [rho_i]."""
    n = D.pmc.num_points
    target = HomologyClass.zero(n)
    for rho in rho_seq:
        target += homology_class(list(rho), n)
    actual = boundary_reeb(D, B)
    if actual != target:
        raise BoundaryMismatch(f"boundary of domain is {actual} but chords give {target}")
    value = (
        euler_measure(D, B)
        + point_measure(D, B, x)
        + point_measure(D, B, y)
        + iota_sequence(list(rho_seq)).to_fraction()
        + len(rho_seq)
    )
    return _as_int(value, "index")


def closed_index(D: BorderedDiagramData, B: BorderedDomain, x, y) -> int:
    """Index of a domain that does not touch the boundary."""
    if boundary_reeb(D, B):
        raise BoundaryNonzero("domain meets the boundary; use index() with Reeb chords")
    value = euler_measure(D, B) + point_measure(D, B, x) + point_measure(D, B, y)
    return _as_int(value, "index")
