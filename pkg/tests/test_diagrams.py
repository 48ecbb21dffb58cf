from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

import pytest

from conftest import load
from strandgrade.algebra import ChordSet
from strandgrade.diagrams import (
    BorderedDomain,
    boundary_reeb,
    closed_index,
    corner_defect,
    enumerate_gens,
    euler_measure,
    index,
    is_generator,
    make_generator,
    point_measure,
    validate_domain,
)
from strandgrade.errors import BoundaryMismatch, BoundaryNonzero, InputError, NonIntegralIndex
from strandgrade.grading import iota_sequence
from strandgrade.io import parse_diagram

BIGON = parse_diagram(load("bigon.json"))
SQUARE = parse_diagram(load("square.json"))
HALF_STRIP = parse_diagram(load("boundary_bigon.json"))
STRIPS = parse_diagram(load("strips_genus2.json"))
quarter = Fraction(1, 4)


def test_measures_bigon():
    B = BorderedDomain((1, 0))
    assert euler_measure(BIGON, B) == Fraction(1, 2)
    assert point_measure(BIGON, B, [1]) == quarter
    assert point_measure(BIGON, BorderedDomain((0, 0)), [1]) == 0
    assert closed_index(BIGON, B, {1, 3}, {2, 3}) == 1


def test_measures_square():
    B = BorderedDomain((1, 0))
    assert euler_measure(SQUARE, B) == 0
    assert point_measure(SQUARE, B, [2, 4, 5]) == Fraction(1, 2)
    assert closed_index(SQUARE, B, {2, 4, 5}, {1, 3, 5}) == 1


def test_zero_domain():
    Z = BorderedDomain((0, 0))
    assert closed_index(BIGON, Z, {1, 3}, {1, 3}) == 0
    assert index(BIGON, Z, {1, 3}, {1, 3}, []) == 0
    assert validate_domain(BIGON, Z, {1, 3}, {1, 3})


def test_boundary_half_strip():
    B = BorderedDomain((1, 0))
    assert boundary_reeb(HALF_STRIP, B).mults == (1, 0, 0)
    assert boundary_reeb(HALF_STRIP, B * 2).mults == (2, 0, 0)
    assert index(HALF_STRIP, B, {1}, {2}, [ChordSet.of([(1, 2)])]) == 1
    with pytest.raises(BoundaryMismatch):
        index(HALF_STRIP, B, {1}, {2}, [ChordSet.of([(1, 3)])])
    with pytest.raises(BoundaryNonzero):
        closed_index(HALF_STRIP, B, {1}, {2})


def test_non_integral_index():
    # one corner short of a bigon leaves a quarter over
    with pytest.raises(NonIntegralIndex):
        closed_index(BIGON, BorderedDomain((1, 0)), {1, 3}, {3})


def test_corner_test():
    B = BorderedDomain((1, 0))
    assert corner_defect(BIGON, B, 1) == -1
    assert corner_defect(BIGON, B, 2) == 1
    assert validate_domain(BIGON, B, {1, 3}, {2, 3})
    assert not validate_domain(BIGON, B, {2, 3}, {1, 3})
    assert validate_domain(SQUARE, B, {2, 4, 5}, {1, 3, 5})
    assert validate_domain(HALF_STRIP, B, {1}, {2})


def test_generators():
    assert [sorted(g.points) for g in enumerate_gens(BIGON)] == [[1, 3], [2, 3]]
    assert not is_generator(BIGON, [1, 2])
    assert make_generator(HALF_STRIP, [1]).occupied_arcs == {1}
    # the two-beta square diagram: beta 1 and beta 2 each pick a point on a
    # distinct alpha circle, beta 3 takes the arc point
    assert [sorted(g.points) for g in enumerate_gens(SQUARE)] == [[1, 3, 5], [2, 4, 5]]


def test_domain_length_checked():
    with pytest.raises(InputError):
        euler_measure(BIGON, BorderedDomain((1,)))


def _chords_from_segments(segs: list[int]) -> list[tuple[int, int]]:
    """Maximal runs of consecutive segments, as chords."""
    out, start = [], None
    for i in range(1, 9):
        if i in segs and start is None:
            start = i
        if i not in segs and start is not None:
            out.append((start, i))
            start = None
    return out


def test_disjoint_chord_reduction():
    checked = 0
    for r in range(1, 4):
        for segs in combinations(range(1, 8), r):
            chords = _chords_from_segments(list(segs))
            # keep only chords that share no endpoints
            ends = [p for c in chords for p in c]
            if len(set(ends)) != len(ends):
                continue
            mult = tuple(1 if i + 1 in segs else 0 for i in range(7))
            B = BorderedDomain(mult)
            x = {2 * a - 1 for a, _ in chords}
            y = {2 * (b - 1) for _, b in chords}
            base = euler_measure(STRIPS, B) + point_measure(STRIPS, B, x) + point_measure(STRIPS, B, y)
            for order in permutations(chords):
                rho = [ChordSet.of([c]) for c in order]
                q = len(rho)
                assert iota_sequence(rho) == Fraction(-q, 2)
                assert index(STRIPS, B, x, y, rho) - q == base - Fraction(q, 2)
                checked += 1
    assert checked > 20
