"""Acceptance gate: one test per criterion, each reporting PASS or FAIL.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
happen; they are also collected into the terminal summary.  The module can
be run directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from itertools import combinations, permutations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE, load  # noqa: E402
from strandgrade.algebra import ChordSet, ReebChord, all_consistent_sets, enumerate_generators  # noqa: E402
from strandgrade.diagrams import BorderedDomain, closed_index, euler_measure, index, point_measure  # noqa: E402
from strandgrade.errors import SurgeryDisconnected  # noqa: E402
from strandgrade.grading import iota_chordset, iota_sequence, pairing_L, homology_class  # noqa: E402
from strandgrade.io import parse_diagram  # noqa: E402
from strandgrade.pmc import all_pmcs, new_pmc, split_pmc  # noqa: E402
from strandgrade.pontryagin import crossing_count, maslov_component  # noqa: E402
from strandgrade.verify import (  # noqa: E402
    check_iota_chordset,
    check_iota_generator,
    check_normalization,
    random_segment_sequence,
    run_verify,
)

GENUS_TWO = all_pmcs(2)
LEIBNIZ_PMCS = [split_pmc(1)] + GENUS_TWO


def record(num: int, name: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[f"{num} ({name})"] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {num} ({name}): {detail}")


def _suite(pmcs, suites):
    cases = failures = 0
    witness = None
    for pmc in pmcs:
        for r in run_verify(pmc, "exhaustive", 0, suites):
            cases += r.cases
            failures += len(r.failures)
            witness = witness or (r.failures[0] if r.failures else None)
    return cases, failures, witness


def test_1_multiplicativity_genus_one():
    start = time.perf_counter()
    cases, failures, witness = _suite([split_pmc(1)], ["multiplicativity"])
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 5
    record(1, "graded multiplicativity", ok, f"{cases} composable pairs, {failures} failures, {elapsed:.2f}s (< 5s)")
    assert ok, witness


def test_2_differential_drop():
    start = time.perf_counter()
    cases, failures, witness = _suite([split_pmc(1)] + GENUS_TWO, ["differential_drop"])
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 60
    record(
        2, "differential drop", ok,
        f"{cases} generators on {1 + len(GENUS_TWO)} circles, {failures} failures, {elapsed:.2f}s (< 60s)",
    )
    assert ok, witness


def test_3_d_squared_and_leibniz():
    start = time.perf_counter()
    dcases, dfail, dwit = _suite([split_pmc(1)] + GENUS_TWO, ["d_squared"])
    lcases, lfail, lwit = _suite(LEIBNIZ_PMCS, ["leibniz"])
    elapsed = time.perf_counter() - start
    ok = dfail == 0 and lfail == 0 and elapsed < 60
    record(
        3, "d^2 = 0 and Leibniz", ok,
        f"d^2 on {dcases} generators, Leibniz on {lcases} pairs over {len(LEIBNIZ_PMCS)} circles, "
        f"{dfail + lfail} failures, {elapsed:.2f}s (< 60s)",
    )
    assert ok, dwit or lwit


def test_4_three_way_iota():
    failures, cases = [], 0
    for n in (4, 8):
        for rho in all_consistent_sets(n):
            cases += 1
            w = check_iota_chordset(rho)
            if w:
                failures.append(w)
    for pmc in [split_pmc(1)] + GENUS_TWO:
        for g in enumerate_generators(pmc):
            cases += 1
            w = check_iota_generator(g)
            if w:
                failures.append(w)
    ok = not failures
    record(4, "three-way iota agreement", ok, f"{cases} chord sets and generators, {len(failures)} failures, exact")
    assert ok, failures[:1]


def test_5_constants():
    R = ReebChord
    checks = {
        "iota{[1,2]} = -1/2": iota_chordset(ChordSet.of([(1, 2)])) == Fraction(-1, 2),
        "iota{[1,3],[2,4]} = -2": iota_chordset(ChordSet.of([(1, 3), (2, 4)])) == -2,
        "iota{[1,2],[2,3]} = -3/2": iota_chordset(ChordSet.of([(1, 2), (2, 3)])) == Fraction(-3, 2),
        "L([1,2],[2,3]) = 1/2": pairing_L(homology_class(R(1, 2), 4), homology_class(R(2, 3), 4)) == Fraction(1, 2),
        "self crossing = -1": all(crossing_count(R(a, b), R(a, b)) == -1 for a, b in combinations(range(1, 9), 2)),
        "crossing iota{[1,2]} = -1/2": maslov_component(ChordSet.of([(1, 2)])) == Fraction(-1, 2),
    }
    bad = [k for k, v in checks.items() if not v]
    ok = not bad
    record(5, "known constants", ok, f"{len(checks) - len(bad)}/{len(checks)} exact" + (f"; wrong: {bad}" if bad else ""))
    assert ok


def test_6_normalization_identity():
    rng = random.Random(20240611)
    cases, failures = 0, []
    for n in (4, 8):
        for _ in range(1000):
            length = rng.randint(1, min(5, n - 1))
            segs = random_segment_sequence(n, length, rng)
            cases += 1
            w = check_normalization(segs)
            if w:
                failures.append(w)
    ok = cases >= 1000 and not failures
    record(6, "normalization identity", ok, f"{cases} seeded sequences (length <= 5), {len(failures)} failures")
    assert ok, failures[:1]


def test_7_index_formulas():
    bigon = parse_diagram(load("bigon.json"))
    square = parse_diagram(load("square.json"))
    half = parse_diagram(load("boundary_bigon.json"))
    strips = parse_diagram(load("strips_genus2.json"))
    one = BorderedDomain((1, 0))
    values = {
        "closed bigon": closed_index(bigon, one, {1, 3}, {2, 3}) == 1,
        "closed square": closed_index(square, one, {2, 4, 5}, {1, 3, 5}) == 1,
        "zero domain": closed_index(bigon, BorderedDomain((0, 0)), {1, 3}, {1, 3}) == 0,
        "boundary bigon, one chord": index(half, one, {1}, {2}, [ChordSet.of([(1, 2)])]) == 1,
    }
    # disjoint singleton sequences over the strip corpus
    reductions = 0
    reduction_ok = True
    for r in range(1, 4):
        for segs in combinations(range(1, 8), r):
            chords, start = [], None
            for i in range(1, 9):
                if i in segs and start is None:
                    start = i
                if i not in segs and start is not None:
                    chords.append((start, i))
                    start = None
            ends = [p for c in chords for p in c]
            if len(set(ends)) != len(ends):
                continue
            B = BorderedDomain(tuple(1 if i + 1 in segs else 0 for i in range(7)))
            x = {2 * a - 1 for a, _ in chords}
            y = {2 * (b - 1) for _, b in chords}
            base = euler_measure(strips, B) + point_measure(strips, B, x) + point_measure(strips, B, y)
            for order in permutations(chords):
                rho = [ChordSet.of([c]) for c in order]
                q = len(rho)
                reductions += 1
                reduction_ok &= index(strips, B, x, y, rho) - q == base - Fraction(q, 2)
                reduction_ok &= iota_sequence(rho) == Fraction(-q, 2)
    values[f"disjoint-chord reduction ({reductions} sequences)"] = reduction_ok
    bad = [k for k, v in values.items() if not v]
    ok = not bad
    record(7, "index formulas", ok, ", ".join(values) + (f"; wrong: {bad}" if bad else "; all exact"))
    assert ok


def test_8_epsilon_and_membership():
    start = time.perf_counter()
    cases, failures, witness = _suite([split_pmc(1)] + GENUS_TWO, ["epsilon_membership"])
    ok = failures == 0
    record(8, "epsilon and refined membership", ok, f"{cases} generators, {failures} failures, {time.perf_counter() - start:.2f}s")
    assert ok, witness


def test_9_pmc_validation():
    accepted = new_pmc(4, [1, 2, 1, 2]).genus == 1
    try:
        new_pmc(4, [1, 1, 2, 2])
        circles = 1
    except SurgeryDisconnected as exc:
        circles = exc.circles
    ok = accepted and circles == 3
    record(9, "PMC validation", ok, f"[1,2,1,2] accepted={accepted}; [1,1,2,2] rejected with {circles} circles")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
