"""Property suites run over all (or a seeded sample of) generators of a PMC."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .algebra import (
    ChordSet,
    MatchedGenerator,
    ReebChord,
    all_consistent_sets,
    diff,
    enumerate_generators,
    mul_generator,
)
from .errors import InputError, StrandGradeError
from .grading import (
    compose,
    grade,
    iota_chordset,
    iota_sequence,
    iota_strands,
    lambda_pow,
    refined_membership,
)
from .pmc import PointedMatchedCircle
from .pontryagin import maslov_component, normalize_segments
from .strands import AlgebraElement, StrandDiagram

SUITES = (
    "multiplicativity",
    "differential_drop",
    "d_squared",
    "leibniz",
    "iota_agreement",
    "epsilon_membership",
    "normalization",
)

# random sequences checked by the normalization suite at exhaustive level
NORMALIZATION_CASES = 2000
MAX_SEQUENCE_LENGTH = 5


@dataclass
class VerificationReport:
    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = True) -> dict:
        out = {"suite": self.suite, "cases": self.cases, "failures": self.failures}
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


@dataclass(frozen=True)
class Level:
    """Exhaustive, or a sample of at most ``size`` cases per suite."""

    size: int | None = None

    @classmethod
    def parse(cls, text: str) -> Level:
        if text == "exhaustive":
            return cls(None)
        if text.startswith("sample:"):
            try:
                n = int(text.split(":", 1)[1])
            except ValueError:
                n = -1
            if n > 0:
                return cls(n)
        raise InputError(f"bad level {text!r}; use 'exhaustive' or 'sample:<N>'")

    @property
    def exhaustive(self) -> bool:
        return self.size is None

    def __str__(self):
        return "exhaustive" if self.size is None else f"sample:{self.size}"


def _pick(items: list, level: Level, rng: random.Random) -> list:
    if level.exhaustive or len(items) <= level.size:
        return items
    return rng.sample(items, level.size)


def _pairs(gens: list[MatchedGenerator], level: Level, rng: random.Random):
    """Composable pairs: all of them, or a uniform sample drawn without listing them."""
    by_s: dict[frozenset, list[MatchedGenerator]] = {}
    for g in gens:
        by_s.setdefault(g.s, []).append(g)
    if level.exhaustive:
        for g1 in gens:
            for g2 in by_s.get(g1.target, ()):
                yield g1, g2
        return
    weights = [len(by_s.get(g.target, ())) for g in gens]
    total = sum(weights)
    if total <= level.size:
        yield from _pairs(gens, Level(None), rng)
        return
    # weighting g1 by its number of partners makes each pair equally likely
    firsts = rng.choices(gens, weights=weights, k=level.size)
    for g1 in firsts:
        yield g1, rng.choice(by_s[g1.target])


def _wit(g: MatchedGenerator) -> dict:
    return g.to_json()


def _run(name: str, cases: Iterable, check: Callable) -> VerificationReport:
    report = VerificationReport(name)
    start = time.perf_counter()
    for case in cases:
        report.cases += 1
        try:
            witness = check(case)
        except StrandGradeError as exc:
            witness = {"error": f"{type(exc).__name__}: {exc}"}
            if isinstance(case, tuple):
                witness["case"] = [_wit(c) if isinstance(c, MatchedGenerator) else c for c in case]
            elif isinstance(case, MatchedGenerator):
                witness["case"] = _wit(case)
        if witness:
            report.failures.append(witness)
    report.wall_time = time.perf_counter() - start
    return report


# Generators recur across many pairs; a bounded cache keeps their gradings
# and differentials from being recomputed.
_grade = lru_cache(maxsize=1 << 16)(grade)


@lru_cache(maxsize=1 << 16)
def _d(elem: AlgebraElement) -> AlgebraElement:
    return elem.differential()


# individual checks: return None on success, a JSON witness on failure

def check_multiplicativity(pair) -> dict | None:
    g1, g2 = pair
    prod = mul_generator(g1, g2)
    if prod is None:
        return None
    want = compose(_grade(g1), _grade(g2))
    got = _grade(prod)
    if got != want:
        return {"left": _wit(g1), "right": _wit(g2), "expected": want.to_json(), "got": got.to_json()}
    return None


def check_differential_drop(g: MatchedGenerator) -> dict | None:
    want = lambda_pow(-1, grade(g))
    for term in diff(g).sorted_terms():
        got = grade(term)
        if got != want:
            return {"generator": _wit(g), "term": term.to_json(), "expected": want.to_json(), "got": got.to_json()}
    return None


def check_d_squared(g: MatchedGenerator) -> dict | None:
    dd = diff(g).differential()
    if dd:
        return {"generator": _wit(g), "d2": dd.to_json()}
    return None


def check_leibniz(pair) -> dict | None:
    g1, g2 = pair
    a, b = g1.expansion, g2.expansion
    lhs = (a * b).differential()
    rhs = _d(a) * b + a * _d(b)
    if lhs != rhs:
        return {"left": _wit(g1), "right": _wit(g2), "lhs": lhs.to_json(), "rhs": rhs.to_json()}
    return None


def check_iota_chordset(rho) -> dict | None:
    n = max([c.plus for c in rho] + [1])
    formula = iota_chordset(rho)
    strands = iota_strands(StrandDiagram(n, tuple(tuple(c) for c in rho)))
    crossings = maslov_component(rho)
    if not formula == strands == crossings:
        return {
            "chords": rho.to_json(),
            "formula2": formula.twice,
            "strands2": strands.twice,
            "crossings2": crossings.twice,
        }
    return None


def check_iota_generator(g: MatchedGenerator) -> dict | None:
    want = iota_chordset(g.chords)
    for term in g.expansion.sorted_terms():
        got = iota_strands(term)
        if got != want:
            return {"generator": _wit(g), "term": term.to_json(), "formula2": want.twice, "strands2": got.twice}
    return None


def check_epsilon_membership(g: MatchedGenerator) -> dict | None:
    gr = grade(g)  # the constructor enforces the epsilon constraint
    m = refined_membership(gr, g.pmc)
    if m is None or not m.admits(g.s, g.target):
        return {
            "generator": _wit(g),
            "grading": gr.to_json(),
            "membership": None if m is None else m.to_json(),
            "t": sorted(g.target),
        }
    return None


def check_normalization(segments) -> dict | None:
    want = iota_sequence([[s] for s in segments])
    res = normalize_segments(segments)
    got = res.predicted_iota()
    if got != want:
        return {
            "segments": [list(s) for s in segments],
            "iota2": want.twice,
            "predicted2": got.twice,
            "normal_form": res.to_json(),
        }
    return None


def random_segment_sequence(num_points: int, length: int, rng: random.Random) -> list[ReebChord]:
    """A random sequence of chords with distinct starts and distinct ends."""
    while True:
        segs = []
        for _ in range(length):
            a = rng.randint(1, num_points - 1)
            b = rng.randint(a + 1, num_points)
            segs.append(ReebChord(a, b))
        if len({s.minus for s in segs}) == length and len({s.plus for s in segs}) == length:
            return segs


def random_chord_set(num_points: int, rng: random.Random) -> ChordSet:
    """A random consistent chord set (no matching constraint)."""
    while True:
        size = rng.randint(0, num_points // 2)
        starts = rng.sample(range(1, num_points), size)
        ends = []
        for a in sorted(starts, reverse=True):
            free = [b for b in range(a + 1, num_points + 1) if b not in ends]
            if not free:
                break
            ends.append(rng.choice(free))
        else:
            return ChordSet(tuple(zip(sorted(starts, reverse=True), ends)))


def segment_sequences(num_points: int, count: int, seed: int) -> Iterator[list[ReebChord]]:
    rng = random.Random(seed)
    cap = min(MAX_SEQUENCE_LENGTH, num_points - 1)
    for _ in range(count):
        yield random_segment_sequence(num_points, rng.randint(1, cap), rng)


def run_verify(
    pmc: PointedMatchedCircle,
    level: Level | str = "exhaustive",
    seed: int = 0,
    suites: Iterable[str] = SUITES,
) -> list[VerificationReport]:
    """Run the requested suites; one report per suite, in a fixed order."""
    if isinstance(level, str):
        level = Level.parse(level)
    wanted = list(suites)
    unknown = [s for s in wanted if s not in SUITES]
    if unknown:
        raise InputError(f"unknown suites {unknown}")
    gens = enumerate_generators(pmc)
    reports = []
    for name in SUITES:
        if name not in wanted:
            continue
        # each suite gets its own stream so that results do not depend on
        # which other suites were selected
        rng = random.Random(f"{seed}:{name}")
        if name == "multiplicativity":
            r = _run(name, _pairs(gens, level, rng), check_multiplicativity)
        elif name == "differential_drop":
            r = _run(name, _pick(gens, level, rng), check_differential_drop)
        elif name == "d_squared":
            r = _run(name, _pick(gens, level, rng), check_d_squared)
        elif name == "leibniz":
            r = _run(name, _pairs(gens, level, rng), check_leibniz)
        elif name == "iota_agreement":
            if level.exhaustive:
                sets = all_consistent_sets(pmc.num_points)
            else:
                sets = [random_chord_set(pmc.num_points, rng) for _ in range(level.size)]
            r = _run(name, sets, check_iota_chordset)
            r2 = _run(name, _pick(gens, level, rng), check_iota_generator)
            r.cases += r2.cases
            r.failures += r2.failures
            r.wall_time += r2.wall_time
        elif name == "epsilon_membership":
            r = _run(name, _pick(gens, level, rng), check_epsilon_membership)
        else:
            count = NORMALIZATION_CASES if level.exhaustive else level.size
            r = _run(name, segment_sequences(pmc.num_points, count, rng.getrandbits(64)), check_normalization)
        reports.append(r)
    return reports
