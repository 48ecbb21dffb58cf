"""Diagrammatic Maslov counts from chord arcs.

Each chord is drawn as a semicircle over its span; its framing pushoff is
the same semicircle shifted right by an infinitesimal amount.  Within one
layer every crossing between an arc and a pushoff counts -1, and the
Maslov component is half the total.  This is computed without reference to
the inversion or pair-classification formulas it is checked against.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import ChordSet, ReebChord
from .errors import InputError, NotAResolution
from .grading import (
    GradingElement,
    HalfInteger,
    HomologyClass,
    chord_pairing,
    homology_class,
)
from .strands import StrandDiagram, smoothings

SAME_LAYER_SIGN = -1


def _inside_after_shift(c: int, lo: int, hi: int) -> bool:
    # c + delta lies strictly inside (lo, hi)
    return lo <= c < hi


def crossing_count(arc: ReebChord, pushoff_of: ReebChord) -> int:
    """Signed crossings of the arc over ``arc`` with the pushoff of ``pushoff_of``.

    Two semicircles on the same side of the axis cross exactly once when one
    endpoint of one lies inside the other's span and the other does not.
    """
    a, b = arc.minus, arc.plus
    inside = [_inside_after_shift(c, a, b) for c in (pushoff_of.minus, pushoff_of.plus)]
    return SAME_LAYER_SIGN if inside[0] != inside[1] else 0


def maslov_component(rho) -> HalfInteger:
    chords = list(rho)
    return HalfInteger(sum(crossing_count(r, s) for r in chords for s in chords))


def spin_c_component(rho, num_points: int) -> HomologyClass:
    return homology_class(list(rho), num_points)


@dataclass(frozen=True)
class ChordArcDiagram:
    """Chord sets stacked in order; layer 0 is applied first."""

    num_points: int
    layers: tuple[ChordSet, ...] = field(default_factory=tuple)

    def __post_init__(self):
        layers = tuple(l if isinstance(l, ChordSet) else ChordSet.of(l) for l in self.layers)
        object.__setattr__(self, "layers", layers)
        for layer in layers:
            for c in layer:
                if c.plus > self.num_points:
                    raise InputError(f"chord {c} beyond {self.num_points} points")

    def to_json(self) -> dict:
        return {"layers": [l.to_json() for l in self.layers]}


def compose_layers(d: ChordArcDiagram) -> GradingElement:
    """Grading of the stacked diagram.

    Same-layer terms come from crossing counts; a chord in an earlier layer
    and one in a later layer contribute the linking pairing of their classes.
    """
    maslov = HalfInteger(0)
    alpha = HomologyClass.zero(d.num_points)
    for i, layer in enumerate(d.layers):
        maslov += maslov_component(layer)
        alpha += spin_c_component(layer, d.num_points)
        for later in d.layers[i + 1 :]:
            for r in layer:
                for s in later:
                    maslov += chord_pairing(r, s)
    return GradingElement(maslov, alpha)


def resolve_crossing_framing(before, after, horizontals=()) -> int:
    """Framing change when ``after`` is obtained by smoothing one crossing.

    ``horizontals`` lists points carrying horizontal strands alongside
    ``before``; a chord crossing a horizontal strand can be smoothed too.
    Smoothings that drop more than one crossing are rejected, as the
    differential discards them.
    """
    before = before if isinstance(before, ChordSet) else ChordSet.of(before)
    after = after if isinstance(after, ChordSet) else ChordSet.of(after)
    horizontals = sorted(set(horizontals))
    ends = before.minus | before.plus
    if ends & set(horizontals):
        raise InputError(f"horizontal strands at chord endpoints: {sorted(ends & set(horizontals))}")
    n = max([c.plus for c in before] + [c.plus for c in after] + horizontals + [1])
    diagram = StrandDiagram(n, tuple(tuple(c) for c in before) + tuple((p, p) for p in horizontals))
    target = tuple(sorted(tuple(c) for c in after))
    for _, smoothed in smoothings(diagram):
        if smoothed.moving != target:
            continue
        if smoothed.inv != diagram.inv - 1:
            raise NotAResolution(
                f"smoothing {before} to {after} drops {diagram.inv - smoothed.inv} crossings"
            )
        return int(maslov_component(after) - maslov_component(before))
    raise NotAResolution(f"{after} is not a one-crossing smoothing of {before}")


@dataclass(frozen=True)
class NormalizationResult:
    segments: tuple[ReebChord, ...]
    a_minus: int
    i_plus: int
    i_minus: int
    a_plus: int = 0
    steps: tuple[str, ...] = ()

    @property
    def m(self) -> int:
        return len(self.segments)

    def predicted_iota(self) -> HalfInteger:
        """-m/2 - A- + I+ - I-."""
        return HalfInteger(-self.m - 2 * self.a_minus + 2 * self.i_plus - 2 * self.i_minus)

    def to_json(self) -> dict:
        return {
            "segments": [list(s) for s in self.segments],
            "A_minus": self.a_minus,
            "I_plus": self.i_plus,
            "I_minus": self.i_minus,
            "A_plus": self.a_plus,
            "m": self.m,
        }


def _reducible(x: ReebChord, y: ReebChord) -> str | None:
    """How the pair (x before y) is rewritten, if at all."""
    if x.plus == y.minus:
        return "A+"
    if y.plus == x.minus:
        return "A-"
    if x.minus < y.minus < x.plus < y.plus:
        return "I+"
    if y.minus < x.minus < y.plus < x.plus:
        return "I-"
    return None


def normalize_segments(segments: Sequence, rng: random.Random | None = None) -> NormalizationResult:
    """Remove abutting and interleaved pairs from a segment sequence.

    Consecutive pairs are handled first, leftmost first: abutting pairs are
    concatenated and interleaved pairs replaced by the nested pair on the
    same endpoints.  When no consecutive pair qualifies, the closest
    qualifying pair ``(i, j)`` is made consecutive by swapping segments
    ``i+1`` and ``j``.  Finally segments are ordered so that no nested pair
    has its inner segment first.

    With ``rng`` the consecutive pair to rewrite is chosen at random among
    the eligible ones instead of leftmost first.
    """
    b = [s if isinstance(s, ReebChord) else ReebChord(*s) for s in segments]
    counts = {"A+": 0, "A-": 0, "I+": 0, "I-": 0}
    steps: list[str] = []

    def apply(i: int, kind: str):
        x, y = b[i], b[i + 1]
        if kind == "A+":
            b[i : i + 2] = [ReebChord(x.minus, y.plus)]
        elif kind == "A-":
            b[i : i + 2] = [ReebChord(y.minus, x.plus)]
        else:
            lo, hi = (x, y) if kind == "I+" else (y, x)
            b[i : i + 2] = [ReebChord(lo.minus, hi.plus), ReebChord(hi.minus, lo.plus)]
        counts[kind] += 1
        steps.append(f"{kind} {x}{y}")

    while True:
        eligible = [(i, k) for i in range(len(b) - 1) if (k := _reducible(b[i], b[i + 1]))]
        if eligible:
            apply(*(rng.choice(eligible) if rng else eligible[0]))
        else:
            best = None
            for gap in range(2, len(b)):
                for i in range(len(b) - gap):
                    if _reducible(b[i], b[i + gap]):
                        best = (i, i + gap)
                        break
                if best:
                    break
            if best is None:
                break
            i, j = best
            steps.append(f"swap {b[i + 1]}{b[j]}")
            b[i + 1], b[j] = b[j], b[i + 1]
            apply(i, _reducible(b[i], b[i + 1]))

    # outer segments before the ones nested inside them
    b.sort(key=lambda c: (c.minus, -c.plus))
    return NormalizationResult(
        tuple(b), counts["A-"], counts["I+"], counts["I-"], counts["A+"], tuple(steps)
    )
