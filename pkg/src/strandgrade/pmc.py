"""Pointed matched circles.

A pointed matched circle is recorded as the number of marked points 4k and
the handle label of each point, read in order from the basepoint.  Points
are 1-based, handle labels run over 1..2k.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import BadSize, NotTwoToOne, SurgeryDisconnected


def _check_two_to_one(matching: Sequence[int]) -> None:
    counts = Counter(matching)
    bad = sorted(label for label, c in counts.items() if c != 2)
    if bad:
        raise NotTwoToOne(
            f"handle label(s) {bad} do not have exactly two points "
            f"(counts {[counts[b] for b in bad]})"
        )
    labels = set(counts)
    expected = set(range(1, len(matching) // 2 + 1))
    if labels != expected:
        raise NotTwoToOne(f"handle labels must be exactly 1..{len(expected)}, got {sorted(labels)}")


def surgery_circle_count(matching) -> int:
    """Number of circles after 0-surgery on every matched pair.

    Each point ``p`` has an incoming end ``(p, 0)`` (arc arriving from the
    left) and an outgoing end ``(p, 1)``.  Surgery on a pair ``{a, b}``
    glues the incoming end at ``a`` to the outgoing end at ``b`` and vice
    versa; the circles are the orbits of the resulting arc-successor map.
    """
    if isinstance(matching, PointedMatchedCircle):
        matching = matching.matching
    n = len(matching)
    if n == 0:
        return 1
    if n % 2:
        raise BadSize(f"odd number of points: {n}")
    partner = {}
    seen_label: dict[int, int] = {}
    for p, label in enumerate(matching, start=1):
        if label in seen_label:
            q = seen_label.pop(label)
            partner[p], partner[q] = q, p
        else:
            seen_label[label] = p
    if seen_label:
        raise NotTwoToOne(f"unpaired labels {sorted(seen_label)}")

    # Arc j runs from the outgoing end of point j to the incoming end of j+1.
    # After surgery the incoming end at p continues out of partner[p].
    visited = [False] * (n + 1)
    circles = 0
    for start in range(1, n + 1):
        if visited[start]:
            continue
        circles += 1
        arc = start
        while not visited[arc]:
            visited[arc] = True
            arrive = arc % n + 1
            arc = partner[arrive]
    return circles


@dataclass(frozen=True)
class PointedMatchedCircle:
    num_points: int
    matching: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "matching", tuple(int(m) for m in self.matching))
        if self.num_points <= 0 or self.num_points % 4:
            raise BadSize(f"number of points must be a positive multiple of 4, got {self.num_points}")
        if len(self.matching) != self.num_points:
            raise BadSize(f"matching has {len(self.matching)} entries for {self.num_points} points")
        _check_two_to_one(self.matching)
        circles = surgery_circle_count(self.matching)
        if circles != 1:
            raise SurgeryDisconnected(circles)

    @property
    def genus(self) -> int:
        return self.num_points // 4

    @property
    def num_handles(self) -> int:
        return self.num_points // 2

    def handle(self, point: int) -> int:
        return self.matching[point - 1]

    @cached_property
    def _pairs(self) -> dict[int, tuple[int, int]]:
        pairs: dict[int, list[int]] = {}
        for p, label in enumerate(self.matching, start=1):
            pairs.setdefault(label, []).append(p)
        return {label: tuple(ps) for label, ps in pairs.items()}

    def points_of(self, label: int) -> tuple[int, int]:
        """The two points carrying a handle label, in increasing order."""
        return self._pairs[label]

    def partner(self, point: int) -> int:
        a, b = self._pairs[self.handle(point)]
        return b if point == a else a

    def image(self, points) -> frozenset[int]:
        return frozenset(self.matching[p - 1] for p in points)

    def is_injective_on(self, points) -> bool:
        labels = [self.matching[p - 1] for p in points]
        return len(set(labels)) == len(labels)

    def to_json(self) -> dict:
        return {"points": self.num_points, "matching": list(self.matching)}

    def __str__(self):
        return f"PMC({self.num_points}: {list(self.matching)})"


def new_pmc(num_points: int, matching: Sequence[int]) -> PointedMatchedCircle:
    return PointedMatchedCircle(num_points, tuple(matching))


def genus(pmc: PointedMatchedCircle) -> int:
    return pmc.genus


def split_pmc(genus: int) -> PointedMatchedCircle:
    """Connected sum of genus-1 circles: [1,2,1,2, 3,4,3,4, ...]."""
    matching = []
    for i in range(genus):
        a, b = 2 * i + 1, 2 * i + 2
        matching += [a, b, a, b]
    return new_pmc(4 * genus, matching)


def antipodal_pmc(genus: int) -> PointedMatchedCircle:
    """Each point matched with the point 2k positions later."""
    half = 2 * genus
    return new_pmc(4 * genus, list(range(1, half + 1)) * 2)


def all_pmcs(genus: int) -> list[PointedMatchedCircle]:
    """Every valid circle of the given genus, labels in order of first appearance."""
    n = 4 * genus
    found = []

    def extend(prefix: list[int], open_labels: list[int], next_label: int):
        if len(prefix) == n:
            if not open_labels:
                try:
                    found.append(new_pmc(n, prefix))
                except SurgeryDisconnected:
                    pass
            return
        remaining = n - len(prefix)
        if len(open_labels) < remaining:
            extend(prefix + [next_label], open_labels + [next_label], next_label + 1)
        for label in open_labels:
            extend(prefix + [label], [x for x in open_labels if x != label], next_label)

    extend([], [], 1)
    return found
