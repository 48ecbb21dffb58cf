"""JSON formats for every input and output type.

Serialization is canonical (sorted keys, no whitespace), so that parsing
and re-serializing a canonical document reproduces it byte for byte.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any

from .algebra import ChordSet, MatchedGenerator, ReebChord, generator
from .diagrams import BorderedDiagramData, BorderedDomain, IntersectionPoint, RegionData
from .errors import InputError
from .grading import GradingElement, HalfInteger, HomologyClass
from .pmc import PointedMatchedCircle, new_pmc
from .pontryagin import ChordArcDiagram
from .strands import StrandDiagram


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def read_json(path: str | Path | None) -> Any:
    """Read JSON from a file, or from stdin when path is None or '-'."""
    if path is None or str(path) == "-":
        return loads(sys.stdin.read(), "<stdin>")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, str(path))


def require(obj: Any, key: str, where: str):
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise InputError(f"{where}: missing key '{key}'")
    return obj[key]


def as_int(v: Any, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{where}: expected an integer, got {v!r}")
    return v


def as_int_list(v: Any, where: str) -> list[int]:
    if not isinstance(v, list):
        raise InputError(f"{where}: expected a list of integers, got {v!r}")
    return [as_int(x, f"{where}[{i}]") for i, x in enumerate(v)]


def _pairs(v: Any, where: str) -> list[tuple[int, int]]:
    if not isinstance(v, list):
        raise InputError(f"{where}: expected a list of pairs, got {v!r}")
    out = []
    for i, p in enumerate(v):
        q = as_int_list(p, f"{where}[{i}]")
        if len(q) != 2:
            raise InputError(f"{where}[{i}]: expected a pair, got {p!r}")
        out.append((q[0], q[1]))
    return out


# pointed matched circles

def parse_pmc(obj: Any) -> PointedMatchedCircle:
    points = as_int(require(obj, "points", "pmc"), "pmc.points")
    matching = as_int_list(require(obj, "matching", "pmc"), "pmc.matching")
    return new_pmc(points, matching)


def pmc_to_json(pmc: PointedMatchedCircle) -> dict:
    return pmc.to_json()


# strand diagrams

def parse_strands(obj: Any) -> StrandDiagram:
    ambient = as_int(require(obj, "ambient", "strands"), "ambient")
    return StrandDiagram(ambient, tuple(_pairs(require(obj, "strands", "strands"), "strands")))


def strands_to_json(d: StrandDiagram) -> dict:
    return d.to_json()


# chord sets and generators

def parse_chords(v: Any, where: str = "chords") -> ChordSet:
    return ChordSet(tuple(ReebChord(a, b) for a, b in _pairs(v, where)))


def parse_generator(obj: Any, pmc: PointedMatchedCircle) -> MatchedGenerator:
    s = as_int_list(require(obj, "s", "generator"), "generator.s")
    chords = parse_chords(obj.get("chords", []), "generator.chords")
    return generator(pmc, s, chords)


def generator_to_json(g: MatchedGenerator) -> dict:
    return g.to_json()


# grading elements

def parse_grading(obj: Any) -> GradingElement:
    maslov2 = as_int(require(obj, "maslov2", "grading"), "grading.maslov2")
    alpha = as_int_list(require(obj, "alpha", "grading"), "grading.alpha")
    return GradingElement(HalfInteger(maslov2), HomologyClass(tuple(alpha)))


def grading_to_json(g: GradingElement) -> dict:
    return g.to_json()


# chord arc layers and segment sequences

def parse_layers(obj: Any, num_points: int) -> ChordArcDiagram:
    layers = require(obj, "layers", "layers")
    if not isinstance(layers, list):
        raise InputError("layers: expected a list of chord lists")
    return ChordArcDiagram(num_points, tuple(parse_chords(l, f"layers[{i}]") for i, l in enumerate(layers)))


def layers_to_json(d: ChordArcDiagram) -> dict:
    return d.to_json()


def parse_segments(obj: Any) -> list[ReebChord]:
    return [ReebChord(a, b) for a, b in _pairs(require(obj, "segments", "segments"), "segments")]


def segments_to_json(segs) -> dict:
    return {"segments": [[s.minus, s.plus] for s in segs]}


# Heegaard diagram data and domains

def _parse_region(obj: Any, i: int) -> RegionData:
    where = f"regions[{i}]"
    quadrants: dict[int, tuple[str, ...]] = {}
    counts: dict[int, int] = {}
    raw = obj.get("quadrants", {}) if isinstance(obj, dict) else None
    if not isinstance(raw, dict):
        raise InputError(f"{where}.quadrants: expected an object")
    for key, val in raw.items():
        try:
            pid = int(key)
        except ValueError:
            raise InputError(f"{where}.quadrants: point id {key!r} is not an integer") from None
        if isinstance(val, list):
            if not all(isinstance(q, str) for q in val):
                raise InputError(f"{where}.quadrants[{key}]: expected quadrant names")
            quadrants[pid] = tuple(val)
        else:
            counts[pid] = as_int(val, f"{where}.quadrants[{key}]")
    return RegionData(
        euler_char=as_int(require(obj, "chi", where), f"{where}.chi"),
        convex=as_int(obj.get("convex", 0), f"{where}.convex"),
        concave=as_int(obj.get("concave", 0), f"{where}.concave"),
        quadrants=quadrants,
        bseg=tuple(as_int_list(require(obj, "bseg", where), f"{where}.bseg")),
        counts=counts,
    )


def _region_to_json(r: RegionData) -> dict:
    quads: dict[str, Any] = {str(p): list(q) for p, q in r.quadrants.items()}
    quads.update({str(p): c for p, c in r.counts.items()})
    return {
        "chi": r.euler_char,
        "convex": r.convex,
        "concave": r.concave,
        "quadrants": quads,
        "bseg": list(r.bseg),
    }


def parse_diagram(obj: Any, pmc: PointedMatchedCircle | None = None) -> BorderedDiagramData:
    if isinstance(obj, dict) and "pmc" in obj:
        pmc = parse_pmc(obj["pmc"])
    if pmc is None:
        raise InputError("diagram: no pointed matched circle given")
    points = []
    for i, p in enumerate(require(obj, "points", "diagram")):
        where = f"points[{i}]"
        points.append(
            IntersectionPoint(
                id=as_int(require(p, "id", where), f"{where}.id"),
                alpha=as_int(require(p, "alpha", where), f"{where}.alpha"),
                beta=as_int(require(p, "beta", where), f"{where}.beta"),
                arc=bool(p.get("arc", False)),
            )
        )
    regions = tuple(_parse_region(r, i) for i, r in enumerate(require(obj, "regions", "diagram")))
    return BorderedDiagramData(
        pmc=pmc,
        regions=regions,
        points=tuple(points),
        num_beta=as_int(require(obj, "num_beta", "diagram"), "num_beta"),
        num_alpha_circles=as_int(obj.get("num_alpha_circles", 0), "num_alpha_circles"),
    )


def diagram_to_json(D: BorderedDiagramData) -> dict:
    return {
        "pmc": D.pmc.to_json(),
        "num_beta": D.num_beta,
        "num_alpha_circles": D.num_alpha_circles,
        "points": [{"id": p.id, "alpha": p.alpha, "beta": p.beta, "arc": p.arc} for p in D.points],
        "regions": [_region_to_json(r) for r in D.regions],
    }


def parse_domain(obj: Any) -> BorderedDomain:
    return BorderedDomain(tuple(as_int_list(require(obj, "mult", "domain"), "domain.mult")))


def domain_to_json(B: BorderedDomain) -> dict:
    return {"mult": list(B.mult)}
