"""Strand algebra of a pointed matched circle and its grading groupoid."""

from __future__ import annotations

from .algebra import (
    ChordSet,
    MatchedGenerator,
    ReebChord,
    diff,
    enumerate_generators,
    generator,
    mul,
    mul_generator,
)
from .errors import InputError, PropertyViolation, StrandGradeError
from .grading import (
    GradingElement,
    HalfInteger,
    HomologyClass,
    compose,
    epsilon,
    grade,
    inverse,
    iota_chordset,
    iota_sequence,
    lambda_pow,
    pairing_L,
    refined_membership,
)
from .pmc import PointedMatchedCircle, antipodal_pmc, new_pmc, split_pmc, surgery_circle_count
from .strands import AlgebraElement, StrandDiagram, differential, multiply

__all__ = [
    "AlgebraElement",
    "ChordSet",
    "GradingElement",
    "HalfInteger",
    "HomologyClass",
    "InputError",
    "MatchedGenerator",
    "PointedMatchedCircle",
    "PropertyViolation",
    "ReebChord",
    "StrandDiagram",
    "StrandGradeError",
    "antipodal_pmc",
    "compose",
    "diff",
    "differential",
    "enumerate_generators",
    "epsilon",
    "generator",
    "grade",
    "inverse",
    "iota_chordset",
    "iota_sequence",
    "lambda_pow",
    "mul",
    "mul_generator",
    "multiply",
    "new_pmc",
    "pairing_L",
    "refined_membership",
    "split_pmc",
    "surgery_circle_count",
]
