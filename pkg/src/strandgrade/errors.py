"""Exception hierarchy.

Everything raised on bad input derives from :class:`InputError` so the CLI
can map it to exit code 1.  :class:`PropertyViolation` marks a failed
algebraic identity, which should never happen on valid input.
"""

from __future__ import annotations


class StrandGradeError(Exception):
    pass


class InputError(StrandGradeError, ValueError):
    pass


class PropertyViolation(StrandGradeError):
    pass


# pointed matched circles
class BadSize(InputError):
    pass


class NotTwoToOne(InputError):
    pass


class SurgeryDisconnected(InputError):
    def __init__(self, circles: int):
        super().__init__(f"0-surgery yields {circles} circles, expected 1")
        self.circles = circles


# strands / algebra
class AmbientMismatch(InputError):
    pass


class InconsistentChords(InputError):
    pass


class InconsistentResult(InconsistentChords):
    pass


class JoinRuleViolation(PropertyViolation):
    pass


# grading
class ZeroGenerator(InputError):
    pass


class EpsilonViolation(InputError):
    pass


# diagrams
class BoundaryMismatch(InputError):
    pass


class BoundaryNonzero(InputError):
    pass


class NonIntegralIndex(InputError):
    pass


# pontryagin
class NotAResolution(InputError):
    pass
