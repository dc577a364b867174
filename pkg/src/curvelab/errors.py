"""Exception hierarchy shared by every curvelab module.

Domain errors (bad geometry, failed numerics) derive from :class:`DomainError`;
input-format problems derive from :class:`UsageError`. The CLI maps the first
family to exit status 1 and the second to exit status 2.
"""


class CurveLabError(Exception):
    """Base class for all curvelab errors."""


class DomainError(CurveLabError):
    pass


class UsageError(CurveLabError):
    pass


# polycalc
class ZeroWDegree(DomainError):
    pass


class NoConvergence(DomainError):
    pass


class BoundaryZero(DomainError):
    pass


class DegreeCap(DomainError):
    pass


# projection
class DegenerateSlice(DomainError):
    pass


class NonSquareFree(DomainError):
    pass


class ProbeTooLarge(DomainError):
    pass


class ProbeFalsePositive(DomainError):
    pass


class NotGood(DomainError):
    pass


# puiseux
class TrivialPolygon(DomainError):
    pass


class OrderTooSmall(DomainError):
    pass


class VerticalComponent(DomainError):
    """The curve contains the line z = const through the center."""


# multifun
class EmptyDomain(DomainError):
    pass


# monodromy
class PathJump(DomainError):
    pass


class OnDiscriminant(DomainError):
    pass


# intersect
class TruncationDominates(DomainError):
    pass


class IdenticallyZero(DomainError):
    pass


# cli
class SchemaError(UsageError):
    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


class DuplicateTerm(UsageError):
    pass
