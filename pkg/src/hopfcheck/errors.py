"""Exception taxonomy shared by all modules.

Every failure mode that a caller can reasonably branch on gets its own
class; anything else surfaces as a plain ValueError.
"""


class HopfError(ValueError):
    """Base class for all structured errors raised by this package."""


class DimMismatch(HopfError):
    """Operands have incompatible dimensions or basis sizes."""


class SingularMatrix(HopfError):
    """Exact inverse requested for a matrix with no inverse."""


class NotPrimitiveRoot(HopfError):
    """Scalar is not a primitive root of unity of the required order."""


class InvalidCayleyTable(HopfError):
    """Multiplication table is not a group (associativity, identity or inverses fail)."""


class NoIntegral(HopfError):
    """Invariance system has only the zero solution."""


class NonUniqueIntegral(HopfError):
    """Invariance system has a solution space of dimension above one."""


class RightInvarianceFailed(HopfError):
    """Candidate right-invariant functional fails its defining identity."""


class InconsistentSystem(HopfError):
    """Row-by-row extraction of an element gave contradictory rows."""


class NotGroupLike(HopfError):
    """Element fails the comultiplication or counit condition for group-likes."""


class NotFaithful(HopfError):
    """Bilinear form of the functional is degenerate, no modular automorphism."""


class NotAutomorphism(HopfError):
    """Candidate map is not a unital algebra automorphism."""


class NotProportional(HopfError):
    """Two functionals expected to be proportional are not."""


class ExactificationFailed(HopfError):
    """Float candidate could not be rounded to an exact cyclotomic vector."""


class DualVerificationFailed(HopfError):
    """Constructed dual fails one of the axiom verifiers."""


class NotBijective(HopfError):
    """Linear map expected to be a bijection is singular."""


class InconsistentWithDirectComputation(HopfError):
    """Two independent computation routes for the same object disagree."""


class NoStarStructure(HopfError):
    """Operation requires a star structure and the algebra carries none."""


class NotPositive(HopfError):
    """Functional fails positivity."""


class NumericalFailure(HopfError):
    """Float-backed routine left its validity envelope (conditioning, residuals)."""


class FormatError(HopfError):
    """Input document violates the file format or scalar grammar."""
