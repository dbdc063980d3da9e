"""Exception hierarchy shared by all groupcoh modules."""


class GroupCohError(Exception):
    """Base class for all errors raised by this package."""


# scalars

class NotSquarefree(GroupCohError):
    """Defining polynomial shares a factor with its derivative."""


class NoSignChange(GroupCohError):
    """Interval endpoints do not bracket a root with a sign change."""


class AmbiguousRoot(GroupCohError):
    """Interval contains more than one real root of the defining polynomial."""


class DivisionByZero(GroupCohError, ZeroDivisionError):
    """Division by a scalar whose value is zero."""


class NotInvertible(GroupCohError):
    """Nonzero residue with no inverse (zero divisor of a reducible modulus)."""


class FieldMismatch(GroupCohError):
    """Operands belong to different number fields."""


class UnsupportedOrder(GroupCohError):
    """Requested cosine order is outside the supported table."""


class FieldTooSmall(GroupCohError):
    """Requested constant is not expressible in the given field."""


# words

class UnknownGenerator(GroupCohError):
    """Word references a generator missing from the presentation."""


class MalformedToken(GroupCohError):
    """Unparseable token in a word string."""


# linalg

class ModeMismatch(GroupCohError):
    """Operation requires a different scalar mode."""


class SvdFailure(GroupCohError):
    """Numeric decomposition failed (non-finite entries)."""


class NotSymmetric(GroupCohError):
    """Matrix expected to be symmetric is not."""


# lie

class DegenerateForm(GroupCohError):
    """Bilinear form is singular."""


class NotTraceFree(GroupCohError):
    """Matrix expected to be trace-free is not."""


class NotInvariant(GroupCohError):
    """Conjugation does not preserve the requested subspace."""


# reps

class RelatorViolated(GroupCohError):
    """A relator does not evaluate to the identity under the representation."""

    def __init__(self, relator_index, deviation, message=None):
        self.relator_index = relator_index
        self.deviation = deviation
        super().__init__(
            message
            or f"relator #{relator_index} maps to a non-identity matrix "
            f"(deviation {deviation})"
        )


class NotUnimodular(GroupCohError):
    """2x2 matrix does not have determinant one."""


class NoInvariantForm(GroupCohError):
    """No symmetric bilinear form is preserved by the representation."""


class NonUniqueForm(GroupCohError):
    """Preserved symmetric form is not unique up to scale (reducible action)."""


# cli / engine

class ValidationError(GroupCohError):
    """Job configuration is malformed or inconsistent."""


class InternalCheckError(GroupCohError):
    """A structural self-check failed; indicates a bug, never expected."""
