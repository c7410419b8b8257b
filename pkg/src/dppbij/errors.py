"""Exception taxonomy.

Every domain failure raises a subclass of :class:`DomainError`; the class
name is the stable identifier printed by the CLI, so do not rename them.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Base class for violations of an object's defining conditions."""


class ParseError(Exception):
    """Input could not be read in the declared format (CLI exit code 2)."""


class SizeOutOfRange(DomainError):
    pass


class DimensionTooSmall(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


# descending plane partitions, in the order the conditions are checked
class NonPositivePart(DomainError):
    pass


class RowNotWeaklyDecreasing(DomainError):
    pass


class ColumnNotStrictlyDecreasing(DomainError):
    pass


class Condition3Violated(DomainError):
    pass


class Condition4Violated(DomainError):
    pass


class EmptyRow(DomainError):
    pass


# alternating sign matrices
class NotSquare(DomainError):
    pass


class BadEntryValue(DomainError):
    pass


class RowSumNot1(DomainError):
    pass


class ColSumNot1(DomainError):
    pass


class AlternationViolated(DomainError):
    pass


class NotAPermutationMatrix(DomainError):
    pass


# permutations and inversion words
class NotAPermutation(DomainError):
    pass


class WordOutOfBounds(DomainError):
    pass


# lattice paths
class MalformedFamily(DomainError):
    pass


class DecodedObjectInvalid(DomainError):
    pass


# bijection
class HasSpecialParts(DomainError):
    pass
