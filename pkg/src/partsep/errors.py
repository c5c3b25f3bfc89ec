"""Exception hierarchy shared by all partsep modules."""


class PartsepError(Exception):
    """Base class for every error raised by partsep."""


class NegativePart(PartsepError, ValueError):
    pass


class NegativeEntry(PartsepError, ValueError):
    """Componentwise difference would produce a negative entry."""


class ForeignResidue(PartsepError, ValueError):
    """A part lies in neither the r nor the 0 residue class."""


class NotInClass(PartsepError, ValueError):
    """Input partition is outside the source class of a map."""


class InternalConsistencyError(PartsepError, AssertionError):
    """A structural guarantee of the bijection was violated."""


class NonUnitConstantTerm(PartsepError, ZeroDivisionError):
    pass


class DivergentProduct(PartsepError, ValueError):
    pass


class IntegerOverflow(PartsepError, OverflowError):
    """A coefficient left the configured exact range."""
