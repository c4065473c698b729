"""Exception hierarchy shared across the package."""


class OrthoError(Exception):
    """Base class for all errors raised by this package."""


# -- space construction ------------------------------------------------------

class DuplicateLabel(OrthoError):
    pass


class SelfLoop(OrthoError):
    pass


class UnknownLabel(OrthoError):
    pass


class BadParameter(OrthoError):
    pass


# -- subsets, cliques, lattices ----------------------------------------------

class NotOrthogonalSet(OrthoError):
    pass


class NotOrthoclosed(OrthoError):
    pass


class EmptySubset(OrthoError):
    pass


class SizeLimit(OrthoError):
    pass


class NotSubalgebra(OrthoError):
    pass


class InternalInconsistency(OrthoError):
    """A machine-checked implication between predicates failed."""


# -- maps between spaces -----------------------------------------------------

class SourceNotNormal(OrthoError):
    pass


class TargetNotNormal(OrthoError):
    pass


class NotHomomorphism(OrthoError):
    pass


class Mismatch(OrthoError):
    pass


# -- scalars and places ------------------------------------------------------

class DivisionByZero(OrthoError, ZeroDivisionError):
    pass


class Unordered(OrthoError):
    pass


class NotInValuationRing(OrthoError):
    pass


class AllZero(OrthoError):
    pass


class StarIncompatiblePlace(OrthoError):
    pass


# -- Hermitian spaces --------------------------------------------------------

class DimensionMismatch(OrthoError):
    pass


class EqualPoints(OrthoError):
    pass


class NotInModuleFV(OrthoError):
    pass


class DegenerateDirection(OrthoError):
    pass


class IsotropicVector(OrthoError):
    pass


class UnsupportedField(OrthoError):
    pass


# -- measures ----------------------------------------------------------------

class NotDacey(OrthoError):
    pass


# -- toolkit -----------------------------------------------------------------

class ParseError(OrthoError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class NotFoundWithinBound(OrthoError):
    pass
