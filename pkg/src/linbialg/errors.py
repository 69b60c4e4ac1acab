"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`BialgebraError`
so the CLI can map it to exit code 1 in one place.  Division by a zero scalar
or a zero polynomial uses the builtin :class:`ZeroDivisionError`.
"""


class BialgebraError(Exception):
    """Base class for domain errors."""


class ShapeMismatch(BialgebraError, ValueError):
    pass


class ScalarKindMismatch(BialgebraError, TypeError):
    pass


class NotSquare(BialgebraError, ValueError):
    pass


class NotAUnit(BialgebraError, ArithmeticError):
    pass


class GradedIndeterminateUnsupported(BialgebraError, ValueError):
    pass


class NotBidiagonalizable(BialgebraError):
    """``eigenvalue`` is None when the characteristic polynomial does not split."""

    def __init__(self, component, eigenvalue, geometric, algebraic):
        self.component = component
        self.eigenvalue = eigenvalue
        self.geometric = geometric
        self.algebraic = algebraic
        if eigenvalue is None:
            msg = (f"component {component} has only {geometric} independent "
                   f"eigenvectors in the base field for size {algebraic}")
        else:
            msg = (f"component {component} is defective at eigenvalue {eigenvalue}: "
                   f"eigenspace dimension {geometric} < multiplicity {algebraic}")
        super().__init__(msg)


class CharPolyDoesNotSplit(BialgebraError):
    def __init__(self, component, factor):
        self.component = component
        self.factor = factor
        super().__init__(
            f"characteristic polynomial of component {component} has the factor "
            f"{factor} with no roots in the base field"
        )


class UnknownFamily(BialgebraError, ValueError):
    pass


class LinearlyDependentInput(BialgebraError):
    def __init__(self, index, component):
        self.index = index
        self.component = component
        super().__init__(f"input {index} is dependent on its predecessors in component {component}")


class ZeroNormEncountered(BialgebraError):
    pass


class BasisNotBiorthogonal(BialgebraError):
    pass


class UnsupportedComponentFamily(BialgebraError):
    pass


class RankDeficientParity(BialgebraError):
    pass


class GeneratorDoesNotDivide(BialgebraError):
    pass


class EnumerationTooLarge(BialgebraError):
    pass


class DecoderExhausted(BialgebraError):
    pass


class InvariantViolation(BialgebraError):
    pass


class SingularSystem(BialgebraError):
    def __init__(self, rank, size):
        self.rank = rank
        self.size = size
        super().__init__(f"I - C is singular (rank {rank} of {size})")


class BothSplitsSingular(BialgebraError):
    pass


class ParseError(BialgebraError, ValueError):
    """Malformed input document or literal.  Not a domain error: CLI exit code 2."""
