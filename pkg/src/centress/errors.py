"""Exception hierarchy shared by every layer of the toolkit."""


class CentressError(Exception):
    pass


class ConfigurationError(CentressError, ValueError):
    """Mismatched moduli, dimensions, or configurations."""


class DomainError(CentressError, ArithmeticError):
    """Operation undefined for the given input (inverting zero, a non-unit, ...)."""


class ResourceError(CentressError):
    """An enumeration budget or degree cap would be exceeded."""


class ContractError(CentressError, ValueError):
    """Input violates a structural precondition (non-commutative, not an ideal, ...).

    ``witness`` holds whatever concrete data demonstrates the violation.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class AlgebraAxiomError(CentressError, ValueError):
    """A structure-constant table fails associativity or the identity axioms."""

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class SchemaError(CentressError, ValueError):
    """A ring-description file is malformed."""
