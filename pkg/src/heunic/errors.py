"""Exception types shared across the library."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation exactly at a pole of a closed form."""


class DivergentSeriesError(ArithmeticError):
    """The convergence condition of an infinite series fails."""


class UnknownRelationError(ValueError):
    """Relation identifier not present in the registry."""
