"""Exception types."""


class DimensionMismatch(ValueError):
    pass


class PolynomialSyntaxError(ValueError):
    """Bad polynomial text; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.message = message
        self.pos = pos


class UnknownVariable(PolynomialSyntaxError):
    pass


class InvalidProblem(ValueError):
    """Base class for interpolation problems the pipeline refuses."""


class DuplicatePoints(InvalidProblem):
    def __init__(self, point):
        super().__init__(f"duplicate interpolation point ({', '.join(str(c) for c in point)})")
        self.point = point


class DInvarianceViolation(InvalidProblem):
    def __init__(self, generator_index: int, variable: int, message: str | None = None):
        super().__init__(message or (
            f"derivative of generator {generator_index} with respect to variable "
            f"{variable} leaves the span"))
        self.generator_index = generator_index
        self.variable = variable


class LinearDependence(InvalidProblem):
    """Raised when elimination hits a zero polynomial at (1-based) step ``k``."""

    def __init__(self, k: int):
        super().__init__(f"linearly dependent conditions: polynomial {k} reduced to zero")
        self.k = k


class MalformedConditions(InvalidProblem):
    def __init__(self, monomial):
        super().__init__(f"least monomials do not form a lower set (at {monomial})")
        self.monomial = monomial
