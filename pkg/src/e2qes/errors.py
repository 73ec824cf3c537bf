"""Exception types; the CLI maps each to an exit code."""


class E2QESError(Exception):
    exit_code = 3


class ConfigError(E2QESError, ValueError):
    exit_code = 2


class NumericalFailure(E2QESError, ArithmeticError):
    exit_code = 3


class PoleError(E2QESError, ZeroDivisionError):
    """A canonical-form multiplier alpha_k vanished."""

    exit_code = 3

    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"alpha_{index} = 0 (E = zeta^2 + 4*{index}^2)")


class MeasureRefusal(E2QESError):
    """Measure requested too close to an exceptional point."""

    exit_code = 4

    def __init__(self, pair, distance: float):
        self.pair = pair
        self.distance = distance
        super().__init__(
            f"roots {pair[0]!r} and {pair[1]!r} nearly coincide (distance {distance:.3e})")


class CapExceeded(E2QESError):
    exit_code = 2
