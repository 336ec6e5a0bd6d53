"""Exception types shared across the package."""


class TrigaugeError(Exception):
    """Base class for all trigauge errors."""


class EdgeListParseError(TrigaugeError):
    """A line of an edge-list file could not be parsed."""

    def __init__(self, line_number: int, line: str, reason: str = "expected exactly two tokens"):
        self.line_number = line_number
        self.line = line
        super().__init__(f"line {line_number}: {reason}: {line!r}")


class UndefinedStatisticError(TrigaugeError):
    """A statistic is requested on input for which it is undefined (e.g. empty graph)."""


class UndefinedCoefficientError(TrigaugeError):
    """A clustering coefficient is undefined (no wedges / degenerate moments)."""


class CapacityError(TrigaugeError):
    """The graph exceeds the configured dense-solver node cap."""


class ConvergenceError(TrigaugeError):
    """Iterative eigenvalue estimation did not converge.

    Carries the last iterate so callers can decide whether it is usable.
    """

    def __init__(self, message: str, last_estimate: float, iterations: int):
        self.last_estimate = last_estimate
        self.iterations = iterations
        super().__init__(f"{message} (last estimate {last_estimate!r} after {iterations} iterations)")


class GenerationError(TrigaugeError):
    """Random-graph generation failed; diagnostics describe where and why."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        self.diagnostics = dict(diagnostics or {})
        if self.diagnostics:
            detail = ", ".join(f"{k}={v}" for k, v in sorted(self.diagnostics.items()))
            message = f"{message} [{detail}]"
        super().__init__(message)
