"""
Exception hierarchy for blpinn

Every failure a caller may want to handle separately has its own class so the
CLI can map it to a distinct exit code.
"""
from typing import Optional


class BLPinnError(Exception):
    """Base class for all blpinn errors"""


class ConfigError(BLPinnError):
    """Invalid or unreadable experiment configuration"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DataConditionViolation(BLPinnError, ValueError):
    """Problem data violates a precondition (e.g. the Burgers radicand)"""


class DegenerateCorrector(BLPinnError, ValueError):
    """Boundary layer amplitude vanishes, so the corrector cannot be normalized"""


class NonFiniteLoss(BLPinnError, ArithmeticError):
    """Training loss became NaN or infinite"""

    def __init__(self, iteration: int, value: float):
        self.iteration = iteration
        self.value = value
        super().__init__(
            f"Loss became non-finite ({value}) at iteration {iteration}; "
            f"retry with a smaller learning rate"
        )

    def __reduce__(self):
        return type(self), (self.iteration, self.value)


class NewtonDivergence(BLPinnError, ArithmeticError):
    """Damped Newton iteration could not reduce the discrete residual"""

    def __init__(self, iteration: int, residual_norm: float):
        self.iteration = iteration
        self.residual_norm = residual_norm
        super().__init__(
            f"Newton iteration stalled at step {iteration} "
            f"with residual max-norm {residual_norm:.3e}"
        )

    def __reduce__(self):
        return type(self), (self.iteration, self.residual_norm)


class MeshTooCoarse(BLPinnError, ValueError):
    """Requested reference mesh is below the supported minimum"""


class ZeroTruthNorm(BLPinnError, ZeroDivisionError):
    """Relative error requested against a (numerically) zero reference"""
