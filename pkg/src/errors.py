"""
Exception hierarchy for the simulator.

Every error derives from ValueError so that the command layer can keep
translating business-logic failures the same way it always has
(see src/utils/command_decorators.py).
"""


class SimulationError(ValueError):
    """Base class for all simulator errors."""


class ConfigValidationError(SimulationError):
    """A physical parameter, config file entry or sweep definition is invalid."""

    def __init__(self, field: str, message: str) -> None:
        self.field = field
        super().__init__(f"{field}: {message}")


class SingularSystem(SimulationError):
    """The zeroth-order system does not determine the steady state uniquely."""


class NonConvergence(SimulationError):
    """Time evolution has not settled by the end of the integration interval."""


class ResonantSingularity(SimulationError):
    """The analysis frequency sits on a dressed-state pole of the coherence system."""

    def __init__(self, omega: float, condition: float) -> None:
        self.omega = omega
        self.condition = condition
        super().__init__(
            f"(M1 + ω) is ill-conditioned at ω = {omega:.6g} Γ (condition {condition:.3e})"
        )


class QuadratureNotConverged(SimulationError):
    """Gauss-Legendre refinement did not stabilise the Langevin diffusion scalars."""


class NonPositive(SimulationError):
    """A quantity that must be strictly positive (e.g. before taking dB) is not."""


class NoMinimum(SimulationError):
    """No entangled point (inseparability below 1) exists in the search bracket."""

    def __init__(self, message: str, best_delta: float, best_value: float) -> None:
        self.best_delta = best_delta
        self.best_value = best_value
        super().__init__(message)


class UndefinedSpectrum(SimulationError):
    """Correlation spectra are undefined because the total output gain vanishes."""
