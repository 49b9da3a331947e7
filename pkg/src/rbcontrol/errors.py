"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid or inconsistent configuration (grids, parameters, file contents)."""


class DomainError(ValueError):
    """A coordinate or argument lies outside the physical domain."""


class DivergenceError(RuntimeError):
    """The solver produced NaN/Inf fields (CFL violation or unstable setup).

    Carries ``step_index``, the index of the internal time step that failed.
    """

    def __init__(self, message, step_index):
        super().__init__(message)
        self.step_index = step_index


class CheckpointFormatError(ValueError):
    """A checkpoint or policy file is malformed or truncated."""
