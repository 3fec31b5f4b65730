class AnticoncError(Exception):
    def __init__(self, message: str = "Anticoncentration toolkit error.") -> None:
        self.message = message
        super().__init__(self.message)


class InputError(AnticoncError):
    def __init__(self, message: str = "Invalid input.") -> None:
        super().__init__(message)


class UnitarityError(AnticoncError):
    def __init__(
        self, message: str = "Matrix is not unitary within tolerance.", deviation: float | None = None
    ) -> None:
        self.deviation = deviation
        super().__init__(message)


class ResourceLimitError(AnticoncError):
    def __init__(self, message: str = "Requested size exceeds the dense simulation limit.") -> None:
        super().__init__(message)


class ConvergenceError(AnticoncError):
    def __init__(
        self,
        message: str = "Eigensolver did not converge.",
        sweeps: int | None = None,
        off_diagonal_norm: float | None = None,
    ) -> None:
        self.sweeps = sweeps
        self.off_diagonal_norm = off_diagonal_norm
        if sweeps is not None:
            message = f"{message} (sweeps={sweeps}"
            if off_diagonal_norm is not None:
                message += f", off-diagonal norm={off_diagonal_norm:.3e}"
            message += ")"
        super().__init__(message)


class RankDeficiencyError(AnticoncError):
    def __init__(self, message: str = "Matrix is numerically rank deficient.") -> None:
        super().__init__(message)


class ZeroMarginalError(AnticoncError):
    def __init__(self, message: str = "Zero x_L marginal: the uniform-marginal property is violated.") -> None:
        super().__init__(message)


class InsufficientSamplesError(AnticoncError):
    def __init__(self, message: str = "Not enough samples for this statistic.") -> None:
        super().__init__(message)
