from .simulation_exceptions import AnticoncError


class ConfigError(AnticoncError):
    def __init__(self, message: str = "Invalid experiment configuration.") -> None:
        super().__init__(message)


class SchemaMismatchError(AnticoncError):
    def __init__(self, message: str = "Input file does not match the expected schema.") -> None:
        super().__init__(message)
