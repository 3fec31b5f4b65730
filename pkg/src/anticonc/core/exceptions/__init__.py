# ruff: noqa
from .simulation_exceptions import (
    AnticoncError,
    InputError,
    UnitarityError,
    ResourceLimitError,
    ConvergenceError,
    RankDeficiencyError,
    ZeroMarginalError,
    InsufficientSamplesError,
)
from .config_exceptions import ConfigError, SchemaMismatchError
