import os
from enum import Enum

from pydantic import AliasChoices, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

current_file_dir = os.path.dirname(os.path.realpath(__file__))
env_path = os.path.join(current_file_dir, "..", "..", "..", ".env")


class _EnvSettings(BaseSettings):
    model_config = SettingsConfigDict(env_file=env_path, env_file_encoding="utf-8", extra="ignore")


class AppSettings(_EnvSettings):
    APP_NAME: str = "anticonc"
    APP_DESCRIPTION: str | None = "Anticoncentration of random quantum circuits, verified at desk scale"
    APP_VERSION: str = "0.1.0"


class SimulationSettings(_EnvSettings):
    MAX_QUBITS: int = Field(default=24, ge=1, le=30)
    UNITARITY_TOLERANCE: float = 1e-10
    NORM_TOLERANCE: float = 1e-10
    VALIDATE_GATES: bool = True


class LinalgBackend(str, Enum):
    NATIVE = "native"
    LAPACK = "lapack"


class LinalgSettings(_EnvSettings):
    LINALG_BACKEND: LinalgBackend = LinalgBackend.NATIVE
    JACOBI_TOLERANCE: float = 1e-12
    JACOBI_MAX_SWEEPS: int = 60


class EnsembleSettings(_EnvSettings):
    # c in ceil(c * n * ln(1/eps)); 7.0 reaches depth 16n at eps = 0.1
    DESIGN_DEPTH_CONSTANT: float = Field(default=7.0, gt=0)
    DEFAULT_EPSILON: float = Field(default=0.1, gt=0, lt=1)


class ColoringParity(str, Enum):
    DEFAULT = "default"
    FLIPPED = "flipped"


class ReadoutMode(str, Enum):
    EFFECTIVE = "effective"
    LITERAL = "literal"


class QuenchSettings(_EnvSettings):
    MAX_EXACT_M: int = Field(default=3, ge=1)
    COLUMN_BASE: int = Field(default=1, ge=0, le=1)
    COLORING_PARITY: ColoringParity = ColoringParity.DEFAULT
    READOUT: ReadoutMode = ReadoutMode.EFFECTIVE


class StatisticsSettings(_EnvSettings):
    SIGNIFICANCE: float = 0.01
    KS_CRITICAL_VALUE: float = 1.628
    KS_TIE_TOLERANCE: float = Field(default=1e-9, gt=0)
    SE_SLACK: float = 3.0
    DESIGN_TOLERANCE: float = 0.1
    WILSON_CONFIDENCE: float = 0.99


class WorkerSettings(_EnvSettings):
    THREADS: int = Field(default=1, ge=1, validation_alias=AliasChoices("THREADS", "ANTICONC_THREADS"))
    CHUNK_SIZE: int = Field(default=250, ge=1)


class LoggingSettings(_EnvSettings):
    LOG_LEVEL: str = Field(default="INFO", pattern=r"^(DEBUG|INFO|WARNING|ERROR)$")
    LOG_DIR: str | None = None
    LOG_FILE_MAX_BYTES: int = Field(default=10485760, ge=1024)
    LOG_FILE_BACKUPS: int = Field(default=5, ge=0)


class OutputSettings(_EnvSettings):
    OUTPUT_DIR: str = "anticonc-out"
    CSV_FLOAT_DIGITS: int = 17


class Settings(
    AppSettings,
    SimulationSettings,
    LinalgSettings,
    EnsembleSettings,
    QuenchSettings,
    StatisticsSettings,
    WorkerSettings,
    LoggingSettings,
    OutputSettings,
):
    pass


settings = Settings()
