"""
Experiment configuration

Config files are YAML documents with `problem:`, `train:` and `logging:`
blocks plus a few top-level keys. Syntax errors carry their line number.
"""
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from ..exceptions import ConfigError
from ..problems import ProblemKind, ProblemSpec, create_forcing
from ..reference import DEFAULT_MESH
from ..training import TrainConfig


SEED_OFFSET_ENV = "BLPINN_SEED_OFFSET"
DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class LoggingConfig(BaseModel):
    """Root logger settings"""
    level: str = "INFO"
    format: str = DEFAULT_LOG_FORMAT
    file: Optional[str] = None

    class Config:
        extra = "forbid"

    @field_validator("level")
    @classmethod
    def check_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown logging level {value!r}")
        return level


class ProblemConfig(BaseModel):
    """Problem selection: kind, ε and forcing selector"""
    kind: ProblemKind
    eps: float = Field(default=1.0, gt=0)
    forcing: str = "const:1"

    class Config:
        extra = "forbid"

    def to_spec(self, enriched: bool = True, eps: Optional[float] = None) -> ProblemSpec:
        """
        Build the ProblemSpec; enrichment is ignored for the regular kinds

        Raises:
            ValueError: Invalid forcing selector or kind/eps combination
            DataConditionViolation: Burgers forcing fails the radicand scan
        """
        return ProblemSpec(
            kind=self.kind,
            eps=self.eps if eps is None else eps,
            forcing=create_forcing(self.forcing),
            enriched=None if self.kind.is_regular else enriched,
        )


class ExperimentConfig(BaseModel):
    """
    One experiment: a problem, training settings and output location
    """
    problem: ProblemConfig
    train: TrainConfig = Field(default_factory=TrainConfig)
    enrichment: bool = True
    output_dir: str = "results"
    n_seeds: int = Field(default=3, ge=1)
    eps_list: List[float] = Field(default_factory=list)
    reference_mesh: int = Field(default=DEFAULT_MESH, ge=64)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    class Config:
        extra = "forbid"

    @field_validator("eps_list")
    @classmethod
    def check_eps_list(cls, value: List[float]) -> List[float]:
        if any(not eps > 0 for eps in value):
            raise ValueError("every eps in eps_list must be positive")
        return value

    def spec(self, eps: Optional[float] = None) -> ProblemSpec:
        return self.problem.to_spec(self.enrichment, eps)

    def seeds(self) -> List[int]:
        """Seeds of the best-of-n runs, shifted by the environment offset"""
        offset = seed_offset()
        return [self.train.seed + k + offset for k in range(self.n_seeds)]


def seed_offset() -> int:
    """Integer value of BLPINN_SEED_OFFSET, zero when unset"""
    raw = os.environ.get(SEED_OFFSET_ENV, "").strip()
    if not raw:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{SEED_OFFSET_ENV} must be an integer, got {raw!r}")


def _format_validation_error(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"])
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


def parse_config(text: str) -> ExperimentConfig:
    """
    Parse YAML text into an ExperimentConfig

    Raises:
        ConfigError: On YAML syntax errors (with line) or invalid values
    """
    try:
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as e:
        line = e.problem_mark.line + 1 if e.problem_mark is not None else None
        raise ConfigError(e.problem or str(e), line=line) from e
    except yaml.YAMLError as e:
        raise ConfigError(str(e)) from e

    if not isinstance(data, dict):
        raise ConfigError("config must be a mapping of keys to values")
    try:
        return ExperimentConfig(**data)
    except ValidationError as e:
        raise ConfigError(_format_validation_error(e)) from e


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    """Read and parse a config file"""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    return parse_config(text)


def setup_logging(config: LoggingConfig, verbose: bool = False) -> None:
    """Configure the root logger from a logging block"""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if config.file:
        Path(config.file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(config.file, encoding="utf-8"))
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, config.level),
        format=config.format,
        handlers=handlers,
        force=True,
    )
