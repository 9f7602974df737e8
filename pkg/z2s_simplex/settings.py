"""
Runtime settings

Built-in defaults, overlaid by a YAML config file and then by environment
variables. CLI flags are applied last by the caller.
"""

import copy
import logging
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from z2s_simplex.errors import InvalidParameter

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "z2s-config.yaml"

DEFAULTS: Dict[str, Any] = {
    "budgets": {
        "enumeration": 2 ** 22,
        "extended_enumeration": 2 ** 16,
        "kernel_pair_work": 2 ** 34,
        "rank_rows": 2 ** 22,
        # Largest length for which kernel_binary may search all of Z_2^n
        "full_space_length": 24,
        # Largest generator matrix (rows x columns) that may be built
        "matrix_entries": 2 ** 24,
    },
    "threads": 1,
    "chunk_size": 1024,
    "logging": {
        "level": "INFO",
        "format": "text",
    },
}

ENV_OVERRIDES = {
    "Z2S_ENUM_BUDGET": ("budgets", "enumeration"),
    "Z2S_KERNEL_BUDGET": ("budgets", "kernel_pair_work"),
    "Z2S_RANK_BUDGET": ("budgets", "rank_rows"),
    "Z2S_MATRIX_BUDGET": ("budgets", "matrix_entries"),
    "Z2S_THREADS": ("threads",),
    "LOG_LEVEL": ("logging", "level"),
    "LOG_FORMAT": ("logging", "format"),
}


@dataclass(frozen=True)
class Budgets:
    """Work limits; anything larger raises BudgetExceeded"""
    enumeration: int = DEFAULTS["budgets"]["enumeration"]
    extended_enumeration: int = DEFAULTS["budgets"]["extended_enumeration"]
    kernel_pair_work: int = DEFAULTS["budgets"]["kernel_pair_work"]
    rank_rows: int = DEFAULTS["budgets"]["rank_rows"]
    full_space_length: int = DEFAULTS["budgets"]["full_space_length"]
    matrix_entries: int = DEFAULTS["budgets"]["matrix_entries"]


@dataclass(frozen=True)
class Settings:
    budgets: Budgets = field(default_factory=Budgets)
    threads: int = 1
    chunk_size: int = 1024
    log_level: str = "INFO"
    log_format: str = "text"

    def with_overrides(
        self,
        budget: Optional[int] = None,
        threads: Optional[int] = None,
    ) -> "Settings":
        """Apply CLI overrides; a --budget caps codeword enumeration"""
        budgets = self.budgets
        if budget is not None:
            if budget < 1:
                raise InvalidParameter(f"budget must be >= 1, got {budget}")
            budgets = replace(budgets, enumeration=budget)
        if threads is not None and threads < 1:
            raise InvalidParameter(f"threads must be >= 1, got {threads}")
        return Settings(
            budgets=budgets,
            threads=threads if threads is not None else self.threads,
            chunk_size=self.chunk_size,
            log_level=self.log_level,
            log_format=self.log_format,
        )


def _merge(base: Dict[str, Any], overlay: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in overlay.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


def _load_config(config_path: Optional[str]) -> Dict[str, Any]:
    """Load configuration"""
    config = copy.deepcopy(DEFAULTS)

    path = config_path or os.getenv("Z2S_CONFIG") or str(DEFAULT_CONFIG_PATH)
    if path and os.path.exists(path):
        with open(path, "r") as f:
            custom = yaml.safe_load(f) or {}
        if not isinstance(custom, dict):
            raise InvalidParameter(f"Config file {path} must contain a mapping")
        _merge(config, custom)
        logger.debug(f"Loaded config from {path}")
    elif config_path:
        raise InvalidParameter(f"Config file not found: {config_path}")

    for env_name, keys in ENV_OVERRIDES.items():
        raw = os.getenv(env_name)
        if raw is None:
            continue
        target = config
        for key in keys[:-1]:
            target = target[key]
        target[keys[-1]] = raw

    return config


def _positive_int(name: str, value: Any) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise InvalidParameter(f"{name} must be an integer, got {value!r}")
    if number < 1:
        raise InvalidParameter(f"{name} must be >= 1, got {number}")
    return number


def load_settings(config_path: Optional[str] = None) -> Settings:
    """
    Build Settings from defaults, config file and environment

    Args:
        config_path: Optional YAML file; falls back to $Z2S_CONFIG, then the bundled config

    Returns:
        Validated Settings
    """
    config = _load_config(config_path)
    budgets = config["budgets"]

    log_format = str(config["logging"]["format"]).lower()
    if log_format not in ("text", "json"):
        raise InvalidParameter(f"Unknown log format: {log_format}")

    return Settings(
        budgets=Budgets(
            enumeration=_positive_int("budgets.enumeration", budgets["enumeration"]),
            extended_enumeration=_positive_int(
                "budgets.extended_enumeration", budgets["extended_enumeration"]
            ),
            kernel_pair_work=_positive_int("budgets.kernel_pair_work", budgets["kernel_pair_work"]),
            rank_rows=_positive_int("budgets.rank_rows", budgets["rank_rows"]),
            full_space_length=_positive_int("budgets.full_space_length", budgets["full_space_length"]),
            matrix_entries=_positive_int("budgets.matrix_entries", budgets["matrix_entries"]),
        ),
        threads=_positive_int("threads", config["threads"]),
        chunk_size=_positive_int("chunk_size", config["chunk_size"]),
        log_level=str(config["logging"]["level"]).upper(),
        log_format=log_format,
    )
