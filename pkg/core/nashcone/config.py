# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Library configuration using pydantic-settings
Loads settings from NASHCONE_* environment variables and .env
"""
import logging
from functools import lru_cache

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from environment"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="NASHCONE_",
        case_sensitive=False,
        extra="ignore",
    )

    # Bound B for brute-force oracle cross-checks
    brute_bound: int = 50

    # Process pool size for parameter scans (1 = sequential)
    scan_workers: int = 1

    log_level: str = "WARNING"

    # Ceiling on the coordinate sum explored when canonicalizing certificates
    max_certificate_sum: int = 10_000

    @field_validator("brute_bound", "scan_workers", "max_certificate_sum")
    @classmethod
    def validate_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("value must be at least 1")
        return value

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, value: str) -> str:
        level = value.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"unknown log level: {value}")
        return level


@lru_cache
def get_settings() -> Settings:
    """Settings read from the environment on first use, then cached."""
    return Settings()
