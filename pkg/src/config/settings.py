"""
Application configuration settings.

This module defines hfkit configuration using Pydantic's settings
management. Settings can be configured via environment variables or a
.env file; every variable carries the 'HFKIT_' prefix.
"""

import logging
from pathlib import Path
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings with environment variable support.

    All settings can be overridden via environment variables with the
    prefix 'HFKIT_'. For example, HFKIT_BIT_CAP overrides bit_cap.

    Attributes:
        app_name: Application name
        app_version: Application version
        api_version: API version prefix (e.g., 'v1')
        environment: Deployment environment
        log_level: Logging level
        bit_cap: Maximum bit length of any Ackermann code
        default_budget: Witness budget for unbounded quantifiers
        default_seed: Seed for sampled checks
        default_range: Default exhaustive range for round-trip checks
        bounded_search_limit: Largest range a bounded quantifier may enumerate
        ordinal_result_limit: Largest ordinal built structurally by ord_arith
        dec_size_limit: Largest input accepted by dec
        stage_limit: Largest stage index that is representable
        lfp_cap_limit: Largest cap accepted by lfp_inductive
        stage_sample_pairs: Random pairs sampled for quadratic D_5 checks
        stage_sample_class_pairs: Pairs sampled within each member count class of D_5
        stage_sample_subsets: Random subsets sampled for D_5 set induction
        micro_budget: Witness budget for blind graph validation
        transport_arguments: Translated templates are checked on arguments below it
        transport_budget: Witness budget when checking a translated template
        random_corpus_size: Size of generated formula corpora
        soundness_range: Codes below it are used by the soundness run
        soundness_exhaustive: Pairs below it are checked exhaustively
        soundness_samples: Seeded pairs sampled from the rest of the range
        corpus_file_path: Path to the bundled formula corpus
        host: API server host
        port: API server port
        reload: Enable auto-reload on code changes (development only)
        cors_origins: Allowed CORS origins
    """

    # Application metadata
    app_name: str = "hfkit"
    app_version: str = "1.0.0"
    api_version: str = "v1"
    environment: Literal["development", "staging", "production"] = "development"

    # Logging configuration
    log_level: str = "WARNING"

    # Coding guards
    bit_cap: int = 2**20
    bounded_search_limit: int = 2**22
    ordinal_result_limit: int = 64
    dec_size_limit: int = 16
    stage_limit: int = 5
    lfp_cap_limit: int = 2**16

    # Evaluation and checking defaults
    default_budget: int = 64
    default_seed: int = 0
    default_range: int = 64
    stage_sample_pairs: int = 10**6
    stage_sample_class_pairs: int = 4096
    stage_sample_subsets: int = 64
    micro_budget: int = 2**17
    transport_arguments: int = 4
    transport_budget: int = 32
    random_corpus_size: int = 10**4
    soundness_range: int = 256
    soundness_exhaustive: int = 16
    soundness_samples: int = 256

    # Data configuration
    corpus_file_path: str = "data/formula_corpus.json"

    # Server configuration
    host: str = "0.0.0.0"
    port: int = 8000
    reload: bool = True

    # CORS configuration
    cors_origins: list[str] = ["*"]

    # Pydantic settings configuration
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="HFKIT_",
        case_sensitive=False,
        extra="ignore"
    )

    @property
    def api_prefix(self) -> str:
        """
        Get the API URL prefix.

        Returns:
            API prefix path (e.g., '/api/v1')
        """
        return f"/api/{self.api_version}"

    @property
    def corpus_file_absolute_path(self) -> Path:
        """
        Get the absolute path to the formula corpus.

        Returns:
            Absolute Path object for the corpus file
        """
        return Path(self.corpus_file_path).resolve()

    def configure_logging(self, level: str | None = None) -> None:
        """
        Configure application logging based on settings.

        Log records go to stderr so that command output on stdout stays
        machine-readable.

        Args:
            level: Optional level overriding the configured one
        """
        log_format = (
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        )

        logging.basicConfig(
            level=getattr(logging, (level or self.log_level).upper()),
            format=log_format,
            handlers=[
                logging.StreamHandler(),
            ]
        )

        # Set third-party loggers to WARNING to reduce noise
        logging.getLogger("uvicorn").setLevel(logging.WARNING)
        logging.getLogger("uvicorn.access").setLevel(logging.WARNING)

    def get_summary(self) -> dict:
        """
        Get a summary of current settings for logging/debugging.

        Returns:
            Dictionary of key settings
        """
        return {
            "app_name": self.app_name,
            "app_version": self.app_version,
            "environment": self.environment,
            "log_level": self.log_level,
            "bit_cap": self.bit_cap,
            "default_budget": self.default_budget,
            "default_seed": self.default_seed,
            "corpus_file_path": self.corpus_file_path,
            "api_prefix": self.api_prefix,
        }


# Global settings instance
# This can be imported and used throughout the application
settings = Settings()
