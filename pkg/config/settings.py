"""
Configuration Settings for the Flat Manifold Service

Bounds for the exact computations and the runtime options of the CLI and the
HTTP surface. Values come from the environment (prefix FLATMAN_) or a .env file.
"""

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings

from .constants import DEFAULTS


class Settings(BaseSettings):
    """
    Configuration settings for the flat manifold toolkit.
    Only the CLI and HTTP layers read these; library calls take bounds explicitly.
    """

    # Service configuration
    service_name: str = Field(default="flat-manifold-service", description="Service name")
    host: str = Field(default="0.0.0.0", description="Host the HTTP service binds to")
    port: int = Field(default=8000, description="Service port")
    debug_mode: bool = Field(default=False, description="Enable debug mode")

    # Logging
    log_level: str = Field(default="INFO", description="Logging level")
    log_json: bool = Field(default=False, description="Emit structured JSON log lines")

    # Computation bounds
    group_order_bound: int = Field(default=DEFAULTS["group_order_bound"], description="Largest holonomy group order accepted by group closure")
    reduce_norm_bound: int = Field(default=DEFAULTS["reduce_norm_bound"], description="Sup-norm bound of the orbit-span reducibility search")
    generic_search_limit: int = Field(default=DEFAULTS["generic_search_limit"], description="Candidate limit when sampling a generic coset")

    # Output
    default_output_format: Literal["json", "text"] = Field(default=DEFAULTS["output_format"], description="Report format (json, text)")
    schema_version: str = Field(default=DEFAULTS["schema_version"], description="Schema version written into emitted documents")

    class Config:
        env_prefix = "FLATMAN_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False
        extra = "ignore"


def get_settings() -> Settings:
    """Get settings instance"""
    return Settings()
