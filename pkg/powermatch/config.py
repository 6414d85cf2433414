import os
import sys

from pydantic import Field, ValidationError, ValidationInfo, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class AppConfig(BaseSettings):
    """
    Global application configurations.
    Variables will be loaded from the .env file. However, if
    there is a shell environment variable having the same name,
    that will take precedence.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        frozen=True,
    )

    ANTICHAIN_DIVISOR_CAP: int = 4096
    BRUTE_FORCE_MAX_EDGES: int = 24
    BRUTE_FORCE_MAX_VERTICES: int = 16
    CATALOG_CAP: int = 64
    DATA_DIR: str = "./data/"
    DEBUG: bool = False
    GROUP_ORDER_CAP: int = 5000
    INDEPENDENCE_GUARD: int = 64
    REPORT_FILE: str = Field(default="", validate_default=True)
    SUITE_WORKERS: int = 1

    @field_validator("REPORT_FILE")
    @classmethod
    def report_under_data_dir(cls, value: str, info: ValidationInfo) -> str:
        """An unset report path follows DATA_DIR."""

        if value:
            return value
        return os.path.join(info.data.get("DATA_DIR", "./data/"), "report.json")


try:
    config = AppConfig.model_validate({})
except ValidationError as err:
    print(f"Invalid configuration: {err}", file=sys.stderr)
    sys.exit(1)
