import logging
from pydantic_settings import BaseSettings

class Settings(BaseSettings):
    # API Configuration
    API_VERSION: str = "1.0.0"
    DEBUG_MODE: bool = False
    API_HOST: str = "0.0.0.0"
    API_PORT: int = 8000

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    # Calculator limits
    MAX_GENUS: int = 16

    # Identity suites (seeded so repeated runs are byte-identical)
    RANDOM_PAIRS_PER_GENUS: int = 100
    RANDOM_SEED: int = 1729

    # Output
    DEFAULT_OUTPUT_FORMAT: str = "json"

    # Performance Settings
    VERIFY_MAX_WORKERS: int = 4
    TABLE_CACHE_MAX_ENTRIES: int = 200000

    model_config = {"env_file": ".env", "case_sensitive": True}

# Global settings instance
settings = Settings()

def get_settings() -> Settings:
    """Get the global settings instance"""
    return settings

def validate_settings() -> bool:
    """Validate that the configured limits are usable"""
    problems = []

    if logging.getLevelName(settings.LOG_LEVEL.upper()) not in (
        logging.DEBUG, logging.INFO, logging.WARNING, logging.ERROR, logging.CRITICAL
    ):
        problems.append(f"LOG_LEVEL={settings.LOG_LEVEL}")
    if settings.MAX_GENUS < 2:
        problems.append(f"MAX_GENUS={settings.MAX_GENUS}")
    if settings.RANDOM_PAIRS_PER_GENUS < 1:
        problems.append(f"RANDOM_PAIRS_PER_GENUS={settings.RANDOM_PAIRS_PER_GENUS}")
    if settings.DEFAULT_OUTPUT_FORMAT not in ("json", "csv", "text"):
        problems.append(f"DEFAULT_OUTPUT_FORMAT={settings.DEFAULT_OUTPUT_FORMAT}")
    if settings.TABLE_CACHE_MAX_ENTRIES < 1:
        problems.append(f"TABLE_CACHE_MAX_ENTRIES={settings.TABLE_CACHE_MAX_ENTRIES}")

    if problems:
        logging.getLogger(__name__).error(
            "Invalid settings", extra={"problems": problems}
        )
        return False

    return True
