from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    PROJECT_NAME: str = "Circulant Burning Toolkit"
    API_V1_STR: str = "/api/v1"
    SERVER_PORT: int = 8000
    ENVIRONMENT: str = "development"

    LOG_LEVEL: str = "INFO"

    # Largest graph order the exhaustive solver is allowed to touch
    EXACT_CAP: int = 40

    # Product cross-check falls back to networkx isomorphism up to this order
    ISOMORPHISM_CHECK_MAX_ORDER: int = 64

    CAMPAIGN_WORKERS: int = 1

    # Formula generators may hand back the solver witness when their own
    # sequence does not verify
    SOLVER_FALLBACK: bool = True

    @field_validator("EXACT_CAP", "ISOMORPHISM_CHECK_MAX_ORDER", "CAMPAIGN_WORKERS")
    def positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"must be positive, got {v}")
        return v

    @field_validator("LOG_LEVEL")
    def upper_level(cls, v: str) -> str:
        return v.upper()

    model_config = SettingsConfigDict(case_sensitive=True, env_file=".env")


settings = Settings()
