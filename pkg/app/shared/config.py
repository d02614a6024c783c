from typing import Optional
from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables from .env file
load_dotenv()

class Settings(BaseSettings):
    max_dim: int = 64          # construction cap
    max_solve_dim: int = 10    # bracket solver cap
    min_solve_dim: int = 2
    log_level: str = "WARNING"
    json_indent: Optional[int] = None

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="TPALG_",
        case_sensitive=False
    )

settings = Settings()
