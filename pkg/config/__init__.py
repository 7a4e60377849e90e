from pydantic import AnyHttpUrl, BaseSettings

from config.fit import FitConfig
from config.truncation import TruncationConfig


class Config(BaseSettings, TruncationConfig, FitConfig):
    SERVER_HOST: AnyHttpUrl = "http://localhost:8000"
    SERVER_PORT: int = 8000
    WORKERS: int = 1
    IS_DEBUG: bool = True
    LOG_LEVEL: str = "INFO"

    class Config:
        env_file = ".env"


config = Config()
