from pydantic import BaseModel


class FitConfig(BaseModel):
    WEIGHT_CEILING: int = 12
    FIT_QORDER: int = 21
    TEST_QORDER: int = 31
    GOLDEN_DIR: str = "golden"
