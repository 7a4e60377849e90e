from pydantic import BaseModel


class TruncationConfig(BaseModel):
    QORDER: int = 10
    YWIN: int = 8
    VORDER: int = 8
    CUTOFF: int = 41
    MATRIX_RANK_MAX: int = 5
