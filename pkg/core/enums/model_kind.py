"""
Mapping Model Kind Enum
"""
from enum import Enum


class ModelKind(str, Enum):
    """Form of the specialisation function f"""
    LINEAR = "linear"
    DFFN = "dffn"
