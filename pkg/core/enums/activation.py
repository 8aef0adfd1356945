"""
Activation and Initialisation Enums
"""
from enum import Enum


class Activation(str, Enum):
    """Hidden-layer non-linearity"""
    SWISH = "swish"
    RELU = "relu"


class InitScheme(str, Enum):
    """Weight initialisation scheme"""
    HE = "he"
    XAVIER = "xavier"
