"""
Mapping Objective Enum
"""
from enum import Enum


class Objective(str, Enum):
    """Training objective for the mapping function"""
    MSE = "mse"
    MM = "mm"
    HINGE = "hinge"
