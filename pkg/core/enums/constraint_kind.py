"""
Constraint Kind Enum
"""
from enum import Enum


class ConstraintKind(str, Enum):
    """Direction a constraint pair pushes its two vectors"""
    ATTRACT = "attract"
    REPEL = "repel"
