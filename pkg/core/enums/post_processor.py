"""
Post-Processor Enum
"""
from enum import Enum


class PostProcessorType(str, Enum):
    """Specialisation method applied to the seen subspace"""
    AR = "ar"
    RETROFIT = "retrofit"
