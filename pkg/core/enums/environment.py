"""
Environment Enum
"""
from enum import Enum


class Environment(Enum):
    """Configuration profile enumeration (config/environments/<value>.yaml)"""
    DEFAULT = "default"
    DEV = "dev"
    FULL = "full"
