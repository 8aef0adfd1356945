"""
Random Utility
All randomness flows from one run seed; stages get their own generators derived by label.
"""
import hashlib

import numpy as np


def derive_seed(seed: int, label: str) -> int:
    """Derive a stable 63-bit stage seed from the run seed and a fixed label"""
    digest = hashlib.sha256(f"{int(seed)}:{label}".encode('utf-8')).digest()
    return int.from_bytes(digest[:8], 'big') >> 1


def make_rng(seed: int, label: str = None) -> np.random.Generator:
    """Create a numpy Generator, optionally derived from seed by label"""
    return np.random.default_rng(derive_seed(seed, label) if label else int(seed))
