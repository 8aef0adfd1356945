"""
Base Optimizer class that the gradient-based trainers share
"""
import logging
from abc import ABC, abstractmethod
from typing import List, Sequence

import numpy as np


class BaseOptimizer(ABC):
    """
    Updates a fixed list of numpy parameter arrays in place from matching gradients
    """

    def __init__(self, params: Sequence[np.ndarray], learning_rate: float):
        self.params: List[np.ndarray] = list(params)
        self.learning_rate = learning_rate
        self.iteration = 0
        self.logger = logging.getLogger(self.__class__.__name__)

    @abstractmethod
    def step(self, grads: Sequence[np.ndarray]):
        """Apply one update; grads align with params"""

    def _check(self, grads: Sequence[np.ndarray]):
        if len(grads) != len(self.params):
            raise ValueError(f"Expected {len(self.params)} gradients, got {len(grads)}")
