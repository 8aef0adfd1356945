"""
Adagrad with row-sparse updates
"""
from typing import Sequence

import numpy as np

from core.base.base_optimizer import BaseOptimizer


class Adagrad(BaseOptimizer):
    """
    Adagrad: x -= lr * g / sqrt(G), G accumulating squared gradients from an
    initial value. step_rows touches only the rows a mini-batch produced gradients for.
    """

    def __init__(self, params: Sequence[np.ndarray], learning_rate: float = 0.05,
                 initial_accumulator: float = 0.1):
        super().__init__(params, learning_rate)
        self.accumulators = [np.full_like(p, initial_accumulator, dtype=np.float64) for p in self.params]

    def step(self, grads: Sequence[np.ndarray]):
        self._check(grads)
        for param, acc, grad in zip(self.params, self.accumulators, grads):
            acc += grad * grad
            param -= self.learning_rate * grad / np.sqrt(acc)
        self.iteration += 1

    def step_rows(self, rows: np.ndarray, grad: np.ndarray, param_index: int = 0):
        """
        Update selected rows of one parameter matrix

        Args:
            rows: Unique row indices
            grad: Gradient rows aligned with rows
            param_index: Which parameter matrix to update
        """
        param = self.params[param_index]
        acc = self.accumulators[param_index]
        acc[rows] += grad * grad
        param[rows] -= self.learning_rate * grad / np.sqrt(acc[rows])
        self.iteration += 1
