"""
Adam adaptive moment estimation
"""
from typing import Sequence

import numpy as np

from core.base.base_optimizer import BaseOptimizer


class Adam(BaseOptimizer):
    """Adam with bias-corrected first and second moments"""

    def __init__(self, params: Sequence[np.ndarray], learning_rate: float = 1e-3,
                 beta1: float = 0.9, beta2: float = 0.999, epsilon: float = 1e-8):
        super().__init__(params, learning_rate)
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.m = [np.zeros_like(p) for p in self.params]
        self.v = [np.zeros_like(p) for p in self.params]

    def step(self, grads: Sequence[np.ndarray]):
        self._check(grads)
        self.iteration += 1
        correction1 = 1.0 - self.beta1 ** self.iteration
        correction2 = 1.0 - self.beta2 ** self.iteration
        for param, m, v, grad in zip(self.params, self.m, self.v, grads):
            m *= self.beta1
            m += (1.0 - self.beta1) * grad
            v *= self.beta2
            v += (1.0 - self.beta2) * grad * grad
            param -= self.learning_rate * (m / correction1) / (np.sqrt(v / correction2) + self.epsilon)
