"""
Activations and weight initialisers for the mapping network
"""
from typing import Callable, Tuple

import numpy as np
from scipy.special import expit

from core.enums.activation import Activation, InitScheme


def swish(x: np.ndarray) -> np.ndarray:
    """x * sigmoid(x), i.e. swish with beta fixed to 1"""
    return x * expit(x)


def swish_grad(x: np.ndarray) -> np.ndarray:
    s = expit(x)
    return s + x * s * (1.0 - s)


def relu(x: np.ndarray) -> np.ndarray:
    return np.maximum(x, 0.0)


def relu_grad(x: np.ndarray) -> np.ndarray:
    return (x > 0).astype(np.float64)


_ACTIVATIONS = {
    Activation.SWISH: (swish, swish_grad),
    Activation.RELU: (relu, relu_grad),
}


def get_activation(activation: Activation) -> Tuple[Callable, Callable]:
    """(function, derivative) pair for an activation"""
    return _ACTIVATIONS[Activation(activation)]


def he_init(fan_in: int, fan_out: int, rng: np.random.Generator) -> np.ndarray:
    """
    He normal initialisation: fan_out x fan_in matrix with entries ~ Normal(0, 2/fan_in)
    """
    if fan_in < 1 or fan_out < 1:
        raise ValueError(f"Layer sizes must be >= 1, got fan_in={fan_in}, fan_out={fan_out}")
    return rng.normal(0.0, np.sqrt(2.0 / fan_in), size=(fan_out, fan_in))


def xavier_init(fan_in: int, fan_out: int, rng: np.random.Generator) -> np.ndarray:
    """Glorot normal initialisation: entries ~ Normal(0, 2/(fan_in + fan_out))"""
    if fan_in < 1 or fan_out < 1:
        raise ValueError(f"Layer sizes must be >= 1, got fan_in={fan_in}, fan_out={fan_out}")
    return rng.normal(0.0, np.sqrt(2.0 / (fan_in + fan_out)), size=(fan_out, fan_in))


def get_initializer(scheme: InitScheme) -> Callable[[int, int, np.random.Generator], np.ndarray]:
    return he_init if InitScheme(scheme) == InitScheme.HE else xavier_init
