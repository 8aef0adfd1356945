"""
Mapping Network
The specialisation function f: either a single bias-free linear map W_f, or a deep
feed-forward network with H hidden layers and a linear output layer.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.constants.error_messages import ErrorMessages
from core.enums.activation import Activation, InitScheme
from core.enums.model_kind import ModelKind
from core.mapping.activations import get_activation, get_initializer

logger = logging.getLogger(__name__)


class MappingModel:
    """
    Layer weights are stored (out x in) and applied to row-batched inputs, so
    forward(X) = X @ W.T + b per layer. The linear kind has one weight and no bias.
    """

    def __init__(self, kind: ModelKind, weights: Sequence[np.ndarray],
                 biases: Sequence[Optional[np.ndarray]], activation: Activation = Activation.SWISH):
        self.kind = ModelKind(kind)
        self.activation = Activation(activation)
        self.weights: List[np.ndarray] = [np.asarray(w, dtype=np.float64) for w in weights]
        self.biases: List[Optional[np.ndarray]] = [
            None if b is None else np.asarray(b, dtype=np.float64) for b in biases]
        self._act, self._act_grad = get_activation(self.activation)
        self._validate()

    def _validate(self):
        if not self.weights or len(self.weights) != len(self.biases):
            raise ValueError("A mapping model needs one bias entry per weight matrix")
        if self.kind == ModelKind.LINEAR and (len(self.weights) != 1 or self.biases[0] is not None):
            raise ValueError("A linear mapping is a single weight matrix without bias")
        width = self.weights[0].shape[1]
        for w, b in zip(self.weights, self.biases):
            if w.ndim != 2 or w.shape[1] != width:
                raise ValueError(f"Layer shapes do not compose: expected input width {width}, got {w.shape}")
            if b is not None and b.shape != (w.shape[0],):
                raise ValueError(f"Bias shape {b.shape} does not match layer output {w.shape[0]}")
            width = w.shape[0]
        if width != self.dim:
            raise ValueError(ErrorMessages.DIMENSION_MISMATCH.format(expected=self.dim, actual=width))
        if not all(np.isfinite(p).all() for p in self.parameters()):
            raise ValueError("Mapping model weights must be finite")

    # ==================== Construction ====================

    @classmethod
    def build(cls, kind: ModelKind, dim: int, hidden_layers: int = 5, hidden_width: int = 512,
              activation: Activation = Activation.SWISH, init: InitScheme = InitScheme.HE,
              rng: Optional[np.random.Generator] = None) -> "MappingModel":
        """
        Freshly initialised model. Linear maps start at the identity; network layers
        use the chosen initialiser and zero biases.
        """
        rng = rng if rng is not None else np.random.default_rng()
        if ModelKind(kind) == ModelKind.LINEAR:
            return cls.linear(np.eye(dim))
        initializer = get_initializer(init)
        sizes = [dim] + [hidden_width] * hidden_layers + [dim]
        weights = [initializer(fan_in, fan_out, rng) for fan_in, fan_out in zip(sizes[:-1], sizes[1:])]
        biases = [np.zeros(fan_out) for fan_out in sizes[1:]]
        return cls(ModelKind.DFFN, weights, biases, activation)

    @classmethod
    def linear(cls, matrix: np.ndarray) -> "MappingModel":
        """Linear map x -> W x"""
        return cls(ModelKind.LINEAR, [matrix], [None])

    def copy(self) -> "MappingModel":
        return MappingModel(self.kind, [w.copy() for w in self.weights],
                            [None if b is None else b.copy() for b in self.biases], self.activation)

    # ==================== Shape ====================

    @property
    def dim(self) -> int:
        return int(self.weights[0].shape[1])

    @property
    def hidden_layers(self) -> int:
        return len(self.weights) - 1

    def parameters(self) -> List[np.ndarray]:
        """Trainable arrays in a fixed order: W_1, b_1, ..., W_out, b_out"""
        params = []
        for w, b in zip(self.weights, self.biases):
            params.append(w)
            if b is not None:
                params.append(b)
        return params

    def _check_input(self, inputs: np.ndarray) -> np.ndarray:
        inputs = np.asarray(inputs, dtype=np.float64)
        if inputs.shape[-1] != self.dim:
            raise ValueError(ErrorMessages.DIMENSION_MISMATCH.format(expected=self.dim, actual=inputs.shape[-1]))
        return inputs

    # ==================== Forward / Backward ====================

    def forward(self, inputs: np.ndarray) -> np.ndarray:
        """Map one vector or a batch of row vectors"""
        inputs = self._check_input(inputs)
        single = inputs.ndim == 1
        out, _ = self.forward_with_cache(inputs[None, :] if single else inputs)
        return out[0] if single else out

    def forward_with_cache(self, inputs: np.ndarray) -> Tuple[np.ndarray, List[Tuple[np.ndarray, np.ndarray]]]:
        """
        Batched forward pass that keeps what backward needs

        Returns:
            (outputs, per-layer (layer input, pre-activation))
        """
        cache = []
        h = inputs
        last = len(self.weights) - 1
        for i, (w, b) in enumerate(zip(self.weights, self.biases)):
            z = h @ w.T
            if b is not None:
                z = z + b
            cache.append((h, z))
            h = z if i == last else self._act(z)
        return h, cache

    def backward(self, cache: List[Tuple[np.ndarray, np.ndarray]], grad_out: np.ndarray) -> List[np.ndarray]:
        """
        Backpropagate d loss / d output

        Returns:
            Gradients aligned with parameters()
        """
        grads: List[np.ndarray] = []
        g = grad_out
        for i in range(len(self.weights) - 1, -1, -1):
            h, z = cache[i]
            if i != len(self.weights) - 1:
                g = g * self._act_grad(z)
            layer = [g.T @ h]
            if self.biases[i] is not None:
                layer.append(g.sum(axis=0))
            grads = layer + grads
            if i:
                g = g @ self.weights[i]
        return grads

    def __repr__(self) -> str:
        shapes = [w.shape for w in self.weights]
        return f"MappingModel(kind={self.kind.value}, activation={self.activation.value}, layers={shapes})"
