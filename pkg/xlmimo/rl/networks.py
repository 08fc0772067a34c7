"""
Feed-forward approximators with hand-written backpropagation.

Inputs are row vectors: a batch has shape (B, n_in) and layer i computes
z = x @ W_i.T + b_i followed by its activation.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from xlmimo.utils import FloatArray

Activation = tuple[Callable[[FloatArray], FloatArray], Callable[[FloatArray], FloatArray]]


def _sigmoid(z: FloatArray) -> FloatArray:
    return 0.5 * (1.0 + np.tanh(0.5 * z))  # type: ignore[no-any-return]


# Each derivative is expressed through the activation output.
ACTIVATIONS: dict[str, Activation] = {
    "tanh": (np.tanh, lambda a: 1.0 - a**2),
    "sigmoid": (_sigmoid, lambda a: a * (1.0 - a)),
    "relu": (lambda z: np.maximum(z, 0.0), lambda a: (a > 0).astype(float)),
    "linear": (lambda z: z, np.ones_like),
}


@dataclass
class Gradients:
    """
    Gradients of (output . upstream) summed over the batch.

    Attributes:
        weights (list[FloatArray]): dW per layer.
        biases (list[FloatArray]): db per layer.
        inputs (FloatArray): d/dx, one row per batch entry.
    """

    weights: list[FloatArray]
    biases: list[FloatArray]
    inputs: FloatArray

    def scaled(self, factor: float) -> "Gradients":
        return Gradients(
            weights=[factor * w for w in self.weights],
            biases=[factor * b for b in self.biases],
            inputs=factor * self.inputs,
        )

    def named(self) -> dict[str, FloatArray]:
        named: dict[str, FloatArray] = {}
        for index, (w, b) in enumerate(zip(self.weights, self.biases)):
            named[f"W{index}"] = w
            named[f"b{index}"] = b
        return named


@dataclass
class Approximator:
    """
    A fully connected network.

    Attributes:
        weights (list[FloatArray]): (n_out, n_in) matrices, one per layer.
        biases (list[FloatArray]): (n_out,) vectors, one per layer.
        activations (tuple[str, ...]): Activation name per layer.
    """

    weights: list[FloatArray]
    biases: list[FloatArray]
    activations: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(self.weights) != len(self.biases) or not self.weights:
            raise ValueError("weights and biases must be non-empty and paired")
        if not self.activations:
            self.activations = ("tanh",) * (len(self.weights) - 1) + ("linear",)
        if len(self.activations) != len(self.weights):
            raise ValueError("one activation per layer is required")
        for name in self.activations:
            if name not in ACTIVATIONS:
                raise ValueError(f"Unknown activation: {name}")
        for index in range(1, len(self.weights)):
            if self.weights[index].shape[1] != self.weights[index - 1].shape[0]:
                raise ValueError(f"layer {index} does not match the previous layer width")

    @classmethod
    def create(
        cls,
        sizes: Sequence[int],
        rng: np.random.Generator,
        hidden: str = "tanh",
        output: str = "linear",
        final_scale: float = 3e-3,
    ) -> "Approximator":
        """
        Build a network with fan-in uniform initialization.

        Hidden layers draw from U(-1/sqrt(fan_in), 1/sqrt(fan_in)); the
        output layer from U(-final_scale, final_scale).
        """
        if len(sizes) < 2:
            raise ValueError("sizes must hold at least input and output widths")
        weights, biases = [], []
        layers = len(sizes) - 1
        for index in range(layers):
            fan_in, fan_out = sizes[index], sizes[index + 1]
            bound = final_scale if index == layers - 1 else 1.0 / np.sqrt(fan_in)
            weights.append(rng.uniform(-bound, bound, size=(fan_out, fan_in)))
            biases.append(rng.uniform(-bound, bound, size=fan_out))
        return cls(
            weights=weights,
            biases=biases,
            activations=(hidden,) * (layers - 1) + (output,),
        )

    @property
    def layer_sizes(self) -> tuple[int, ...]:
        return (self.weights[0].shape[1],) + tuple(w.shape[0] for w in self.weights)

    @property
    def input_size(self) -> int:
        return int(self.weights[0].shape[1])

    @property
    def output_size(self) -> int:
        return int(self.weights[-1].shape[0])

    def copy(self) -> "Approximator":
        return Approximator(
            weights=[w.copy() for w in self.weights],
            biases=[b.copy() for b in self.biases],
            activations=self.activations,
        )

    def parameters(self) -> dict[str, FloatArray]:
        """Named views of the parameters, W0, b0, W1, ..."""
        named: dict[str, FloatArray] = {}
        for index, (w, b) in enumerate(zip(self.weights, self.biases)):
            named[f"W{index}"] = w
            named[f"b{index}"] = b
        return named

    def load_parameters(self, named: dict[str, FloatArray]) -> None:
        """Overwrite parameters in place from a dict shaped like ``parameters()``."""
        for key, value in self.parameters().items():
            if named[key].shape != value.shape:
                raise ValueError(f"shape mismatch for {key}")
            value[...] = named[key]

    def forward_with_cache(self, inputs: FloatArray) -> tuple[FloatArray, list[FloatArray]]:
        """Forward pass keeping every layer output for backpropagation."""
        x = np.atleast_2d(np.asarray(inputs, dtype=float))
        if x.shape[1] != self.input_size:
            raise ValueError(
                f"input width {x.shape[1]} does not match the network input {self.input_size}"
            )
        cache = [x]
        for w, b, name in zip(self.weights, self.biases, self.activations):
            x = ACTIVATIONS[name][0](x @ w.T + b)
            cache.append(x)
        return x, cache

    def backward(self, cache: list[FloatArray], upstream: FloatArray) -> Gradients:
        """Backpropagate ``upstream`` (same shape as the output) through a cached pass."""
        delta = np.atleast_2d(np.asarray(upstream, dtype=float))
        weight_grads: list[FloatArray] = []
        bias_grads: list[FloatArray] = []
        for index in reversed(range(len(self.weights))):
            delta = delta * ACTIVATIONS[self.activations[index]][1](cache[index + 1])
            weight_grads.append(delta.T @ cache[index])
            bias_grads.append(delta.sum(axis=0))
            delta = delta @ self.weights[index]
        return Gradients(
            weights=weight_grads[::-1], biases=bias_grads[::-1], inputs=delta
        )


def forward(net: Approximator, inputs: FloatArray) -> FloatArray:
    """
    Evaluate a network; a 1-D input gives a 1-D output.

    Raises:
        ValueError: If the input width does not match.
    """
    output, _ = net.forward_with_cache(inputs)
    if np.ndim(inputs) == 1:
        return output[0]  # type: ignore[no-any-return]
    return output


def gradients(
    net: Approximator, inputs: FloatArray, upstream: FloatArray
) -> Gradients:
    """Parameter and input gradients of sum(output * upstream)."""
    _, cache = net.forward_with_cache(inputs)
    return net.backward(cache, upstream)


class Adam:
    """
    Adam optimizer over the parameters of one approximator.

    ``step`` descends: pass gradients of the quantity to minimize.
    """

    def __init__(
        self,
        net: Approximator,
        lr: float,
        beta1: float = 0.9,
        beta2: float = 0.999,
        eps: float = 1e-8,
        max_grad_norm: Optional[float] = None,
    ) -> None:
        if lr <= 0:
            raise ValueError("lr must be positive")
        self.net = net
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.max_grad_norm = max_grad_norm
        self.t = 0
        self.first = {key: np.zeros_like(v) for key, v in net.parameters().items()}
        self.second = {key: np.zeros_like(v) for key, v in net.parameters().items()}

    def step(self, grads: Gradients) -> None:
        named = grads.named()
        if self.max_grad_norm is not None:
            norm = np.sqrt(sum(float(np.sum(g**2)) for g in named.values()))
            if norm > self.max_grad_norm:
                named = {key: g * (self.max_grad_norm / norm) for key, g in named.items()}
        self.t += 1
        correction1 = 1.0 - self.beta1**self.t
        correction2 = 1.0 - self.beta2**self.t
        for key, param in self.net.parameters().items():
            grad = named[key]
            self.first[key] = self.beta1 * self.first[key] + (1 - self.beta1) * grad
            self.second[key] = self.beta2 * self.second[key] + (1 - self.beta2) * grad**2
            step = self.lr * (self.first[key] / correction1) / (
                np.sqrt(self.second[key] / correction2) + self.eps
            )
            param -= step

    def state(self, prefix: str) -> dict[str, FloatArray]:
        """Moment estimates and step count, for checkpoints."""
        state = {f"{prefix}.t": np.array(self.t)}
        for key in self.first:
            state[f"{prefix}.m.{key}"] = self.first[key]
            state[f"{prefix}.v.{key}"] = self.second[key]
        return state
