"""Binary symmetric channel simulation and error-estimation sampling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .util import make_rng


@dataclass(frozen=True)
class ChannelModel:
    """BSC crossover probability and the seed of its flip stream.

    The full [0, 1] range is allowed in simulation; protocol-level
    preconditions (0 < eps < 0.5) are enforced where they matter.
    """

    epsilon: float
    seed: int

    def __post_init__(self):
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"crossover probability {self.epsilon} outside [0, 1]")


@dataclass(frozen=True)
class EstimationSample:
    """t distinct positions of Bob's string together with their bits."""

    positions: np.ndarray
    bits: np.ndarray

    def __post_init__(self):
        if len(self.positions) != len(self.bits):
            raise ValueError("positions and bits differ in length")
        if len(np.unique(self.positions)) != len(self.positions):
            raise ValueError("sample positions must be distinct")

    @property
    def t(self) -> int:
        return len(self.positions)


def bsc_transmit(x: np.ndarray, model: ChannelModel) -> np.ndarray:
    """Flip each bit independently with probability epsilon."""
    x = np.asarray(x, dtype=np.uint8)
    if model.epsilon == 0.0:
        return x.copy()
    if model.epsilon == 1.0:
        return x ^ 1
    rng = make_rng(model.seed)
    flips = (rng.random(len(x)) < model.epsilon).astype(np.uint8)
    return x ^ flips


def random_key(n: int, seed: int) -> np.ndarray:
    """Uniform raw-key bits."""
    return make_rng(seed).integers(0, 2, size=n, dtype=np.uint8)


def draw_sample(y: np.ndarray, t: int, seed: int) -> EstimationSample:
    """t distinct uniformly drawn positions of y with their bits."""
    y = np.asarray(y, dtype=np.uint8)
    if t > len(y):
        raise ValueError(f"sample size {t} exceeds key length {len(y)}")
    positions = make_rng(seed).choice(len(y), size=t, replace=False).astype(np.int64)
    return EstimationSample(positions=positions, bits=y[positions])
