"""Cascade baseline: multi-pass parity exchange with dichotomic error
search and back-correction across earlier passes.

Leakage counts every parity bit ever exchanged (one per block parity plus
one per bisection level).  Channel uses follow a lockstep batching rule:
all odd blocks of one pass advance their bisections together, costing one
message per bisection level per direction; block parities at the start of
a pass cost one message each direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .util import STREAM_PERMUTATION, binary_entropy, make_rng, split_seed


def default_k1(qber_est: float) -> int:
    """Initial block size ceil(0.73 / QBER), floored at 1."""
    return max(1, math.ceil(0.73 / qber_est))


@dataclass(frozen=True)
class CascadeConfig:
    passes: int = 4
    k1_rule = staticmethod(default_k1)
    seed: int = 0

    def __post_init__(self):
        if self.passes < 1:
            raise ValueError("need at least one pass")


@dataclass
class CascadeTranscript:
    corrected: np.ndarray
    parity_bits_disclosed: int = 0
    messages: int = 0
    corrections: int = 0
    residual_errors: int = 0
    block_sizes: list[int] = field(default_factory=list)

    def efficiency(self, epsilon: float) -> float:
        """f = parities / (n h(eps)), same accounting as the LDPC protocol."""
        if not 0.0 < epsilon < 0.5:
            raise ValueError(f"efficiency undefined at epsilon = {epsilon}")
        return self.parity_bits_disclosed / (len(self.corrected) * binary_entropy(epsilon))


def _parity(bits: np.ndarray) -> int:
    return int(np.count_nonzero(bits) & 1)


def binary_search_error(x_block: np.ndarray, y_block: np.ndarray) -> tuple[int, int]:
    """Locate one discrepancy inside a block of odd error count.

    Returns (index within the block, parities exchanged).  Each halving
    compares the parities of the left halves and recurses into the
    mismatching side, so the parity count equals the number of halvings.
    """
    x_block = np.asarray(x_block, dtype=np.uint8)
    y_block = np.asarray(y_block, dtype=np.uint8)
    if _parity(x_block) == _parity(y_block):
        raise ValueError("block parities match: even number of errors")
    lo, hi = 0, len(x_block)
    parities = 0
    while hi - lo > 1:
        mid = lo + (hi - lo) // 2
        parities += 1
        if _parity(x_block[lo:mid]) != _parity(y_block[lo:mid]):
            hi = mid
        else:
            lo = mid
    return lo, parities


class _Pass:
    """Bookkeeping for one completed (or running) pass: its permutation
    and which of its blocks currently hold an odd number of errors."""

    def __init__(self, perm: np.ndarray | None, block: int, n: int):
        self.perm = perm
        self.inv = None if perm is None else np.argsort(perm)
        self.block = block
        self.nblocks = (n + block - 1) // block
        self.odd: set[int] = set()

    def block_of(self, position: int) -> int:
        idx = position if self.inv is None else int(self.inv[position])
        return idx // self.block

    def positions(self, b: int, n: int) -> np.ndarray:
        idx = np.arange(b * self.block, min((b + 1) * self.block, n))
        return idx if self.perm is None else self.perm[idx]


def cascade_reconcile(x: np.ndarray, y: np.ndarray, qber_est: float,
                      config: CascadeConfig) -> CascadeTranscript:
    """Run Cascade on (x, y); corrects Bob's copy in place of a copy.

    After each pass (including the cascaded back-corrections it triggers)
    every block of every pass seen so far has matching parity.  Residual
    errors (even-count patterns never split by any pass) are reported,
    not raised.
    """
    x = np.asarray(x, dtype=np.uint8)
    y = np.array(y, dtype=np.uint8)
    if len(x) != len(y):
        raise ValueError("key lengths differ")
    if not 0.0 < qber_est < 0.5:
        raise ValueError(f"QBER estimate {qber_est} outside (0, 0.5)")
    n = len(x)
    tr = CascadeTranscript(corrected=y)
    k1 = config.k1_rule(qber_est)
    passes: list[_Pass] = []

    def flip(position: int) -> None:
        y[position] ^= 1
        tr.corrections += 1
        for p in passes:
            b = p.block_of(position)
            p.odd.symmetric_difference_update({b})

    def bisect_wave() -> None:
        # Lockstep: repeatedly take the pass with the smallest block size
        # among those with odd blocks; bisect all its odd blocks at once.
        while True:
            active = [p for p in passes if p.odd]
            if not active:
                return
            p = min(active, key=lambda q: q.block)
            blocks = sorted(p.odd)
            depth = 0
            for b in blocks:
                pos = p.positions(b, n)
                where, parities = binary_search_error(x[pos], y[pos])
                tr.parity_bits_disclosed += parities
                depth = max(depth, parities)
                flip(int(pos[where]))
            tr.messages += 2 * depth

    for i in range(config.passes):
        block = min(n, k1 * 2**i)
        perm = None if i == 0 else make_rng(
            split_seed(config.seed, STREAM_PERMUTATION, i)).permutation(n)
        p = _Pass(perm, block, n)
        passes.append(p)
        tr.block_sizes.append(block)
        # Exchange all block parities of this pass: one message each way.
        diff = x ^ y
        dperm = diff if perm is None else diff[perm]
        pad = (-len(dperm)) % block
        if pad:
            dperm = np.concatenate([dperm, np.zeros(pad, dtype=np.uint8)])
        sums = np.add.reduceat(dperm.astype(np.int64), np.arange(0, len(dperm), block))
        p.odd = set(np.nonzero(sums & 1)[0].tolist())
        tr.parity_bits_disclosed += p.nblocks
        tr.messages += 2
        bisect_wave()

    tr.residual_errors = int(np.count_nonzero(x ^ y))
    tr.corrected = y
    return tr
