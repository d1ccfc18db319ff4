"""The shared resource as a two-logical-qubit state, and its entanglement."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ChannelParams, basis_weights, cat_normalization

__all__ = [
    "ChannelDescriptor",
    "build_channel",
    "concurrence_analytic",
    "concurrence_numeric",
]


@dataclass(frozen=True)
class ChannelDescriptor:
    params: ChannelParams
    state: np.ndarray  # amplitudes on |00>, |01>, |10>, |11> of A (x) B
    concurrence: float


def build_channel(params: ChannelParams, formal: bool = False) -> ChannelDescriptor:
    """Cat state ``|j, eta, m>`` split evenly between Alice and Bob.

    Each half carries spin j/2, so both logical qubits share the weights
    ``A = A_{j/2}``, ``B = B_{j/2}``. The split is a genuine spin only for
    integer j; ``formal=True`` evaluates the same amplitudes for any j > 0
    (used for concurrence curves at half-integer j).
    """
    if formal:
        cat_normalization(params)  # still rejects the odd cat at overlap 1
    else:
        params.require_physical()
    A, B = basis_weights(params.p, params.j / 2.0)
    Nm = cat_normalization(params)
    phase = 1.0 if params.m == 0 else -1.0
    beta_plus, beta_minus = 1.0 + phase, 1.0 - phase
    state = Nm * np.array(
        [A * A * beta_plus, A * B * beta_minus, A * B * beta_minus, B * B * beta_plus],
        dtype=complex,
    )
    norm = np.linalg.norm(state)
    assert abs(norm - 1.0) < 1e-12, norm
    return ChannelDescriptor(params, state, concurrence_numeric(state))


def concurrence_analytic(params: ChannelParams) -> float:
    """``(1 - p^{2j}) / (1 + p^{2j} cos(m pi))``; identically 1 for odd cats."""
    if params.m == 1:
        return 1.0
    P = params.overlap
    return (1.0 - P) / (1.0 + P)


def concurrence_numeric(state: np.ndarray) -> float:
    """Wootters concurrence ``2|a00 a11 - a01 a10|`` of a pure two-qubit state."""
    a00, a01, a10, a11 = np.asarray(state).reshape(4)
    return float(2.0 * abs(a00 * a11 - a01 * a10))
