"""GHZ-basis measurements on the tripartite logical state.

Party order is C (target), A (Alice's half of the resource), B (Bob's half);
a tripartite state is a length-8 complex vector with C as the most
significant index.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Sequence

import numpy as np

from .channel import build_channel
from .core import ChannelParams, TargetState, target_logical

__all__ = [
    "GHZ_BASIS",
    "PAULI_CORRECTIONS",
    "ZERO_BRANCH_TOL",
    "Pair",
    "PairOutcome",
    "AttemptReport",
    "compose_tripartite",
    "measure_pair",
    "fidelity_raw",
    "best_correction",
    "primary_success_indices",
    "primary_attempt",
    "reduced_state",
    "outcome_mixture",
]

Pair = Literal["CA", "CB"]

ZERO_BRANCH_TOL = 1e-15

_R = 1.0 / math.sqrt(2.0)
# Rows: GHZ_0..GHZ_3 on |00>, |01>, |10>, |11> of the measured pair.
GHZ_BASIS = np.array(
    [
        [_R, 0, 0, _R],
        [0, _R, _R, 0],
        [0, _R, -_R, 0],
        [_R, 0, 0, -_R],
    ],
    dtype=complex,
)

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI_CORRECTIONS = {
    "I": np.eye(2, dtype=complex),
    "X": _X,
    "Z": _Z,
    "ZX": _Z @ _X,
}


@dataclass(frozen=True)
class PairOutcome:
    index: int
    probability: float
    conditional: Optional[np.ndarray]
    fidelity_raw: float
    success: bool
    correction: Optional[str] = None
    fidelity_corrected: Optional[float] = None


@dataclass(frozen=True)
class AttemptReport:
    params: ChannelParams
    target: np.ndarray
    outcomes: tuple[PairOutcome, ...]
    f_av: float
    p_success: float


def compose_tripartite(target: np.ndarray, channel: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(target, dtype=complex), np.asarray(channel, dtype=complex))


def _pair_matrix(state: np.ndarray, pair: Pair) -> np.ndarray:
    """Reshape to (measured pair, remaining party) = 4 x 2."""
    psi = np.asarray(state, dtype=complex).reshape(2, 2, 2)
    if pair == "CA":
        return psi.reshape(4, 2)
    if pair == "CB":
        return psi.transpose(0, 2, 1).reshape(4, 2)
    raise ValueError(f"pair must be 'CA' or 'CB', got {pair!r}")


def fidelity_raw(conditional: np.ndarray, target: np.ndarray) -> float:
    return float(abs(np.vdot(conditional, target)) ** 2)


def best_correction(conditional: np.ndarray, target: np.ndarray) -> tuple[str, float]:
    """Pauli correction maximizing the fidelity; ties go to the earlier of I, X, Z, ZX."""
    best_label, best_f = "I", -1.0
    for label, op in PAULI_CORRECTIONS.items():
        f = fidelity_raw(op @ conditional, target)
        if f > best_f + 1e-12:
            best_label, best_f = label, f
    return best_label, min(best_f, 1.0)


def measure_pair(
    state: np.ndarray,
    pair: Pair,
    target: Optional[np.ndarray] = None,
    success_indices: Iterable[int] = (),
) -> list[PairOutcome]:
    """Project the pair onto each GHZ vector.

    Returns the four outcomes in index order. If ``target`` is given, each
    outcome carries its raw fidelity and the best Pauli correction; branches
    with probability below ``ZERO_BRANCH_TOL`` carry no conditional state and
    fidelity 0.
    """
    M = _pair_matrix(state, pair)
    amps = GHZ_BASIS.conj() @ M
    success_indices = frozenset(success_indices)
    outcomes = []
    for i in range(4):
        prob = float(np.vdot(amps[i], amps[i]).real)
        cond, f, corr, fc = None, 0.0, None, None
        if prob >= ZERO_BRANCH_TOL:
            cond = amps[i] / math.sqrt(prob)
            if target is not None:
                f = fidelity_raw(cond, target)
                corr, fc = best_correction(cond, target)
        outcomes.append(PairOutcome(i, prob, cond, f, i in success_indices, corr, fc))
    return outcomes


def primary_success_indices(m: int) -> frozenset[int]:
    """Outcomes flagged as success: {0, 3} for even cats, {1, 2} for odd ones."""
    return frozenset({0, 3}) if m == 0 else frozenset({1, 2})


def primary_attempt(params: ChannelParams, target: TargetState) -> AttemptReport:
    """One GHZ measurement on C and A; fidelities are uncorrected overlaps."""
    channel = build_channel(params)
    tvec = target_logical(target, params.p, params.j)
    state = compose_tripartite(tvec, channel.state)
    success = primary_success_indices(params.m)
    outcomes = measure_pair(state, "CA", tvec, success)
    f_av = sum(o.probability * o.fidelity_raw for o in outcomes)
    p_success = sum(o.probability for o in outcomes if o.success)
    return AttemptReport(params, tvec, tuple(outcomes), f_av, p_success)


def reduced_state(state: np.ndarray, keep: Literal["A", "B"]) -> np.ndarray:
    """Density matrix of a single resource party (partial trace of the rest)."""
    psi = np.asarray(state, dtype=complex).reshape(2, 2, 2)
    if keep == "B":
        M = psi.reshape(4, 2)
    else:
        M = psi.transpose(0, 2, 1).reshape(4, 2)
    return M.T @ M.conj()


def outcome_mixture(outcomes: Sequence[PairOutcome]) -> np.ndarray:
    """``sum_i P_i |T_i><T_i|`` over the non-zero branches."""
    rho = np.zeros((2, 2), dtype=complex)
    for o in outcomes:
        if o.conditional is not None:
            rho += o.probability * np.outer(o.conditional, o.conditional.conj())
    return rho
