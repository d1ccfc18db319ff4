"""Repeated GHZ measurements with alternating pairs, and closed-form statistics.

Depth 0 is the primary measurement on C and A. A failure at depth d is
followed by a measurement on the other pair (CB at odd depths, CA at even
depths); success outcomes end their branch. The tree is enumerated exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np

from .channel import build_channel, concurrence_analytic
from .core import ChannelParams, TargetState, overlap_power, target_logical
from .engine import (
    GHZ_BASIS,
    ZERO_BRANCH_TOL,
    Pair,
    PairOutcome,
    compose_tripartite,
    measure_pair,
    primary_success_indices,
)
from .errors import InfiniteRepetitions, TreeTooDeep, UnsupportedDepth, ZeroBranch

__all__ = [
    "MAX_DEPTH",
    "TreeNode",
    "AttemptTree",
    "CumulativeStats",
    "default_success_table",
    "success_indices",
    "pair_for_depth",
    "post_measurement_state",
    "build_tree",
    "run_repeated",
    "f_av_closed",
    "f_av_from_concurrence",
    "p_success_closed",
    "p_success_from_concurrence",
    "repetitions_required",
]

MAX_DEPTH = 12

SuccessTable = Mapping[int, frozenset]


def pair_for_depth(depth: int) -> Pair:
    return "CA" if depth % 2 == 0 else "CB"


def default_success_table(m: int) -> dict[int, frozenset]:
    """Success outcomes tabulated for the primary and first two repeated attempts.

    Even cats succeed on GHZ_0/GHZ_3 at every tabulated depth (outcomes 0, 3,
    10, 13, 20, 23, 110, 113, ...); odd cats on GHZ_1/GHZ_2.
    """
    s = primary_success_indices(m)
    return {0: s, 1: s, 2: s}


def success_indices(m: int, depth: int, table: Optional[SuccessTable] = None) -> frozenset:
    """Success set at ``depth``.

    Depths missing from the table reuse the deepest tabulated depth that
    measured the same pair.
    """
    table = default_success_table(m) if table is None else table
    if depth in table:
        return frozenset(table[depth])
    same_pair = [d for d in table if d <= depth and d % 2 == depth % 2]
    if not same_pair:
        raise KeyError(f"no success set tabulated for the pair measured at depth {depth}")
    return frozenset(table[max(same_pair)])


@dataclass(frozen=True)
class TreeNode:
    depth: int
    path: tuple[int, ...]
    pair: Pair
    probability: float  # product of conditional probabilities along the path
    conditional_probability: float
    success: bool
    fidelity_raw: float
    conditional: Optional[np.ndarray]
    state: Optional[np.ndarray] = None  # post-measurement state, failure branches that continue

    @property
    def label(self) -> str:
        return "".join(str(i) for i in self.path)


@dataclass(frozen=True)
class CumulativeStats:
    depth: int
    p_success: float
    f_av_all: float
    f_av_accrued: float
    p_failure_live: float = 0.0


@dataclass
class AttemptTree:
    params: ChannelParams
    target: np.ndarray
    root: np.ndarray
    depth: int
    nodes: list[TreeNode] = field(default_factory=list)

    def level(self, depth: int) -> list[TreeNode]:
        return [n for n in self.nodes if n.depth == depth]

    def node(self, label: str) -> TreeNode:
        for n in self.nodes:
            if n.label == label:
                return n
        raise KeyError(label)

    def leaves(self, depth: int) -> list[TreeNode]:
        """Leaves of the tree truncated at ``depth`` (live failures count as leaves)."""
        out = [n for n in self.nodes if n.depth < depth and (n.success or n.state is None)]
        return out + self.level(depth)

    def stats(self, depth: int) -> CumulativeStats:
        done = [n for n in self.nodes if n.depth <= depth and n.success]
        live = [n for n in self.level(depth) if not n.success]
        p_succ = math.fsum(n.probability for n in done)
        accrued = math.fsum(n.probability * n.fidelity_raw for n in done)
        tail = math.fsum(n.probability * n.fidelity_raw for n in live)
        p_live = math.fsum(n.probability for n in live)
        return CumulativeStats(depth, p_succ, accrued + tail, accrued, p_live)


def post_measurement_state(outcome: PairOutcome, basis_vector: np.ndarray, pair: Pair) -> np.ndarray:
    """``|GHZ_i>_pair (x) |T_i>_other`` reassembled in C, A, B order."""
    if outcome.conditional is None or outcome.probability < ZERO_BRANCH_TOL:
        raise ZeroBranch(f"outcome {outcome.index} has probability {outcome.probability:g}")
    g = np.asarray(basis_vector, dtype=complex).reshape(2, 2)
    t = outcome.conditional
    if pair == "CA":
        psi = np.einsum("ca,b->cab", g, t)
    elif pair == "CB":
        psi = np.einsum("cb,a->cab", g, t)
    else:
        raise ValueError(f"pair must be 'CA' or 'CB', got {pair!r}")
    psi = psi.reshape(8)
    return psi / np.linalg.norm(psi)


def build_tree(
    params: ChannelParams,
    target: TargetState,
    n: int,
    success_table: Optional[SuccessTable] = None,
) -> AttemptTree:
    """Enumerate every branch of the primary attempt plus ``n`` repeats."""
    if n < 0:
        raise ValueError(f"depth must be non-negative, got {n}")
    if n > MAX_DEPTH:
        raise TreeTooDeep(f"depth {n} exceeds the limit {MAX_DEPTH}")
    channel = build_channel(params)
    tvec = target_logical(target, params.p, params.j)
    root = compose_tripartite(tvec, channel.state)
    tree = AttemptTree(params, tvec, root, n)

    frontier = [((), 1.0, root)]
    for depth in range(n + 1):
        pair = pair_for_depth(depth)
        succ = success_indices(params.m, depth, success_table)
        nxt = []
        for path, prob, state in frontier:
            for o in measure_pair(state, pair, tvec, succ):
                bp = prob * o.probability
                post = None
                if not o.success and depth < n and bp >= ZERO_BRANCH_TOL and o.conditional is not None:
                    post = post_measurement_state(o, GHZ_BASIS[o.index], pair)
                    nxt.append((path + (o.index,), bp, post))
                tree.nodes.append(
                    TreeNode(depth, path + (o.index,), pair, bp, o.probability, o.success,
                             o.fidelity_raw, o.conditional, post)
                )
        frontier = nxt
    return tree


def run_repeated(
    params: ChannelParams,
    target: TargetState,
    n: int,
    success_table: Optional[SuccessTable] = None,
) -> list[CumulativeStats]:
    """Cumulative statistics after the primary attempt and each of ``n`` repeats.

    The result has ``n + 1`` entries indexed by depth: entry 0 is the primary
    attempt, entry k the k-th repeated attempt.
    """
    tree = build_tree(params, target, n, success_table)
    return [tree.stats(d) for d in range(n + 1)]


# -- closed forms ---------------------------------------------------------


def _root_gap(C: float) -> float:
    """sqrt(1 - C^2), clipped against rounding."""
    return math.sqrt(max(0.0, 1.0 - C * C))


def f_av_from_concurrence(C: float, omega: float, m: int, n: int) -> float:
    """Average fidelity after ``n`` repeats as a function of the concurrence.

    Depth 0 is the all-outcome average; depths 1 and 2 accrue success
    branches only.
    """
    if n not in (0, 1, 2):
        raise UnsupportedDepth(f"no closed-form average fidelity for depth {n}")
    cw, sw = math.cos(omega), math.sin(omega)
    if m == 1:
        base = (1.0 + cw * cw + sw * sw) / 4.0, 3.0 / 8.0 * (1.0 + cw * cw)
        return base[0] if n == 0 else (base[1] if n == 1 else 7.0 / 6.0 * base[1])
    lo, hi = math.sqrt(max(0.0, 1.0 - C)), math.sqrt(1.0 + C)
    if n == 0:
        return ((lo + hi * cw) ** 2 + (hi + lo * cw) ** 2 + 2.0 * sw * sw) / 8.0
    f1 = (3.0 * (1.0 + cw * cw) + 2.0 * _root_gap(C) * cw) / 8.0
    if n == 1:
        return f1
    return f1 + ((hi - lo * cw) ** 2 + (lo - hi * cw) ** 2) / 32.0


def f_av_closed(params: ChannelParams, omega: float, n: int) -> float:
    if n not in (0, 1, 2):
        raise UnsupportedDepth(f"no closed-form average fidelity for depth {n}")
    if n == 0 and params.m == 0:
        q = params.q
        cw, sw = math.cos(omega), math.sin(omega)
        return (((q + cw) ** 2 + (1.0 + q * cw) ** 2) / (1.0 + q * q) + sw * sw) / 4.0
    return f_av_from_concurrence(concurrence_analytic(params), omega, params.m, n)


def _odd_success(n: int) -> float:
    return (2.0 ** (n + 1) - 1.0) / 2.0 ** (n + 1)


def p_success_from_concurrence(C: float, omega: float, m: int, n: int) -> float:
    """General-n success probability; the omega term vanishes for odd cats."""
    if n < 0:
        raise ValueError(f"depth must be non-negative, got {n}")
    if m == 1:
        return _odd_success(n)
    return _odd_success(n) + _root_gap(C) * math.cos(omega) / 2.0 ** (n + 1)


def p_success_closed(params: ChannelParams, omega: float, n: int) -> float:
    """Success probability accumulated up to depth ``n`` (0 = primary attempt)."""
    if n < 0:
        raise ValueError(f"depth must be non-negative, got {n}")
    if params.m == 1:
        return _odd_success(n)
    q = params.q
    x = q * math.cos(omega) / (1.0 + q * q)
    if n == 0:
        return 0.5 + x
    if n == 1:
        return (3.0 + 2.0 * x) / 4.0
    if n == 2:
        return (7.0 + 2.0 * x) / 8.0
    if n == 3:
        return 15.0 / 16.0 + x / 8.0
    return p_success_from_concurrence(concurrence_analytic(params), omega, 0, n)


def repetitions_required(p: float, j: float, omega: float) -> float:
    """Number of repetitions ``4(1 + p^2j) / (p^2j + 2 p^j cos w + 1)``."""
    q = overlap_power(float(p), float(j))
    den = q * q + 2.0 * q * math.cos(omega) + 1.0
    if den <= 1e-15:
        raise InfiniteRepetitions(f"success probability vanishes at p={p}, omega={omega}")
    return 4.0 * (1.0 + q * q) / den
