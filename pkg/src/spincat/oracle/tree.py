"""Brute-force measurement tree in the coherent basis.

Independent of ``spincat.engine`` and ``spincat.protocol``: states are
8-component coherent coordinates with the metric G (x) G (x) G, and each
GHZ outcome is an explicit 8 x 8 projector. Only the parameter containers
from ``spincat.core`` are shared.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from ..core import ChannelParams, TargetState
from ..errors import DegenerateCat, InvalidParams, TreeTooDeep
from .coherent import gram, logical_basis_coords

__all__ = ["OracleBranch", "OracleStats", "OracleResult", "oracle_tree", "oracle_concurrence"]

_MAX_DEPTH = 12
_PRUNE = 1e-15
# Success sets: even cats succeed on GHZ_0/GHZ_3, odd cats on GHZ_1/GHZ_2, at every depth.
_SUCCESS = {0: (0, 3), 1: (1, 2)}

# Coordinate permutation exchanging parties A and B in C (x) A (x) B.
_SWAP_AB = np.zeros((8, 8))
for _c in range(2):
    for _a in range(2):
        for _b in range(2):
            _SWAP_AB[4 * _c + 2 * _b + _a, 4 * _c + 2 * _a + _b] = 1.0


@dataclass(frozen=True)
class OracleBranch:
    path: tuple[int, ...]
    pair: str
    probability: float
    conditional_probability: float
    fidelity: float
    success: bool

    @property
    def depth(self) -> int:
        return len(self.path) - 1

    @property
    def label(self) -> str:
        return "".join(map(str, self.path))


@dataclass(frozen=True)
class OracleStats:
    depth: int
    p_success: float
    f_av_all: float
    f_av_accrued: float
    p_failure_live: float = 0.0


@dataclass
class OracleResult:
    stats: list[OracleStats]
    branches: list[OracleBranch] = field(default_factory=list)

    def branch(self, label: str) -> OracleBranch:
        for b in self.branches:
            if b.label == label:
                return b
        raise KeyError(label)


def _channel_coords(params: ChannelParams, G2: np.ndarray) -> np.ndarray:
    phase = np.exp(1j * math.pi * params.m)
    v = np.array([1.0, 0.0, 0.0, phase], dtype=complex)
    n2 = float(np.vdot(v, G2 @ v).real)
    if n2 <= 1e-14:
        raise DegenerateCat("cat state has zero norm")
    return v / math.sqrt(n2)


def oracle_concurrence(params: ChannelParams) -> float:
    """Concurrence from the purity of Alice's reduced state (Gram square root)."""
    G = gram(params.p, params.j / 2.0)
    G2 = np.kron(G, G)
    v = _channel_coords(params, G2)
    lam, U = np.linalg.eigh(G)
    W = U @ np.diag(np.sqrt(np.clip(lam, 0.0, None))) @ U.T
    M = (np.kron(W, W) @ v).reshape(2, 2)
    rho = M @ M.conj().T
    purity = float(np.trace(rho @ rho).real)
    return math.sqrt(max(0.0, 2.0 * (1.0 - purity)))


def _target_coords(target: TargetState, p: float, s: float, G: np.ndarray) -> np.ndarray:
    if target.a is not None:
        t = np.array([target.a, target.b], dtype=complex)
    else:
        half = target.omega / 2.0
        t = logical_basis_coords(p, s) @ np.array([math.cos(half), math.sin(half)], dtype=complex)
    return t / math.sqrt(float(np.vdot(t, G @ t).real))


def _ghz_coords(p: float, s: float) -> list[np.ndarray]:
    L = logical_basis_coords(p, s)
    k0, k1 = L[:, 0].astype(complex), L[:, 1].astype(complex)
    r = 1.0 / math.sqrt(2.0)
    return [
        r * (np.kron(k0, k0) + np.kron(k1, k1)),
        r * (np.kron(k0, k1) + np.kron(k1, k0)),
        r * (np.kron(k0, k1) - np.kron(k1, k0)),
        r * (np.kron(k0, k0) - np.kron(k1, k1)),
    ]


def oracle_tree(params: ChannelParams, target: TargetState, n: int) -> OracleResult:
    """Exact enumeration of the repeated protocol up to depth ``n``."""
    if params.m == 1 and params.p == 1.0:
        raise DegenerateCat("odd cat state is undefined at p == 1")
    if not float(params.j).is_integer():
        raise InvalidParams(f"state construction needs integer j, got {params.j}")
    if n < 0:
        raise ValueError(f"depth must be non-negative, got {n}")
    if n > _MAX_DEPTH:
        raise TreeTooDeep(f"depth {n} exceeds the limit {_MAX_DEPTH}")
    s = params.j / 2.0
    G = gram(params.p, s)
    G2 = np.kron(G, G)
    G3 = reduce(np.kron, [G, G, G])
    tau = _target_coords(target, params.p, s, G)
    psi0 = np.kron(tau, _channel_coords(params, G2))

    ghz = _ghz_coords(params.p, s)
    proj_ca = [np.kron(np.outer(g, g.conj()) @ G2, np.eye(2)) for g in ghz]
    proj_cb = [_SWAP_AB @ P @ _SWAP_AB for P in proj_ca]
    success = _SUCCESS[params.m]

    def remaining(vec: np.ndarray, g: np.ndarray, pair: str) -> np.ndarray:
        if pair == "CB":
            vec = _SWAP_AB @ vec
        return (g.conj() @ G2) @ vec.reshape(4, 2)

    def fid(t: np.ndarray) -> float:
        num = abs(np.vdot(t, G @ tau)) ** 2
        return float(num / (np.vdot(t, G @ t).real * np.vdot(tau, G @ tau).real))

    branches: list[OracleBranch] = []
    frontier = [((), 1.0, psi0)]
    for depth in range(n + 1):
        pair = "CA" if depth % 2 == 0 else "CB"
        projectors = proj_ca if pair == "CA" else proj_cb
        nxt = []
        for path, prob, psi in frontier:
            for i, P in enumerate(projectors):
                out = P @ psi
                cp = float(np.vdot(out, G3 @ out).real)
                ok = i in success
                f = fid(remaining(psi, ghz[i], pair)) if cp >= _PRUNE else 0.0
                branches.append(OracleBranch(path + (i,), pair, prob * cp, cp, f, ok))
                if not ok and depth < n and prob * cp >= _PRUNE:
                    nxt.append((path + (i,), prob * cp, out / math.sqrt(cp)))
        frontier = nxt

    stats = []
    for d in range(n + 1):
        done = [b for b in branches if b.success and b.depth <= d]
        live = [b for b in branches if not b.success and b.depth == d]
        accrued = math.fsum(b.probability * b.fidelity for b in done)
        stats.append(
            OracleStats(
                d,
                math.fsum(b.probability for b in done),
                accrued + math.fsum(b.probability * b.fidelity for b in live),
                accrued,
                math.fsum(b.probability for b in live),
            )
        )
    return OracleResult(stats, branches)
