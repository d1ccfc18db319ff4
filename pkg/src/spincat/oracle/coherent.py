"""States written on the nonorthogonal basis {|eta>^(x)2s, |-eta>^(x)2s}.

Inner products go through the Gram matrix [[1, P], [P, 1]] with
P = p**(2s). Nothing here uses the A/B/N coefficient formulas; the logical
basis is rebuilt from its definition as normalized sums and differences.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from ..errors import SingularBasis

__all__ = [
    "CoherentVec",
    "gram",
    "logical_basis_coords",
    "to_coherent",
    "from_coherent",
    "inner",
    "spin_half_coherent",
    "factorized_overlap",
]


def gram(p: float, s: float) -> np.ndarray:
    P = 0.0 if p == 0.0 else float(p) ** (2.0 * s)
    return np.array([[1.0, P], [P, 1.0]])


@dataclass(frozen=True)
class CoherentVec:
    coeffs: np.ndarray
    p: float
    s: float

    @property
    def gram(self) -> np.ndarray:
        return gram(self.p, self.s)

    def norm2(self) -> float:
        c = np.asarray(self.coeffs, dtype=complex)
        return float(np.vdot(c, self.gram @ c).real)


def inner(u: CoherentVec, v: CoherentVec) -> complex:
    """``<u|v>`` through the Gram matrix."""
    return complex(np.vdot(u.coeffs, u.gram @ np.asarray(v.coeffs, dtype=complex)))


def logical_basis_coords(p: float, s: float) -> np.ndarray:
    """Columns: coherent coordinates of the even (|0>) and odd (|1>) vectors."""
    G = gram(p, s)
    even = np.array([1.0, 1.0])
    odd = np.array([1.0, -1.0])
    n_odd2 = odd @ G @ odd
    if n_odd2 <= 1e-300:
        raise SingularBasis("odd logical vector vanishes at p**(2s) == 1")
    return np.column_stack([even / math.sqrt(even @ G @ even), odd / math.sqrt(n_odd2)])


def to_coherent(vec: np.ndarray, p: float, s: float) -> CoherentVec:
    """Logical amplitudes -> coherent coefficients."""
    return CoherentVec(logical_basis_coords(p, s) @ np.asarray(vec, dtype=complex), p, s)


def from_coherent(cv: CoherentVec) -> np.ndarray:
    """Coherent coefficients -> logical amplitudes (inverse of :func:`to_coherent`)."""
    L = logical_basis_coords(cv.p, cv.s)
    return np.linalg.solve(L, np.asarray(cv.coeffs, dtype=complex))


def spin_half_coherent(eta: complex) -> np.ndarray:
    """``|eta>`` on (|down>, |up>)."""
    return np.array([1.0, eta], dtype=complex) / math.sqrt(1.0 + abs(eta) ** 2)


def factorized_overlap(eta: complex, two_j: int) -> complex:
    """``<j,eta|j,-eta>`` from explicit 2j-fold tensor products of spin-1/2 states."""
    plus = reduce(np.kron, [spin_half_coherent(eta)] * two_j)
    minus = reduce(np.kron, [spin_half_coherent(-eta)] * two_j)
    return complex(np.vdot(plus, minus))
