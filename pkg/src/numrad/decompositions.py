"""Absolute value, polar and Cartesian decompositions, (s,t)-Aluthge transform."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import EPS, ComplexMatrix, adjoint, frozen, svd


class PolarParts(NamedTuple):
    isometry: ComplexMatrix
    modulus: ComplexMatrix


class CartesianParts(NamedTuple):
    real: ComplexMatrix
    imag: ComplexMatrix


@dataclass(frozen=True)
class AluthgeParams:
    s: float
    t: float

    def __post_init__(self):
        if not (0.0 <= self.s <= 1.0 and 0.0 <= self.t <= 1.0):
            raise ValueError(f"s, t must lie in [0, 1], got {self.s}, {self.t}")
        if abs(self.s + self.t - 1.0) > 1e-12:
            raise ValueError(f"s + t must equal 1, got {self.s + self.t}")

    @classmethod
    def from_s(cls, s: float) -> "AluthgeParams":
        return cls(float(s), 1.0 - float(s))


def numerical_rank_singulars(sigma: np.ndarray, n: int) -> np.ndarray:
    """Singular values with those at or below ``n * eps * sigma_1`` set to 0."""
    if sigma.size == 0:
        return sigma
    tol = n * EPS * sigma[0]
    return np.where(sigma > tol, sigma, 0.0)


def _power_of_singulars(sigma: np.ndarray, q: float) -> np.ndarray:
    if q == 0:
        return np.ones_like(sigma)
    return sigma**q


def abs_power(t: ComplexMatrix, q: float = 1.0, *, star: bool = False) -> ComplexMatrix:
    """``|T|**q`` (or ``|T*|**q`` when ``star``) through the SVD of ``T``.

    Singular values below numerical rank are exact zeros, so small fractional
    powers do not inflate roundoff in the kernel.  ``q == 0`` gives the
    identity.
    """
    n = t.shape[0]
    u, sigma, v = svd(t)
    sig = _power_of_singulars(numerical_rank_singulars(sigma, n), q)
    basis = u if star else v
    return frozen((basis * sig) @ np.conj(basis).T)


def absolute_value(t: ComplexMatrix) -> ComplexMatrix:
    """``|T| = (T*T)**(1/2)``."""
    return abs_power(t, 1.0)


def polar(t: ComplexMatrix) -> PolarParts:
    """Polar decomposition ``T = U|T|`` with ``ker U = ker |T|``.

    >>> parts = polar(np.array([[0, 1], [0, 0]]))
    >>> np.allclose(parts.isometry, [[0, 1], [0, 0]])
    True
    """
    t = np.asarray(t, dtype=np.complex128)
    n = t.shape[0]
    w, sigma, v = svd(t)
    sig = numerical_rank_singulars(sigma, n)
    keep = (sig > 0).astype(float)
    iso = (w * keep) @ np.conj(v).T
    mod = (v * sig) @ np.conj(v).T
    return PolarParts(frozen(iso), frozen(mod))


def cartesian(t: ComplexMatrix) -> CartesianParts:
    """``T = X + iY`` with ``X = (T+T*)/2`` and ``Y = (T-T*)/(2i)``."""
    t = np.asarray(t, dtype=np.complex128)
    ts = np.conj(t).T
    return CartesianParts(frozen((t + ts) / 2), frozen((t - ts) / 2j))


def real_part(t: ComplexMatrix, theta: float = 0.0) -> ComplexMatrix:
    """Self-adjoint part of ``e^{i theta} T``."""
    z = np.exp(1j * theta) * np.asarray(t, dtype=np.complex128)
    return frozen((z + np.conj(z).T) / 2)


def aluthge(t: ComplexMatrix, p: AluthgeParams | float) -> ComplexMatrix:
    """(s,t)-Aluthge transform ``|T|^s U |T|^t``.

    A bare float is read as ``s`` with ``t = 1 - s``.
    """
    if not isinstance(p, AluthgeParams):
        p = AluthgeParams.from_s(p)
    t = np.asarray(t, dtype=np.complex128)
    n = t.shape[0]
    w, sigma, v = svd(t)
    sig = numerical_rank_singulars(sigma, n)
    keep = (sig > 0).astype(float)
    iso = (w * keep) @ np.conj(v).T
    left = (v * _power_of_singulars(sig, p.s)) @ np.conj(v).T
    right = (v * _power_of_singulars(sig, p.t)) @ np.conj(v).T
    return frozen(left @ iso @ right)


__all__ = [
    "AluthgeParams",
    "CartesianParts",
    "PolarParts",
    "abs_power",
    "absolute_value",
    "adjoint",
    "aluthge",
    "cartesian",
    "numerical_rank_singulars",
    "polar",
    "real_part",
]
