"""Scalar functionals: operator norm, numerical radius, field of values,
Crawford number, spectral radius.

The numerical radius is computed from the support function of the numerical
range, ``g(theta) = lambda_max(Re(e^{i theta} T))``, whose maximum over the
circle equals ``w(T)`` and whose minimum, when negative, is minus the distance
from the origin to ``W(T)``.  ``g`` is Lipschitz with constant ``||T||`` and
may have several local maxima, so it is sampled on a uniform grid and the
best few grid brackets are polished by golden-section search in lockstep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .decompositions import cartesian, real_part
from .errors import EnclosureTooWide, NegativeEntry
from .linalg import ComplexMatrix, eig_general, eig_hermitian

GRID = 720
HULL_GRID = 1440
N_BRACKETS = 3
REFINE_WIDTH = 1e-12
MAX_REFINE_ITER = 200
INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RadiusResult:
    value: float
    theta_star: float
    witness: np.ndarray
    lower: float
    upper: float


@dataclass(frozen=True)
class FovBoundary:
    points: np.ndarray
    angles: np.ndarray


@dataclass(frozen=True)
class CrawfordResult:
    value: float
    lower: float
    upper: float
    theta_star: float


def op_norm(t: ComplexMatrix) -> float:
    """Largest singular value."""
    return float(np.linalg.norm(np.asarray(t, dtype=np.complex128), 2))


def real_part_extreme(t: ComplexMatrix, theta: float) -> float:
    """``lambda_max(Re(e^{i theta} T))``."""
    return float(eig_hermitian(real_part(t, theta)).eigenvalues[-1])


class _Support:
    """Batched evaluator of ``g(theta)`` for one matrix."""

    def __init__(self, t: ComplexMatrix):
        x, y = cartesian(t)
        self.x = np.asarray(x)
        self.y = np.asarray(y)

    def stack(self, thetas: np.ndarray) -> np.ndarray:
        c = np.cos(thetas)[:, None, None]
        s = np.sin(thetas)[:, None, None]
        return c * self.x - s * self.y

    def values(self, thetas: np.ndarray) -> np.ndarray:
        return np.linalg.eigvalsh(self.stack(thetas))[:, -1]

    def top_vectors(self, thetas: np.ndarray) -> np.ndarray:
        _, vec = np.linalg.eigh(self.stack(thetas))
        return vec[:, :, -1]


def _local_extrema(vals: np.ndarray, k: int) -> np.ndarray:
    """Indices of the ``k`` largest periodic local maxima of ``vals``."""
    left = np.roll(vals, 1)
    right = np.roll(vals, -1)
    peaks = np.flatnonzero((vals >= left) & (vals >= right))
    if peaks.size == 0:
        peaks = np.array([int(np.argmax(vals))])
    order = np.argsort(-vals[peaks], kind="stable")
    return peaks[order[:k]]


def _golden_max(fun, a: np.ndarray, b: np.ndarray, width: float, max_iter: int):
    """Lockstep golden-section maximisation on brackets ``[a_i, b_i]``.

    Returns ``(best_theta, best_value, final_width, converged)`` where the best
    pair is taken over every evaluated point.
    """
    a = a.astype(float).copy()
    b = b.astype(float).copy()
    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    both = fun(np.concatenate([c, d]))
    fc, fd = both[: a.size].copy(), both[a.size :].copy()
    best_val = -np.inf
    best_theta = float("nan")
    for th, fv in ((c, fc), (d, fd)):
        i = int(np.argmax(fv))
        if fv[i] > best_val:
            best_val, best_theta = float(fv[i]), float(th[i])
    it = 0
    while np.max(b - a) > width and it < max_iter:
        go_left = fc > fd
        # shrink toward the better interior point
        b = np.where(go_left, d, b)
        a = np.where(go_left, a, c)
        c_new = np.where(go_left, b - INVPHI * (b - a), d)
        d_new = np.where(go_left, c, a + INVPHI * (b - a))
        fc_new = np.where(go_left, np.nan, fd)
        fd_new = np.where(go_left, fc, np.nan)
        probe = np.where(go_left, c_new, d_new)
        fp = fun(probe)
        fc_new = np.where(go_left, fp, fc_new)
        fd_new = np.where(go_left, fd_new, fp)
        c, d, fc, fd = c_new, d_new, fc_new, fd_new
        i = int(np.argmax(fp))
        if fp[i] > best_val:
            best_val, best_theta = float(fp[i]), float(probe[i])
        it += 1
    final = float(np.max(b - a))
    return best_theta, best_val, final, final <= width


def _maximise(fun, grid: int, n_brackets: int, width: float, max_iter: int):
    thetas = np.arange(grid) * (TWO_PI / grid)
    vals = fun(thetas)
    h = TWO_PI / grid
    idx = _local_extrema(vals, n_brackets)
    best_i = int(np.argmax(vals))
    best_theta, best_val = float(thetas[best_i]), float(vals[best_i])
    th, val, final, ok = _golden_max(fun, thetas[idx] - h, thetas[idx] + h, width, max_iter)
    if val > best_val:
        best_theta, best_val = th, val
    return best_theta % TWO_PI, best_val, final, ok, thetas, vals


def numerical_radius(
    t: ComplexMatrix,
    *,
    grid: int = GRID,
    encl_tol: float | None = None,
    max_iter: int = MAX_REFINE_ITER,
) -> RadiusResult:
    """Numerical radius with maximising angle, witness vector and enclosure.

    >>> round(numerical_radius(np.array([[0, 1], [0, 0]])).value, 12)
    0.5
    """
    t = np.asarray(t, dtype=np.complex128)
    sup = _Support(t)
    norm = op_norm(t)
    theta, val, width, ok = _maximise(sup.values, grid, N_BRACKETS, REFINE_WIDTH, max_iter)[:4]
    upper = val + norm * width
    tol = 1e-9 * (1.0 + norm) if encl_tol is None else encl_tol
    if upper - val > tol:
        raise EnclosureTooWide(
            f"enclosure width {upper - val:.3e} > {tol:.3e} after {max_iter} iterations"
        )
    witness = sup.top_vectors(np.array([theta]))[0]
    value = max(val, 0.0)
    return RadiusResult(value, theta, witness, value, max(upper, 0.0))


def w(t: ComplexMatrix) -> float:
    """Shorthand for ``numerical_radius(t).value``."""
    return numerical_radius(t).value


def fov_boundary(t: ComplexMatrix, k: int) -> FovBoundary:
    """Boundary points of ``W(T)`` in the directions ``e^{i theta_k}``."""
    if k < 3:
        raise ValueError("need at least 3 boundary directions")
    t = np.asarray(t, dtype=np.complex128)
    angles = np.arange(k) * (TWO_PI / k)
    vecs = _Support(t).top_vectors(-angles)
    points = np.einsum("ki,ij,kj->k", np.conj(vecs), t, vecs)
    return FovBoundary(points, angles)


def _polygon_distance(points: np.ndarray) -> float:
    """Distance from 0 to the filled polygon with counter-clockwise ``points``."""
    a = points
    b = np.roll(points, -1)
    e = b - a
    cross = (np.conj(e) * (-a)).imag
    area = 0.5 * float(np.sum((np.conj(a) * b).imag))
    scale = float(np.max(np.abs(points), initial=0.0))
    if area > 1e-14 * (1.0 + scale) ** 2 and np.all(cross >= -1e-15 * (1.0 + scale) ** 2):
        return 0.0
    ee = (np.conj(e) * e).real
    proj = np.where(ee > 0, (np.conj(e) * (-a)).real / np.where(ee > 0, ee, 1.0), 0.0)
    proj = np.clip(proj, 0.0, 1.0)
    return float(np.min(np.abs(a + proj * e)))


def crawford_bounds(t: ComplexMatrix, *, grid: int = HULL_GRID) -> CrawfordResult:
    """``c(T) = min |<Tx, x>|`` bracketed from both sides.

    ``upper`` is the distance from the origin to the hull of sampled boundary
    points (an inner polygon of ``W(T)``); ``lower`` is the refined support
    bound ``max(0, -min g)``.  ``value`` is the lower bound.
    """
    t = np.asarray(t, dtype=np.complex128)
    sup = _Support(t)

    def neg(thetas):
        return -sup.values(thetas)

    theta, val, *_rest, thetas, grid_vals = _maximise(
        neg, grid, N_BRACKETS, REFINE_WIDTH, MAX_REFINE_ITER
    )
    lower = max(val, 0.0)
    # boundary point in direction e^{i phi} is the top vector at angle -phi
    vecs = sup.top_vectors(-thetas)
    points = np.einsum("ki,ij,kj->k", np.conj(vecs), t, vecs)
    upper = _polygon_distance(points)
    return CrawfordResult(lower, lower, max(upper, lower), theta)


def crawford(t: ComplexMatrix) -> float:
    return crawford_bounds(t).value


def spectral_radius(t: ComplexMatrix) -> float:
    ev = eig_general(t)
    return float(np.max(np.abs(ev), initial=0.0))


def w_nonneg_entries(b) -> float:
    """Numerical radius of an entrywise non-negative matrix.

    Equals the spectral radius of the symmetrisation ``(b_ij + b_ji)/2``;
    closed form for 2x2.
    """
    b = np.asarray(b, dtype=float)
    if np.any(b < 0):
        raise NegativeEntry(f"matrix has negative entries: {b.tolist()}")
    if b.shape == (2, 2):
        a, d = b[0, 0], b[1, 1]
        m = b[0, 1] + b[1, 0]
        return float(0.5 * ((a + d) + math.hypot(a - d, m)))
    sym = 0.5 * (b + b.T)
    return float(np.max(np.abs(np.linalg.eigvalsh(sym))))
