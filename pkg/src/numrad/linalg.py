"""Dense complex matrix primitives.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  :func:`as_matrix`
validates a candidate and returns a read-only copy, which is how the rest of
the package treats operators as immutable values.  Eigen and singular value
decompositions are delegated to LAPACK through ``numpy.linalg``; the
reconstruction contracts are enforced by the test-suite, not re-checked on
every call.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from .errors import DomainError, NoConvergence, NotHermitian, NotPsd

ComplexMatrix = np.ndarray

EPS = np.finfo(float).eps

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10


class HermitianEig(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: ComplexMatrix


class SvdParts(NamedTuple):
    left: ComplexMatrix
    singulars: np.ndarray
    right: ComplexMatrix


def as_matrix(data, *, square: bool = True) -> ComplexMatrix:
    """Return a read-only complex128 copy of ``data``.

    Raises ``ValueError`` for non-2D input, non-finite entries, or (when
    ``square``) a non-square shape.
    """
    m = np.array(data, dtype=np.complex128)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if square and m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has NaN or infinite entries")
    m.setflags(write=False)
    return m


def frozen(m: np.ndarray) -> ComplexMatrix:
    """Mark an internally produced array read-only and return it."""
    m = np.asarray(m, dtype=np.complex128)
    if m.flags.writeable:
        m.setflags(write=False)
    return m


def adjoint(m: ComplexMatrix) -> ComplexMatrix:
    return frozen(np.conj(m).T.copy())


def fro(m: np.ndarray) -> float:
    return float(np.linalg.norm(m, "fro"))


def hermitian_defect(h: ComplexMatrix) -> float:
    return fro(h - np.conj(h).T)


def is_hermitian(h: ComplexMatrix, tol: float = HERMITIAN_TOL) -> bool:
    return h.shape[0] == h.shape[1] and hermitian_defect(h) <= tol * (1.0 + fro(h))


def eig_hermitian(h: ComplexMatrix) -> HermitianEig:
    """Eigen-decomposition of a self-adjoint matrix, eigenvalues ascending."""
    h = np.asarray(h, dtype=np.complex128)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise NotHermitian(f"not square: shape {h.shape}")
    if not is_hermitian(h):
        raise NotHermitian(
            f"||H - H*||_F = {hermitian_defect(h):.3e} exceeds tolerance"
        )
    sym = 0.5 * (h + np.conj(h).T)
    try:
        lam, vec = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return HermitianEig(lam, frozen(vec))


def svd(t: ComplexMatrix) -> SvdParts:
    """Full SVD ``T = U diag(s) V*`` with singular values descending."""
    try:
        u, s, vh = np.linalg.svd(np.asarray(t, dtype=np.complex128))
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return SvdParts(frozen(u), s, frozen(np.conj(vh).T.copy()))


def eig_general(t: ComplexMatrix) -> np.ndarray:
    """Eigenvalues (with multiplicity) of a square matrix."""
    t = np.asarray(t, dtype=np.complex128)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {t.shape}")
    try:
        return np.linalg.eigvals(t)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def _clamped_spectrum(p: ComplexMatrix) -> HermitianEig:
    lam, vec = eig_hermitian(p)
    scale = 1.0 + float(np.max(np.abs(lam), initial=0.0))
    if lam.size and lam[0] < -PSD_TOL * scale:
        raise NotPsd(f"eigenvalue {lam[0]:.3e} below -{PSD_TOL:g}(1+||P||)")
    return HermitianEig(np.maximum(lam, 0.0), vec)


def apply_spectral_function(
    p: ComplexMatrix, f: Callable[[float], float]
) -> ComplexMatrix:
    """Return ``f(P)`` for a positive semidefinite ``P``.

    Eigenvalues within roundoff of zero are clamped to ``0`` before ``f`` is
    applied, so fractional powers never see tiny negative arguments.
    """
    lam, vec = _clamped_spectrum(p)
    fl = np.array([f(float(x)) for x in lam], dtype=float)
    if not np.all(np.isfinite(fl)):
        raise DomainError(f"spectral function produced non-finite values {fl}")
    return frozen((vec * fl) @ np.conj(vec).T)


def psd_power(p: ComplexMatrix, q: float) -> ComplexMatrix:
    """``P**q`` for positive semidefinite ``P``; ``P**0`` is the identity."""
    if q == 0:
        return frozen(np.eye(p.shape[0], dtype=np.complex128))
    lam, vec = _clamped_spectrum(p)
    return frozen((vec * lam**q) @ np.conj(vec).T)
