"""2x2 operator matrices acting on H (+) H."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .linalg import ComplexMatrix, frozen


@dataclass(frozen=True)
class Block2:
    a: ComplexMatrix
    b: ComplexMatrix
    c: ComplexMatrix
    d: ComplexMatrix
    assembled: ComplexMatrix

    @property
    def n(self) -> int:
        return self.a.shape[0]

    def blocks(self) -> tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix, ComplexMatrix]:
        return self.a, self.b, self.c, self.d


def _check(*mats) -> int:
    shapes = {np.shape(m) for m in mats}
    if len(shapes) != 1:
        raise DimensionMismatch(f"blocks have different shapes: {sorted(shapes)}")
    (shape,) = shapes
    if len(shape) != 2 or shape[0] != shape[1]:
        raise DimensionMismatch(f"blocks must be square, got {shape}")
    return shape[0]


def block2(a, b, c, d) -> Block2:
    """Assemble ``[[A, B], [C, D]]``."""
    _check(a, b, c, d)
    a, b, c, d = (frozen(np.array(m, dtype=np.complex128)) for m in (a, b, c, d))
    return Block2(a, b, c, d, frozen(np.block([[a, b], [c, d]])))


def off_diag(a, b) -> Block2:
    """``[[0, A], [B, 0]]``."""
    n = _check(a, b)
    z = np.zeros((n, n), dtype=np.complex128)
    return block2(z, a, b, z)


def direct_sum(a, b) -> Block2:
    """``[[A, 0], [0, B]]``."""
    n = _check(a, b)
    z = np.zeros((n, n), dtype=np.complex128)
    return block2(a, z, z, b)


def split(m: ComplexMatrix) -> Block2:
    """Inverse of :func:`block2` for a ``2n x 2n`` matrix."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
        raise DimensionMismatch(f"cannot split shape {m.shape} into 2x2 blocks")
    n = m.shape[0] // 2
    return Block2(
        frozen(m[:n, :n].copy()),
        frozen(m[:n, n:].copy()),
        frozen(m[n:, :n].copy()),
        frozen(m[n:, n:].copy()),
        frozen(m.copy()),
    )


def swap_unitary(n: int) -> ComplexMatrix:
    """``[[0, I], [I, 0]]``."""
    i = np.eye(n, dtype=np.complex128)
    z = np.zeros_like(i)
    return frozen(np.block([[z, i], [i, z]]))


def rotation_unitary(n: int) -> ComplexMatrix:
    """``[[I, -I], [I, I]] / sqrt(2)``."""
    i = np.eye(n, dtype=np.complex128)
    return frozen(np.block([[i, -i], [i, i]]) / np.sqrt(2.0))
