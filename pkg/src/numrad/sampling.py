"""Seeded random operators from the classes the inequalities talk about.

Every operator is built from a dictionary of real "generator" arrays so the
tightness search can perturb generators and rebuild while staying inside the
class.  Samples are rescaled to an operator norm drawn uniformly from
``[SCALE_MIN, SCALE_MAX]``; unitaries keep norm 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadDim
from .linalg import ComplexMatrix, frozen

CLASSES = ("general", "normal", "selfadjoint", "positive", "unitary", "squarezero")
SCALE_MIN = 0.1
SCALE_MAX = 2.0


@dataclass(frozen=True)
class SampleSpec:
    op_class: str
    dim: int
    seed: int

    def __post_init__(self):
        if self.op_class not in CLASSES:
            raise ValueError(f"unknown operator class {self.op_class!r}")
        if self.dim < 1:
            raise BadDim(f"dim must be >= 1, got {self.dim}")
        if self.op_class == "squarezero" and self.dim % 2:
            raise BadDim("squarezero samples need an even dimension")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def admissible(op_class: str, dim: int) -> bool:
    return not (op_class == "squarezero" and dim % 2)


def draw_generators(op_class: str, dim: int, rng: np.random.Generator) -> dict:
    """Real generator arrays for one operator of ``op_class``."""
    if not admissible(op_class, dim):
        raise BadDim(f"{op_class} is not available in dimension {dim}")
    m = dim // 2 if op_class == "squarezero" else dim
    gens = {"g": rng.standard_normal((2, m, m))}
    if op_class == "normal":
        gens["z"] = rng.standard_normal((2, dim))
    gens["scale"] = np.array([rng.uniform(SCALE_MIN, SCALE_MAX)])
    return gens


def _cplx(a: np.ndarray) -> np.ndarray:
    return a[0] + 1j * a[1]


def _haar_q(g: np.ndarray) -> np.ndarray:
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    ph = np.where(np.abs(d) > 0, d / np.where(np.abs(d) > 0, np.abs(d), 1.0), 1.0)
    return q * ph


def _rescale(m: np.ndarray, scale: float) -> np.ndarray:
    nrm = np.linalg.norm(m, 2)
    return m if nrm == 0 else m * (scale / nrm)


def build(op_class: str, dim: int, gens: dict) -> ComplexMatrix:
    """Operator of ``op_class`` from generator arrays (deterministic)."""
    g = _cplx(gens["g"])
    scale = float(abs(gens["scale"][0]))
    if op_class == "general":
        m = _rescale(g, scale)
    elif op_class == "selfadjoint":
        m = _rescale((g + np.conj(g).T) / 2, scale)
    elif op_class == "positive":
        m = _rescale(np.conj(g).T @ g, scale)
        m = (m + np.conj(m).T) / 2
    elif op_class == "unitary":
        m = _haar_q(g)
    elif op_class == "normal":
        q = _haar_q(g)
        z = _cplx(gens["z"])
        zmax = np.max(np.abs(z))
        if zmax > 0:
            z = z * (scale / zmax)
        m = (q * z) @ np.conj(q).T
    elif op_class == "squarezero":
        k = dim // 2
        m = np.zeros((dim, dim), dtype=np.complex128)
        m[:k, k:] = _rescale(g, scale)
    else:
        raise ValueError(f"unknown operator class {op_class!r}")
    return frozen(np.array(m, dtype=np.complex128))


def sample_operator(spec: SampleSpec) -> ComplexMatrix:
    rng = np.random.default_rng(spec.seed)
    return build(spec.op_class, spec.dim, draw_generators(spec.op_class, spec.dim, rng))


def unit_vectors(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    """``count`` complex unit vectors of length ``dim`` (rows)."""
    v = rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))
    return v / np.linalg.norm(v, axis=1, keepdims=True)
