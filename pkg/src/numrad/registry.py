"""Executable inequality checks: definitions, parameter validation, evaluation.

A :class:`CheckDef` bundles one or more related inequalities ("parts").  Each
part yields a left- and right-hand side; the slack is ``rhs - lhs`` and the
check holds on an instance when every part's scaled slack is above
``-tol``.  Identity parts compare both sides symmetrically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from . import radius
from .decompositions import abs_power, aluthge
from .errors import AssumptionViolated, ParamOutOfRange, UnknownCheck
from .linalg import ComplexMatrix, as_matrix, eig_hermitian, is_hermitian
from .sampling import unit_vectors

DEFAULT_TOL = 1e-8
VECTORS_PER_INSTANCE = 200


@dataclass(frozen=True)
class ParamSpec:
    name: str
    grid: tuple
    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False
    integer: bool = False

    def validate(self, value) -> float:
        try:
            v = float(value)
        except (TypeError, ValueError):
            raise ParamOutOfRange(f"{self.name}={value!r} is not a number") from None
        if not math.isfinite(v):
            raise ParamOutOfRange(f"{self.name}={value!r} is not finite")
        if self.integer and v != int(v):
            raise ParamOutOfRange(f"{self.name}={value!r} must be an integer")
        low_bad = v < self.lo or (self.lo_open and v == self.lo)
        high_bad = v > self.hi or (self.hi_open and v == self.hi)
        if low_bad or high_bad:
            lb = "(" if self.lo_open else "["
            rb = ")" if self.hi_open else "]"
            raise ParamOutOfRange(f"{self.name}={v} outside {lb}{self.lo}, {self.hi}{rb}")
        return int(v) if self.integer else v

    def describe(self) -> str:
        lb = "(" if self.lo_open else "["
        rb = ")" if self.hi_open else "]"
        return f"{self.name} in {lb}{self.lo}, {self.hi}{rb}, grid {list(self.grid)}"


@dataclass(frozen=True)
class Part:
    name: str
    lhs: float
    rhs: float
    identity: bool = False

    @property
    def slack(self) -> float:
        if self.identity:
            return -abs(self.rhs - self.lhs)
        return self.rhs - self.lhs

    @property
    def scaled(self) -> float:
        """Slack in units of the tolerance band."""
        if self.identity:
            return self.slack / (1.0 + abs(self.rhs))
        return self.slack / max(1.0, abs(self.rhs))


@dataclass(frozen=True)
class Witness:
    """A concrete instance shipped with a check (e.g. a falsifying example)."""

    name: str
    operators: tuple
    params: Mapping


@dataclass(frozen=True)
class CheckDef:
    id: str
    statement: str
    slots: tuple[str, ...]
    params: tuple[ParamSpec, ...]
    kind: str
    expected: str
    anchor: str
    compute: Callable = field(repr=False, compare=False)
    classes: tuple[str, ...] = (
        "general",
        "normal",
        "selfadjoint",
        "positive",
        "unitary",
        "squarezero",
    )
    requires: str | None = None
    literal: str | None = None
    witnesses: tuple[Witness, ...] = ()
    note: str = ""

    def param(self, name: str) -> ParamSpec:
        for p in self.params:
            if p.name == name:
                return p
        raise KeyError(name)

    def catalog_entry(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "operators": list(self.slots),
            "classes": list(self.classes),
            "assumptions": self.requires or "none",
            "params": {p.name: {"grid": list(p.grid), "range": p.describe()} for p in self.params},
            "kind": self.kind,
            "expected": self.expected,
            "anchor": self.anchor,
            "literal_form": self.literal,
            "note": self.note,
        }


@dataclass(frozen=True)
class Evaluation:
    check_id: str
    lhs: float
    rhs: float
    slack: float
    scaled_slack: float
    part: str
    params: Mapping
    seed: int | None
    parts: tuple[Part, ...]

    def holds(self, tol: float = DEFAULT_TOL) -> bool:
        return self.scaled_slack >= -tol


def _key(m: np.ndarray) -> tuple:
    return (m.shape, m.tobytes())


class Ctx:
    """Memoising evaluator for the scalar functionals used by checks."""

    def __init__(self):
        self._memo: dict = {}

    def _cached(self, tag, m, fn, *extra):
        m = np.ascontiguousarray(m, dtype=np.complex128)
        k = (tag, extra, _key(m))
        if k not in self._memo:
            self._memo[k] = fn(m)
        return self._memo[k]

    def w(self, m) -> float:
        return self._cached("w", m, radius.w)

    def norm(self, m) -> float:
        return self._cached("norm", m, radius.op_norm)

    def c(self, m) -> float:
        return self._cached("c", m, radius.crawford)

    def r(self, m) -> float:
        return self._cached("r", m, radius.spectral_radius)

    def absp(self, m, q: float = 1.0) -> np.ndarray:
        """``|M|**q``."""
        return self._cached("abs", m, lambda x: abs_power(x, q), q)

    def absp_star(self, m, q: float = 1.0) -> np.ndarray:
        """``|M*|**q``."""
        return self._cached("abs*", m, lambda x: abs_power(x, q, star=True), q)

    def delta(self, m, s: float) -> np.ndarray:
        return self._cached("delta", m, lambda x: aluthge(x, s), s)


_REGISTRY: dict[str, CheckDef] = {}
_ORDER: list[str] = []
_IDENTITY_IDS: list[str] = []


def register(check: CheckDef, *, identity_suite: bool = False) -> CheckDef:
    if check.id in _REGISTRY:
        raise ValueError(f"duplicate check id {check.id}")
    _REGISTRY[check.id] = check
    (_IDENTITY_IDS if identity_suite else _ORDER).append(check.id)
    return check


def _ensure_loaded():
    if not _ORDER:
        from . import catalog  # noqa: F401  (registers on import)


def list_checks() -> list[CheckDef]:
    """The inequality table in its stable order."""
    _ensure_loaded()
    return [_REGISTRY[i] for i in _ORDER]


def list_identity_checks() -> list[CheckDef]:
    """Block-matrix identities kept outside the inequality table."""
    _ensure_loaded()
    return [_REGISTRY[i] for i in _IDENTITY_IDS]


def get_check(check_id: str) -> CheckDef:
    _ensure_loaded()
    try:
        return _REGISTRY[check_id]
    except KeyError:
        raise UnknownCheck(f"no check named {check_id!r}") from None


def _is_psd(m: np.ndarray) -> bool:
    if not is_hermitian(m):
        return False
    lam = eig_hermitian(m).eigenvalues
    return lam[0] >= -1e-10 * (1.0 + abs(lam[-1]))


def _is_normal(m: np.ndarray) -> bool:
    ms = np.conj(m).T
    nrm = np.linalg.norm(m, 2)
    return np.linalg.norm(m @ ms - ms @ m, "fro") <= 1e-10 * (1.0 + nrm * nrm)


_REQUIREMENTS = {"positive": _is_psd, "normal": _is_normal}


def resolve_params(check: CheckDef, params: Mapping | None) -> dict:
    """Validate ``params`` and fill unspecified ones with the first grid value."""
    params = dict(params or {})
    literal = params.pop("literal", False)
    if isinstance(literal, str):
        literal = literal.strip().lower() in ("1", "true", "yes")
    out = {}
    names = {p.name for p in check.params}
    unknown = set(params) - names
    if unknown:
        raise ParamOutOfRange(f"{check.id} has no parameter(s) {sorted(unknown)}")
    for p in check.params:
        out[p.name] = p.validate(params.get(p.name, p.grid[0]))
    if literal:
        if check.literal is None:
            raise ParamOutOfRange(f"{check.id} has no separate literal form")
        out["literal"] = True
    return out


def evaluate(
    check: CheckDef,
    operators: Sequence,
    params: Mapping | None = None,
    vectors: np.ndarray | None = None,
    *,
    seed: int | None = None,
    ctx: Ctx | None = None,
) -> Evaluation:
    """Evaluate every part of ``check`` on one instance.

    The reported lhs/rhs/slack belong to the part with the smallest scaled
    slack.  Vector-level checks use ``vectors`` (rows, unit norm) or, when
    omitted, ``VECTORS_PER_INSTANCE`` unit vectors drawn from ``seed``.
    """
    if len(operators) != len(check.slots):
        raise AssumptionViolated(
            f"{check.id} takes {len(check.slots)} operators {check.slots}, got {len(operators)}"
        )
    ops = [as_matrix(m) for m in operators]
    dims = {m.shape[0] for m in ops}
    if len(dims) != 1:
        raise AssumptionViolated(f"{check.id}: operators must share one dimension, got {dims}")
    if check.requires:
        test = _REQUIREMENTS[check.requires]
        for name, m in zip(check.slots, ops):
            if not test(m):
                raise AssumptionViolated(f"{check.id}: operator {name} is not {check.requires}")
    prm = resolve_params(check, params)
    if check.kind == "vector":
        if vectors is None:
            rng = np.random.default_rng(0 if seed is None else seed)
            vectors = unit_vectors(rng, VECTORS_PER_INSTANCE, dims.pop())
        else:
            vectors = np.atleast_2d(np.asarray(vectors, dtype=np.complex128))
            norms = np.linalg.norm(vectors, axis=1)
            if not np.allclose(norms, 1.0, atol=1e-12):
                raise AssumptionViolated(f"{check.id}: vectors must be unit vectors")
    parts = tuple(check.compute(ctx or Ctx(), dict(zip(check.slots, ops)), prm, vectors))
    worst = min(parts, key=lambda p: p.scaled)
    return Evaluation(
        check_id=check.id,
        lhs=float(worst.lhs),
        rhs=float(worst.rhs),
        slack=float(worst.slack),
        scaled_slack=float(worst.scaled),
        part=worst.name,
        params=prm,
        seed=seed,
        parts=parts,
    )
