import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numrad.errors import EnclosureTooWide, NegativeEntry
from numrad.linalg import adjoint
from numrad.radius import (
    crawford,
    crawford_bounds,
    fov_boundary,
    numerical_radius,
    op_norm,
    real_part_extreme,
    spectral_radius,
    w,
    w_nonneg_entries,
)
from numrad.sampling import SampleSpec, sample_operator

from conftest import J, random_complex


def grid_oracle(t, k=100_000, chunk=10_000):
    """max over k uniform angles of lambda_max(Re(e^{i theta} T))."""
    best = -np.inf
    for start in range(0, k, chunk):
        th = (np.arange(start, min(start + chunk, k)) * (2 * np.pi / k))[:, None, None]
        z = np.exp(1j * th)
        best = max(best, np.linalg.eigvalsh((z * t + np.conj(z) * adjoint(t)) / 2)[:, -1].max())
    return best


def test_op_norm_examples(rng):
    assert op_norm(np.array([[0, 2], [0, 0]])) == pytest.approx(2.0)
    assert op_norm(sample_operator(SampleSpec("unitary", 4, 1))) == pytest.approx(1.0, abs=1e-12)
    t = random_complex(rng, 5)
    assert op_norm(t) == pytest.approx(math.sqrt(np.linalg.eigvalsh(adjoint(t) @ t)[-1]), abs=1e-10)


def test_real_part_extreme_examples(rng):
    g = random_complex(rng, 4)
    h = (g + adjoint(g)) / 2
    assert real_part_extreme(h, 0.0) == pytest.approx(np.linalg.eigvalsh(h)[-1], abs=1e-12)
    for th in (0.0, 0.3, 2.0, 5.5):
        assert real_part_extreme(J, th) == pytest.approx(0.5, abs=1e-14)
    t = random_complex(rng, 3)
    assert real_part_extreme(3.5 * t, 1.1) == pytest.approx(3.5 * real_part_extreme(t, 1.1), rel=1e-12)


def test_numerical_radius_examples():
    assert w(J) == pytest.approx(0.5, abs=1e-12)
    assert w(np.diag([-2.0, 1.0])) == pytest.approx(2.0, abs=1e-12)


def test_numerical_radius_result_invariants(rng):
    for n in (1, 2, 3, 5, 8):
        t = random_complex(rng, n)
        res = numerical_radius(t)
        assert res.lower <= res.value <= res.upper
        assert res.upper - res.lower <= 1e-9 * (1 + op_norm(t))
        assert 0 <= res.theta_star < 2 * np.pi
        x = res.witness
        assert np.linalg.norm(x) == pytest.approx(1.0, abs=1e-12)
        assert abs(np.vdot(x, t @ x)) >= res.lower - 1e-12


def test_numerical_radius_matches_grid_oracle(rng):
    for n in (2, 3, 4, 6):
        for _ in range(3):
            t = random_complex(rng, n)
            assert abs(w(t) - grid_oracle(t)) <= 1e-6


def test_enclosure_too_wide_is_raised():
    with pytest.raises(EnclosureTooWide):
        numerical_radius(np.array([[1, 2j], [0.3, -1]]), max_iter=2)


def test_radius_of_adjoint_and_unitary_conjugate(rng):
    for _ in range(10):
        t = random_complex(rng, 4)
        u = sample_operator(SampleSpec("unitary", 4, int(rng.integers(1 << 30))))
        assert w(adjoint(t)) == pytest.approx(w(t), abs=1e-9)
        assert w(adjoint(u) @ t @ u) == pytest.approx(w(t), abs=1e-8)


@pytest.mark.parametrize("op_class", ["normal", "selfadjoint", "positive", "unitary"])
def test_normal_radius_equals_norm_and_spectral_radius(op_class):
    for seed in range(10):
        t = sample_operator(SampleSpec(op_class, 4, seed))
        assert w(t) == pytest.approx(op_norm(t), abs=1e-8)
        assert spectral_radius(t) == pytest.approx(op_norm(t), abs=1e-8)


def test_square_zero_radius_is_half_norm():
    for seed in range(10):
        t = sample_operator(SampleSpec("squarezero", 6, seed))
        assert w(t) == pytest.approx(op_norm(t) / 2, abs=1e-8)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 6))
def test_radius_between_half_norm_and_norm(seed, n):
    t = random_complex(np.random.default_rng(seed), n)
    nrm = op_norm(t)
    v = w(t)
    assert nrm / 2 - 1e-8 * max(1, v) <= v <= nrm + 1e-8 * max(1, nrm)


def test_fov_boundary_normal_triangle():
    t = np.diag([1, 1j, -1])
    pts = fov_boundary(t, 90).points
    # inside the triangle with vertices 1, i, -1: im >= 0 and |re| + im <= 1
    assert np.all(pts.imag >= -1e-10)
    assert np.all(np.abs(pts.real) + pts.imag <= 1 + 1e-10)


def test_fov_boundary_jordan_circle():
    fb = fov_boundary(J, 64)
    np.testing.assert_allclose(np.abs(fb.points), 0.5, atol=1e-9)
    assert len(fb.angles) == 64


def test_fov_boundary_points_inside_radius(rng):
    t = random_complex(rng, 5)
    assert np.all(np.abs(fov_boundary(t, 200).points) <= w(t) + 1e-9)
    with pytest.raises(ValueError):
        fov_boundary(t, 2)


def test_crawford_examples():
    assert crawford(np.eye(3)) == pytest.approx(1.0, abs=1e-12)
    assert crawford(np.diag([1.0, -1.0])) == pytest.approx(0.0, abs=1e-12)
    assert crawford(np.diag([1.0, 2.0])) == pytest.approx(1.0, abs=1e-12)


def test_crawford_bounds_and_invariance(rng):
    for _ in range(10):
        t = random_complex(rng, 3) + 3 * np.exp(1j * rng.uniform(0, 6)) * np.eye(3)
        cb = crawford_bounds(t)
        assert cb.lower <= cb.upper <= cb.lower + 1e-4
        assert cb.value <= w(t)
        u = sample_operator(SampleSpec("unitary", 3, int(rng.integers(1 << 30))))
        assert crawford(adjoint(u) @ t @ u) == pytest.approx(cb.value, abs=1e-7)


def sampled_min(t, rng, count):
    n = t.shape[0]
    x = rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    vals = np.abs(np.einsum("ki,ij,kj->k", np.conj(x), t, x))
    return vals, x


def polished_min(t, rng, count=20_000, starts=8):
    """Sampled minimum of |<Tx,x>| refined by Nelder-Mead from the best samples."""
    from scipy.optimize import minimize

    n = t.shape[0]
    vals, x = sampled_min(t, rng, count)

    def f(v):
        z = v[:n] + 1j * v[n:]
        z = z / np.linalg.norm(z)
        return abs(np.vdot(z, t @ z))

    best = vals.min()
    for i in np.argsort(vals)[:starts]:
        v0 = np.concatenate([x[i].real, x[i].imag])
        res = minimize(f, v0, method="Nelder-Mead", options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 20_000})
        best = min(best, res.fun)
    return best


def test_crawford_against_sampled_vectors_2x2(rng):
    for shift in (0.0, 1.5, 3.0):
        t = random_complex(rng, 2) + shift * np.eye(2)
        vals, _ = sampled_min(t, rng, 200_000)
        c = crawford(t)
        assert vals.min() - 1e-3 <= c <= vals.min() + 1e-6


def test_crawford_against_polished_minimum(rng):
    for n in (3, 4):
        t = random_complex(rng, n) + 2.5 * np.eye(n)
        ref = polished_min(t, rng)
        assert crawford(t) == pytest.approx(ref, abs=1e-7)


def test_spectral_radius_examples():
    assert spectral_radius(np.diag([2.0, -3.0])) == pytest.approx(3.0)
    assert spectral_radius(J) == pytest.approx(0.0, abs=1e-12)


@given(st.lists(st.floats(0, 10), min_size=4, max_size=4))
def test_spectral_radius_nonneg_two_by_two(vals):
    a, b, c, d = vals
    closed = ((a + d) + math.sqrt((a - d) ** 2 + 4 * b * c)) / 2
    assert spectral_radius(np.array([[a, b], [c, d]])) == pytest.approx(closed, abs=1e-10 * (1 + closed))


def test_w_nonneg_entries_examples():
    assert w_nonneg_entries([[0, 1], [0, 0]]) == pytest.approx(0.5)
    assert w_nonneg_entries(np.diag([0.3, 2.0])) == pytest.approx(2.0)
    with pytest.raises(NegativeEntry):
        w_nonneg_entries([[0, -1], [0, 0]])


@settings(max_examples=30, deadline=None)
@given(st.lists(st.floats(0, 5), min_size=4, max_size=4))
def test_w_nonneg_entries_matches_numerical_radius(vals):
    b = np.array(vals).reshape(2, 2)
    assert w_nonneg_entries(b) == pytest.approx(w(b), abs=1e-9)
