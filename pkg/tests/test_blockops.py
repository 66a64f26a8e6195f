import numpy as np
import pytest

from numrad.blockops import block2, direct_sum, off_diag, rotation_unitary, split, swap_unitary
from numrad.errors import DimensionMismatch
from numrad.linalg import adjoint
from numrad.radius import w

from conftest import random_complex

THETAS = (0.0, np.pi / 3, np.pi)


def test_block2_identity_and_roundtrip(rng):
    i, z = np.eye(3), np.zeros((3, 3))
    np.testing.assert_array_equal(block2(i, z, z, i).assembled, np.eye(6))
    a, b, c, d = (random_complex(rng, 3) for _ in range(4))
    blk = block2(a, b, c, d)
    for got, want in zip(split(blk.assembled).blocks(), (a, b, c, d)):
        np.testing.assert_array_equal(got, want)
    assert blk.n == 3


def test_corner_block_radius():
    assert w(block2([[0]], [[1]], [[0]], [[0]]).assembled) == pytest.approx(0.5, abs=1e-12)


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        block2(np.eye(2), np.eye(2), np.eye(3), np.eye(2))
    with pytest.raises(DimensionMismatch):
        off_diag(np.eye(2), np.eye(3))
    with pytest.raises(DimensionMismatch):
        direct_sum(np.ones((2, 3)), np.ones((2, 3)))
    with pytest.raises(DimensionMismatch):
        split(np.eye(3))


def test_off_diag_identities(rng):
    for _ in range(10):
        a, b = random_complex(rng, 3), random_complex(rng, 3)
        assert w(off_diag(b, b).assembled) == pytest.approx(w(b), abs=1e-8)
        assert w(off_diag(a, b).assembled) == pytest.approx(w(off_diag(b, a).assembled), abs=1e-8)
        base = w(off_diag(a, b).assembled)
        for th in THETAS:
            assert w(off_diag(a, np.exp(1j * th) * b).assembled) == pytest.approx(base, abs=1e-8)


def test_direct_sum_radius(rng):
    t, s = random_complex(rng, 4), random_complex(rng, 4)
    assert w(direct_sum(t, s).assembled) == pytest.approx(max(w(t), w(s)), abs=1e-8)
    assert w(direct_sum(np.zeros((2, 2)), np.zeros((2, 2))).assembled) == 0.0
    assert w(direct_sum(t, t).assembled) == pytest.approx(w(t), abs=1e-8)


def test_symmetric_block_radius(rng):
    for _ in range(10):
        t, s = random_complex(rng, 3), random_complex(rng, 3)
        assert w(block2(t, s, s, t).assembled) == pytest.approx(max(w(t - s), w(t + s)), abs=1e-8)


def test_off_diag_square_is_direct_sum(rng):
    a, b = random_complex(rng, 4), random_complex(rng, 4)
    m = off_diag(a, b).assembled
    np.testing.assert_array_equal(m @ m, direct_sum(a @ b, b @ a).assembled)


def test_conjugation_unitaries(rng):
    n = 3
    wsw, rot = swap_unitary(n), rotation_unitary(n)
    np.testing.assert_allclose(adjoint(wsw) @ wsw, np.eye(2 * n), atol=1e-15)
    np.testing.assert_allclose(adjoint(rot) @ rot, np.eye(2 * n), atol=1e-15)
    a, b = random_complex(rng, n), random_complex(rng, n)
    # swapping exchanges the off-diagonal blocks
    np.testing.assert_array_equal(wsw @ off_diag(a, b).assembled @ wsw, off_diag(b, a).assembled)
    # the rotation block-diagonalises [[T, S], [S, T]]
    conj = adjoint(rot) @ block2(a, b, b, a).assembled @ rot
    np.testing.assert_allclose(conj, direct_sum(a + b, a - b).assembled, atol=1e-14)


def test_blocks_are_read_only(rng):
    blk = block2(*(random_complex(rng, 2) for _ in range(4)))
    with pytest.raises(ValueError):
        blk.assembled[0, 0] = 1
