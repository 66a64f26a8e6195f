import numpy as np
import pytest

from numrad.errors import BadDim
from numrad.linalg import adjoint
from numrad.radius import op_norm
from numrad.sampling import CLASSES, SCALE_MAX, SampleSpec, admissible, build, draw_generators, sample_operator, unit_vectors


def test_selfadjoint_example():
    a = sample_operator(SampleSpec("selfadjoint", 4, 42))
    assert np.max(np.abs(a - adjoint(a))) <= 1e-15


def test_squarezero_is_exact():
    a = sample_operator(SampleSpec("squarezero", 4, 7))
    assert not (a @ a).any()


@pytest.mark.parametrize("op_class", CLASSES)
def test_same_spec_same_matrix(op_class):
    spec = SampleSpec(op_class, 4, 123)
    np.testing.assert_array_equal(sample_operator(spec), sample_operator(spec))


def test_squarezero_needs_even_dim():
    with pytest.raises(BadDim):
        SampleSpec("squarezero", 3, 0)
    with pytest.raises(BadDim):
        SampleSpec("general", 0, 0)
    assert not admissible("squarezero", 5)
    assert admissible("squarezero", 6)


@pytest.mark.parametrize("seed", range(20))
def test_class_properties(seed):
    n = 4
    ops = {c: sample_operator(SampleSpec(c, n, seed)) for c in CLASSES}
    for c, a in ops.items():
        assert op_norm(a) <= SCALE_MAX + 1e-12
    u = ops["unitary"]
    np.testing.assert_allclose(adjoint(u) @ u, np.eye(n), atol=1e-12)
    m = ops["normal"]
    np.testing.assert_allclose(m @ adjoint(m), adjoint(m) @ m, atol=1e-12)
    p = ops["positive"]
    np.testing.assert_array_equal(p, adjoint(p))
    assert np.linalg.eigvalsh(p).min() >= -1e-12


def test_build_is_deterministic_in_generators():
    rng = np.random.default_rng(5)
    gens = draw_generators("normal", 3, rng)
    np.testing.assert_array_equal(build("normal", 3, gens), build("normal", 3, gens))


def test_unit_vectors():
    v = unit_vectors(np.random.default_rng(0), 50, 3)
    assert v.shape == (50, 3)
    np.testing.assert_allclose(np.linalg.norm(v, axis=1), 1.0, atol=1e-14)
