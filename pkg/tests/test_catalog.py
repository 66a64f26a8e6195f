"""Hand-checkable instances of the catalog entries and their printed variants."""


import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numrad.catalog import anticommuting_from, buzano_sides, max_real_part_norm, schwarz_refinement
from numrad.harness import SuiteConfig, run_suite
from numrad.radius import w
from numrad.registry import evaluate, get_check, list_checks

from conftest import J, random_complex


def slack(check_id, ops, params=None):
    return evaluate(get_check(check_id), ops, params).scaled_slack


@pytest.mark.parametrize("check", [c.id for c in list_checks() if c.expected == "pass"])
def test_every_pass_check_holds_on_a_few_samples(check):
    reports = run_suite(SuiteConfig(checks=(check,), dims=(2, 3), samples=4, seed=3))
    assert all(r.verdict == "pass" and not r.errors for r in reports)


def test_t31_jordan_equality():
    ev = evaluate(get_check("T3.1"), [J], {"p": 1, "s": 0.5})
    assert ev.lhs == pytest.approx(0.5, abs=1e-12)
    assert ev.rhs == pytest.approx(0.5, abs=1e-12)


def test_l33_identities_on_jordan_block():
    ev = evaluate(get_check("L3.3"), [J])
    assert all(abs(p.lhs - p.rhs) <= 1e-10 for p in ev.parts)


def test_max_real_part_norm_is_radius(rng):
    for n in (2, 3, 5):
        t = random_complex(rng, n)
        assert max_real_part_norm(t) == pytest.approx(w(t), abs=1e-9)


def test_c38_printed_exponents_fail_at_scaled_identity():
    two = 2 * np.eye(2)
    assert slack("C3.8", [two, two], {"p": 1, "s": 0.5}) >= -1e-12
    assert slack("C3.8", [two, two], {"p": 1, "s": 0.5, "literal": True}) < -0.1


def test_t212_printed_min_form_fails_for_unequal_sizes():
    e = np.array([[0, 1], [0, 0]], dtype=complex)
    a, b = 0.1 * e, 2 * e
    assert slack("T2.12", [a, b]) >= -1e-12
    assert slack("T2.12", [a, b], {"literal": True}) < -0.01


def test_c310_printed_constant_fails():
    i = np.eye(2)
    assert slack("C3.10", [i, i], {"p": 3}) >= -1e-12
    assert slack("C3.10", [i, i], {"p": 3, "literal": True}) < -0.1


def test_t47_literal_form_fails():
    # AB is not normal, so ||AB|| exceeds w(AB)
    a = np.array([[1, 1], [0, 1]], dtype=complex) * 0.5
    b = np.eye(2)
    assert slack("T4.7", [a, b], {"n_pow": 1}) >= -1e-12
    assert slack("T4.7", [a, b], {"n_pow": 1, "literal": True}) < 0


def test_block_power_forms_are_homogeneous():
    # the corrected exponents on both sides scale identically
    c = get_check("L4.16/L4.17/T4.18/T4.19/R4.20")
    ops = [0.2 * J, 0.3 * J.T]
    assert evaluate(c, ops, {"r": 2, "nu": 0.5}, seed=1).scaled_slack >= -1e-8
    assert evaluate(c, ops, {"r": 2, "nu": 0.5, "literal": True}, seed=1).scaled_slack < -1e-3


def test_anticommuting_parts(rng):
    for n in (1, 2, 3, 4, 5):
        ba = anticommuting_from(random_complex(rng, n))
        x = (ba + ba.conj().T) / 2
        y = (ba - ba.conj().T) / 2j
        np.testing.assert_allclose(x @ y + y @ x, 0, atol=1e-12)


def _unit_rows(rng, k, n):
    v = rng.standard_normal((k, n)) + 1j * rng.standard_normal((k, n))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1), st.integers(1, 5), st.sampled_from([1.0, 1.5, 2.0, 3.0]))
def test_buzano_vector_forms(seed, n, r):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((16, n)) + 1j * rng.standard_normal((16, n))
    b = rng.standard_normal((16, n)) + 1j * rng.standard_normal((16, n))
    e = _unit_rows(rng, 16, n)
    lhs, rhs = buzano_sides(a, b, e, r)
    assert np.all(lhs <= rhs * (1 + 1e-10) + 1e-12)
    lhs, rhs = schwarz_refinement(a, b, e)
    assert np.all(lhs <= rhs * (1 + 1e-10) + 1e-12)


def test_schwarz_refinement_is_phase_invariant(rng):
    a = rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3))
    b = rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3))
    e = _unit_rows(rng, 4, 3)
    base = schwarz_refinement(a, b, e)
    rot = schwarz_refinement(a * np.exp(0.7j), b * np.exp(-2.1j), e)
    np.testing.assert_allclose(base[0], rot[0], atol=1e-12)
    np.testing.assert_allclose(base[1], rot[1], atol=1e-12)

