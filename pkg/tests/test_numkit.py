import numpy as np
import pytest

from sjkit.numkit import (
    ConditioningError,
    DimensionError,
    DomainError,
    Tolerance,
    bracket,
    guarded_rsolve,
    hermitian_pd_margin,
    is_hermitian_pd,
    is_symmetric,
    rel_close,
    trace_sigma,
)


def test_trace_identity():
    assert trace_sigma(np.eye(3)) == 3


def test_trace_zero():
    assert trace_sigma(np.zeros((2, 2))) == 0


def test_trace_complex():
    a = np.array([[1 + 1j, 0], [0, 2 - 1j]])
    assert trace_sigma(a) == pytest.approx(3)


def test_trace_rejects_non_square():
    with pytest.raises(DimensionError):
        trace_sigma(np.zeros((2, 3)))


def test_trace_cyclic_property():
    rng = np.random.default_rng(0)
    for _ in range(50):
        n = int(rng.integers(1, 5))
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        b = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        assert abs(trace_sigma(a @ b) - trace_sigma(b @ a)) < 1e-9 * max(1, abs(trace_sigma(a @ b)))


def test_bracket_identity():
    np.testing.assert_allclose(bracket(np.eye(2), np.eye(2)), np.eye(2))


def test_bracket_zero():
    np.testing.assert_allclose(bracket(np.eye(2), np.zeros((2, 2))), np.zeros((2, 2)))


def test_bracket_scalar():
    np.testing.assert_allclose(bracket([[2]], [[3]]), [[18]])


def test_bracket_rejects_mismatch():
    with pytest.raises(DimensionError):
        bracket(np.eye(2), np.zeros((3, 3)))


def test_bracket_transpose_and_symmetry_properties():
    rng = np.random.default_rng(1)
    for _ in range(50):
        k, l = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        a = rng.normal(size=(k, k)) + 1j * rng.normal(size=(k, k))
        b = rng.normal(size=(k, l)) + 1j * rng.normal(size=(k, l))
        np.testing.assert_allclose(bracket(a, b).T, bracket(a.T, b), atol=1e-12)
        s = a + a.T
        res = bracket(s, b)
        np.testing.assert_allclose(res, res.T, atol=1e-12)


def test_is_symmetric_cases():
    assert is_symmetric(np.eye(2))
    assert not is_symmetric(np.array([[0, 1], [-1, 0]]))
    assert is_symmetric(np.array([[1, 2 + 1j], [2 + 1j, 3]]))


def test_is_hermitian_pd_cases():
    assert is_hermitian_pd(np.eye(2))
    assert not is_hermitian_pd(-np.eye(2))
    w = 0.3 * np.eye(2)
    m = np.eye(2) - w @ w.conj()
    assert is_hermitian_pd(m)
    assert hermitian_pd_margin(m) == pytest.approx(0.91)


def test_pd_congruence_invariance():
    rng = np.random.default_rng(2)
    for _ in range(30):
        n = int(rng.integers(1, 4))
        r = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        m = r.conj().T @ r + 0.5 * np.eye(n)
        s = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) + np.eye(n)
        if abs(np.linalg.det(s)) < 1e-3:
            continue
        assert is_hermitian_pd(m)
        assert is_hermitian_pd(s.conj().T @ m @ s)


def test_rel_close_cases():
    i = np.eye(2)
    assert rel_close(i, i, 1e-9)
    assert not rel_close(i, 2 * i, 1e-9)
    assert rel_close(i, i + 1e-12 * np.ones((2, 2)), 1e-9)


def test_rel_close_rejects_shape_mismatch():
    with pytest.raises(DimensionError):
        rel_close(np.eye(2), np.eye(3), 1e-9)


def test_tolerance_requires_positive_fields():
    with pytest.raises(DomainError):
        Tolerance(algebraic_rel=0.0)


def test_guarded_solve_raises_on_ill_conditioning():
    den = np.diag([1e13, 1.0]).astype(complex)
    with pytest.raises(ConditioningError):
        guarded_rsolve(np.eye(2), den)
