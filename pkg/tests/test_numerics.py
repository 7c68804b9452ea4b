import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from asymclone.numerics import (
    EIG_RECON_TOL,
    NumericalError,
    ValidationError,
    dagger,
    eig_hermitian,
    kron,
    matmul,
)

I2 = np.eye(2)
X = np.array([[0, 1], [1, 0]])
Z = np.array([[1, 0], [0, -1]])

entries = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def test_matmul_identity_and_involution():
    assert np.array_equal(matmul(I2, X), X)
    assert np.array_equal(matmul(X, X), I2)


def test_matmul_hand_expanded():
    a = np.array([[1, 2j, 3], [4, 5, -6j]])
    b = np.array([[7, 8], [9, 10j], [11, 12]])
    # row 0: 1*7 + 2j*9 + 3*11 = 40+18j ; 1*8 + 2j*10j + 3*12 = 24
    # row 1: 4*7 + 5*9 - 6j*11 = 73-66j ; 4*8 + 5*10j - 6j*12 = 32-22j
    expected = np.array([[40 + 18j, 24], [73 - 66j, 32 - 22j]])
    assert np.array_equal(matmul(a, b), expected)


def test_matmul_dimension_mismatch():
    with pytest.raises(ValidationError):
        matmul(np.ones((2, 3)), np.ones((2, 3)))


def test_non_finite_rejected():
    with pytest.raises(ValidationError):
        matmul([[np.nan]], [[1.0]])


def test_kron_examples():
    assert np.array_equal(kron(I2, I2), np.eye(4))
    assert np.array_equal(kron([1, 0], [0, 1]).ravel(), [0, 1, 0, 0])
    ket00 = np.array([1, 0, 0, 0])
    assert np.array_equal(kron(X, Z) @ ket00, [0, 0, 1, 0])


def test_dagger_examples():
    assert np.array_equal(dagger(np.eye(3)), np.eye(3))
    col = np.array([1 + 2j, 3 - 1j])
    assert np.array_equal(dagger(col), [[1 - 2j, 3 + 1j]])


@given(arrays(float, (3, 4), elements=entries), arrays(float, (3, 4), elements=entries))
def test_dagger_involution(re, im):
    a = re + 1j * im
    assert np.array_equal(dagger(dagger(a)), a)


ints = st.integers(-1000, 1000)


@given(
    arrays(np.int64, (2, 2), elements=ints),
    arrays(np.int64, (3, 2), elements=ints),
    arrays(np.int64, (2, 3), elements=ints),
)
def test_kron_associative(a, b, c):
    assert np.array_equal(kron(kron(a, b), c), kron(a, kron(b, c)))


@given(arrays(float, (4, 4), elements=entries), arrays(float, (4, 4), elements=entries))
def test_trace_cyclic(a, b):
    assert abs(np.trace(matmul(a, b)) - np.trace(matmul(b, a))) <= 1e-12 * max(
        1.0, np.abs(a).max() * np.abs(b).max() * 16
    )


def test_eig_examples():
    w, _ = eig_hermitian(np.diag([3.0, 1.0, 2.0]))
    assert np.allclose(w, [1, 2, 3], atol=1e-14)
    w, _ = eig_hermitian(X)
    assert np.allclose(w, [-1, 1], atol=1e-14)
    phi_plus = np.zeros((4, 4))
    phi_plus[np.ix_([0, 3], [0, 3])] = 0.5
    # partial transpose of |Phi+><Phi+| is the swap operator / 2
    pt = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]) / 2
    w, _ = eig_hermitian(pt)
    assert np.allclose(w, [-0.5, 0.5, 0.5, 0.5], atol=1e-14)


def test_eig_rejects_non_hermitian():
    with pytest.raises(ValidationError):
        eig_hermitian(np.array([[0, 1], [0, 0]]))
    with pytest.raises(ValidationError):
        eig_hermitian(np.ones((2, 3)))


def test_eig_reports_missed_residual():
    with pytest.raises(NumericalError):
        eig_hermitian(np.array([[1.0, 0.3], [0.3, 2.0]]), tol=-1.0)


@settings(max_examples=200)
@given(
    st.integers(1, 8).flatmap(
        lambda n: st.tuples(
            arrays(float, (n, n), elements=entries), arrays(float, (n, n), elements=entries)
        )
    )
)
def test_eig_matches_lapack_and_reconstructs(parts):
    re, im = parts
    a = (re + re.T) + 1j * (im - im.T)
    w, v = eig_hermitian(a)
    n = a.shape[0]
    assert np.all(np.diff(w) >= 0)
    assert np.allclose(w, np.linalg.eigvalsh(a), atol=1e-10)
    assert abs(w.sum() - np.trace(a).real) <= 1e-10
    assert np.max(np.abs(a @ v - v * w)) <= EIG_RECON_TOL
    assert np.max(np.abs(v.conj().T @ v - np.eye(n))) <= EIG_RECON_TOL


def test_eig_64_by_64(rng):
    g = rng.normal(size=(64, 64)) + 1j * rng.normal(size=(64, 64))
    a = (g + g.conj().T) / 16
    w, v = eig_hermitian(a)
    assert np.allclose(w, np.linalg.eigvalsh(a), atol=1e-11)
    assert np.max(np.abs(a @ v - v * w)) <= EIG_RECON_TOL


def test_eig_degenerate_spectrum():
    u, _ = np.linalg.qr(np.arange(16).reshape(4, 4) + 1j * np.eye(4))
    a = u @ np.diag([1.0, 1.0, 1.0, -2.0]) @ u.conj().T
    w, v = eig_hermitian(a)
    assert np.allclose(w, [-2, 1, 1, 1], atol=1e-12)
    assert np.allclose(v.conj().T @ v, np.eye(4), atol=1e-12)
