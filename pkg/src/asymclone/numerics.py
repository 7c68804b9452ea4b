"""Dense complex linear algebra kernel.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Storage and the
elementary products come from numpy; the Hermitian eigensolver is a cyclic
complex Jacobi iteration written here, which is deterministic and more than
fast enough for the <= 64x64 matrices this package works with.

Basis ordering: qubit 0 is the most significant bit of a computational-basis
index, which is what ``np.kron`` produces when factors are listed left to right.
"""

from __future__ import annotations

import math

import numpy as np

HERMITICITY_TOL = 1e-10
EIG_RECON_TOL = 1e-9
EQUALITY_TOL = 1e-12
OFFDIAG_TOL = 1e-13
MAX_SWEEPS = 100


class ValidationError(ValueError):
    """Input rejected: wrong shape, out of range, not normalized, etc."""


class NumericalError(ArithmeticError):
    """An iterative routine failed to converge or missed its residual target."""


class ConsistencyError(RuntimeError):
    """An internal consistency assumption (e.g. a bisection bracket) was violated."""


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex array. 1-D input becomes a column."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim == 1:
        m = m.reshape(-1, 1)
    if m.ndim != 2 or m.size == 0:
        raise ValidationError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("matrix contains NaN or Inf entries")
    return m


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValidationError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Kronecker product; the left factor indexes the most significant bits."""
    return np.kron(as_matrix(a), as_matrix(b))


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def max_abs_diff(a, b) -> float:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ValidationError(f"shape mismatch {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def allclose(a, b, tol: float = EQUALITY_TOL) -> bool:
    """Tolerance-based equality on the entrywise max-abs difference."""
    return max_abs_diff(a, b) <= tol


def hermiticity_residual(a) -> float:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValidationError(f"matrix is not square: {a.shape}")
    return max_abs_diff(a, a.conj().T)


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def _rotate(a: np.ndarray, v: np.ndarray, k: int, l: int) -> None:
    # In-place a <- G^H a G and v <- v G, with G chosen to zero a[k, l].
    akl = a[k, l]
    r = abs(akl)
    phase = akl / r
    theta = (a[l, l].real - a[k, k].real) / (2.0 * r)
    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.hypot(theta, 1.0))
    c = 1.0 / math.hypot(t, 1.0)
    s = t * c
    # G = diag(1, conj(phase)) @ [[c, s], [-s, c]] restricted to the (k, l) plane
    g = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
    idx = [k, l]
    a[:, idx] = a[:, idx] @ g
    a[idx, :] = g.conj().T @ a[idx, :]
    a[k, l] = a[l, k] = 0.0
    a[k, k] = a[k, k].real
    a[l, l] = a[l, l].real
    v[:, idx] = v[:, idx] @ g


def eig_hermitian(a, tol: float = EIG_RECON_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues ascending and the
    eigenvectors as orthonormal columns, so that ``a @ v ~= v @ diag(w)``.

    Raises ``ValidationError`` for non-square or non-Hermitian input and
    ``NumericalError`` if the sweeps do not converge or the reconstruction
    residual exceeds ``tol``.
    """
    a0 = as_matrix(a)
    if hermiticity_residual(a0) > HERMITICITY_TOL:
        raise ValidationError("eig_hermitian needs a Hermitian matrix")
    n = a0.shape[0]
    work = 0.5 * (a0 + a0.conj().T)
    vecs = np.eye(n, dtype=np.complex128)
    scale = max(1.0, float(np.linalg.norm(work)))

    for _ in range(MAX_SWEEPS):
        if _offdiag_norm(work) <= OFFDIAG_TOL * scale:
            break
        for k in range(n - 1):
            for l in range(k + 1, n):
                if abs(work[k, l]) > 1e-300:
                    _rotate(work, vecs, k, l)
    else:
        if _offdiag_norm(work) > OFFDIAG_TOL * scale:
            raise NumericalError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")

    w = np.diag(work).real.copy()
    order = np.argsort(w, kind="stable")
    w, vecs = w[order], vecs[:, order]

    resid = max_abs_diff(a0 @ vecs, vecs * w)
    if resid > tol:
        raise NumericalError(f"eigen-reconstruction residual {resid:.3e} exceeds {tol:.1e}")
    return w, vecs


def eigvals_hermitian(a) -> np.ndarray:
    return eig_hermitian(a)[0]
