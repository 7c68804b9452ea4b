"""Qubit-register states and the two-qubit entanglement toolkit."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .numerics import (
    EQUALITY_TOL,
    HERMITICITY_TOL,
    ValidationError,
    as_matrix,
    eigvals_hermitian,
    hermiticity_residual,
)

NORM_TOL = 1e-12
TRACE_TOL = 1e-10
PSD_TOL = 1e-10
PPT_TOL = 1e-10

_S = 1.0 / np.sqrt(2.0)
# Bell basis as columns, in the order Phi+, Phi-, Psi+, Psi-
BELL_BASIS = np.array(
    [
        [_S, _S, 0.0, 0.0],
        [0.0, 0.0, _S, _S],
        [0.0, 0.0, _S, -_S],
        [_S, -_S, 0.0, 0.0],
    ],
    dtype=np.complex128,
)
BELL_LABELS = ("phi+", "phi-", "psi+", "psi-")


def _num_qubits(dim: int) -> int:
    n = int(dim).bit_length() - 1
    if dim < 2 or (1 << n) != dim:
        raise ValidationError(f"dimension {dim} is not a power of two >= 2")
    return n


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector; qubit 0 is the most significant index bit."""

    amplitudes: np.ndarray
    num_qubits: int = field(init=False)

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if not np.all(np.isfinite(amps)):
            raise ValidationError("amplitudes contain NaN or Inf")
        n = _num_qubits(amps.size)
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValidationError(f"state is not normalized (|psi|^2 = {norm_sq!r})")
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "num_qubits", n)

    @classmethod
    def basis(cls, bits: str) -> "PureState":
        """Computational basis state from a bit string, e.g. ``"01"``."""
        v = np.zeros(2 ** len(bits), dtype=np.complex128)
        v[int(bits, 2)] = 1.0
        return cls(v)


@dataclass(frozen=True)
class DensityMatrix:
    """Density matrix on ``num_qubits`` qubits.

    Construction checks shape, Hermiticity and unit trace. Positivity needs an
    eigendecomposition, so it is checked on demand by :meth:`validate`.
    """

    matrix: np.ndarray
    num_qubits: int = field(init=False)

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.shape[0] != m.shape[1]:
            raise ValidationError(f"density matrix must be square, got {m.shape}")
        n = _num_qubits(m.shape[0])
        if hermiticity_residual(m) > HERMITICITY_TOL:
            raise ValidationError("density matrix is not Hermitian")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValidationError(f"density matrix trace is {tr!r}, expected 1")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "num_qubits", n)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return eigvals_hermitian(self.matrix)

    def validate(self) -> "DensityMatrix":
        """Raise ``ValidationError`` unless the matrix is positive semidefinite."""
        lam_min = float(self.eigenvalues()[0])
        if lam_min < -PSD_TOL:
            raise ValidationError(f"density matrix has eigenvalue {lam_min:.3e} < 0")
        return self

    @classmethod
    def maximally_mixed(cls, num_qubits: int) -> "DensityMatrix":
        d = 2**num_qubits
        return cls(np.eye(d) / d)


@dataclass(frozen=True)
class EntangledInput:
    """Real amplitudes of ``alpha|00> + beta|11>``; beta is derived from alpha."""

    alpha: float
    beta: float = field(init=False)

    def __post_init__(self):
        a = float(self.alpha)
        if not 0.0 <= a <= 1.0:
            raise ValidationError(f"alpha must lie in [0, 1], got {a}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", float(np.sqrt(max(0.0, 1.0 - a * a))))

    @classmethod
    def from_alpha_sq(cls, alpha_sq: float) -> "EntangledInput":
        if not 0.0 <= alpha_sq <= 1.0:
            raise ValidationError(f"alpha^2 must lie in [0, 1], got {alpha_sq}")
        return cls(float(np.sqrt(alpha_sq)))

    @property
    def alpha_sq(self) -> float:
        return self.alpha * self.alpha

    @property
    def is_entangled(self) -> bool:
        return self.alpha > 0.0 and self.beta > 0.0

    def two_qubit(self) -> PureState:
        return PureState(np.array([self.alpha, 0.0, 0.0, self.beta]))

    def one_qubit(self) -> PureState:
        return PureState(np.array([self.alpha, self.beta]))


@dataclass(frozen=True)
class SeparabilityVerdict:
    min_pt_eigenvalue: float
    negativity: float
    separable: bool


def density_from_pure(psi: PureState | Sequence[complex]) -> DensityMatrix:
    """Projector ``|psi><psi|``. Raw vectors are accepted but must be normalized."""
    if not isinstance(psi, PureState):
        psi = PureState(np.asarray(psi))
    v = psi.amplitudes
    return DensityMatrix(np.outer(v, v.conj()))


def _check_qubits(indices: Sequence[int], n: int) -> list[int]:
    idx = [int(i) for i in indices]
    if not idx:
        raise ValidationError("qubit index list is empty")
    if len(set(idx)) != len(idx):
        raise ValidationError(f"duplicate qubit indices in {idx}")
    bad = [i for i in idx if not 0 <= i < n]
    if bad:
        raise ValidationError(f"qubit indices {bad} out of range for {n} qubits")
    return idx


def partial_trace(rho: DensityMatrix, keep: Sequence[int]) -> DensityMatrix:
    """Reduced state on the qubits in ``keep``, ordered as listed."""
    n = rho.num_qubits
    keep = _check_qubits(keep, n)
    tensor = rho.matrix.reshape((2,) * (2 * n))
    # Row axis i gets label i, column axis gets n + i, or i again when traced out.
    labels = [i for i in range(n)] + [i if i not in keep else n + i for i in range(n)]
    out = list(keep) + [n + i for i in keep]
    reduced = np.einsum(tensor, labels, out)
    d = 2 ** len(keep)
    return DensityMatrix(reduced.reshape(d, d))


def partial_transpose(rho: DensityMatrix | np.ndarray, subsystem: int) -> np.ndarray:
    """Transpose on one qubit's indices. Returns a plain matrix (it need not be PSD)."""
    m = rho.matrix if isinstance(rho, DensityMatrix) else as_matrix(rho)
    if m.shape[0] != m.shape[1]:
        raise ValidationError(f"matrix must be square, got {m.shape}")
    n = _num_qubits(m.shape[0])
    (k,) = _check_qubits([subsystem], n)
    tensor = m.reshape((2,) * (2 * n))
    return np.swapaxes(tensor, k, n + k).reshape(m.shape).copy()


def _require_two_qubits(rho: DensityMatrix) -> None:
    if rho.num_qubits != 2:
        raise ValidationError(f"expected a two-qubit state, got {rho.num_qubits} qubits")


def separability_verdict(rho: DensityMatrix) -> SeparabilityVerdict:
    """Peres-Horodecki test. For two qubits PPT is necessary and sufficient.

    Eigenvalues in ``(-PPT_TOL, 0)`` count as zero, so states sitting exactly on
    a boundary are classified as separable.
    """
    _require_two_qubits(rho)
    lam = eigvals_hermitian(partial_transpose(rho, 1))
    negative = lam[lam < -PPT_TOL]
    return SeparabilityVerdict(
        min_pt_eigenvalue=float(lam[0]),
        negativity=float(-negative.sum()) if negative.size else 0.0,
        separable=bool(lam[0] >= -PPT_TOL),
    )


def bell_weights(rho: DensityMatrix) -> tuple[float, float, float, float]:
    """Diagonal weights <B|rho|B> for B in (Phi+, Phi-, Psi+, Psi-)."""
    _require_two_qubits(rho)
    w = np.einsum("ib,ij,jb->b", BELL_BASIS.conj(), rho.matrix, BELL_BASIS)
    return tuple(float(x) for x in w.real)


def fidelity_with_pure(psi: PureState, rho: DensityMatrix) -> float:
    """Overlap ``<psi|rho|psi>``."""
    if psi.amplitudes.size != rho.dim:
        raise ValidationError(
            f"state dimension {psi.amplitudes.size} does not match density matrix {rho.dim}"
        )
    v = psi.amplitudes
    f = complex(np.vdot(v, rho.matrix @ v))
    if abs(f.imag) > EQUALITY_TOL:
        raise ValidationError(f"fidelity has imaginary part {f.imag:.3e}")
    return f.real
