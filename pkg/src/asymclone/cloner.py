"""Asymmetric 1->2 qubit cloner and the outputs it produces on ``alpha|00> + beta|11>``.

The cloner is stored as the 8x2 isometry it defines on the input qubit ``a``
with the blank ``b`` and the machine ``c`` in their fixed start states. Output
basis order is ``(a, b, c)`` with ``c`` up -> ``|0>`` and ``c`` down -> ``|1>``.

Two independent routes give every branch state:

* brute force: apply the isometry to the register, then partial-trace;
* closed form: fill in the printed matrix coefficients directly.

Global register layouts:

* one side: ``(a_I, a_II, b_II, c)``, cloner acting on ``a_II``
* both sides: ``(a_I, b_I, c_I, a_II, b_II, c_II)``
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numerics import ValidationError
from .states import (
    DensityMatrix,
    EntangledInput,
    PureState,
    density_from_pure,
    partial_trace,
)

ONE_SIDE_QUBITS = ("a_I", "a_II", "b_II", "c")
TWO_SIDE_QUBITS = ("a_I", "b_I", "c_I", "a_II", "b_II", "c_II")


@dataclass(frozen=True)
class ClonerParams:
    """Cloner knob ``p`` with ``q = 1 - p`` and ``N = 1 + p^2 + q^2``.

    ``p`` ranges over all of [0, 1]; for ``p < 1/2`` the roles of the two
    copies are simply exchanged.
    """

    p: float

    def __post_init__(self):
        p = float(self.p)
        if not (0.0 <= p <= 1.0):
            raise ValidationError(f"p must lie in [0, 1], got {self.p!r}")
        object.__setattr__(self, "p", p)

    @property
    def q(self) -> float:
        return 1.0 - self.p

    @property
    def n_factor(self) -> float:
        return 1.0 + self.p**2 + self.q**2

    @property
    def eta_a(self) -> float:
        return 2.0 * self.p / self.n_factor

    @property
    def eta_b(self) -> float:
        return 2.0 * self.q / self.n_factor

    def no_cloning_residual(self) -> float:
        ea, eb = self.eta_a, self.eta_b
        return ea * ea + eb * eb + ea * eb - ea - eb


@dataclass(frozen=True)
class CloneOutput:
    global_pure: PureState
    branch_kept: DensityMatrix
    branch_other: DensityMatrix


def cloner_isometry(params: ClonerParams) -> np.ndarray:
    """8x2 isometry: column k is the image of ``|k>_a |blank>_b |start>_c``."""
    p, q = params.p, params.q
    v = np.zeros((8, 2), dtype=np.complex128)
    # index = 4*a + 2*b + c
    v[0b000, 0] = 1.0  # |00>|up>
    v[0b011, 0] = p  # |01>|down>
    v[0b101, 0] = q  # |10>|down>
    v[0b111, 1] = 1.0  # |11>|down>
    v[0b100, 1] = p  # |10>|up>
    v[0b010, 1] = q  # |01>|up>
    return v / np.sqrt(params.n_factor)


def single_qubit_outputs(
    params: ClonerParams, phi: PureState | EntangledInput
) -> tuple[DensityMatrix, DensityMatrix]:
    """Brute-force reduced states of the two copies of a single-qubit input."""
    if isinstance(phi, EntangledInput):
        phi = phi.one_qubit()
    if phi.num_qubits != 1:
        raise ValidationError("single_qubit_outputs expects a one-qubit state")
    out = PureState(cloner_isometry(params) @ phi.amplitudes)
    rho = density_from_pure(out)
    return partial_trace(rho, [0]), partial_trace(rho, [1])


def shrunk_state(eta: float, rho_in: np.ndarray) -> np.ndarray:
    """``eta * rho_in + (1 - eta) * I/2`` for a single-qubit ``rho_in``."""
    return eta * np.asarray(rho_in) + (1.0 - eta) * np.eye(2) / 2.0


def clone_one_side(chi: EntangledInput, params: ClonerParams) -> CloneOutput:
    """Clone qubit ``a_II`` of ``chi``; keep ``(a_I, a_II)``, other is ``(a_I, b_II)``."""
    v = cloner_isometry(params)
    psi = np.kron(np.eye(2), v) @ chi.two_qubit().amplitudes
    state = PureState(psi)
    rho = density_from_pure(state)
    return CloneOutput(state, partial_trace(rho, [0, 1]), partial_trace(rho, [0, 2]))


def clone_both_sides(chi: EntangledInput, params: ClonerParams) -> CloneOutput:
    """Clone both qubits with the same cloner; keep ``(a_I, a_II)``, other is ``(b_I, b_II)``."""
    v = cloner_isometry(params)
    psi = np.kron(v, v) @ chi.two_qubit().amplitudes
    state = PureState(psi)
    rho = density_from_pure(state)
    return CloneOutput(state, partial_trace(rho, [0, 3]), partial_trace(rho, [1, 4]))


def _x_state(d00: float, d01: float, d10: float, d11: float, corner: float) -> DensityMatrix:
    m = np.diag([d00, d01, d10, d11]).astype(np.complex128)
    m[0, 3] = m[3, 0] = corner
    return DensityMatrix(m)


def _one_side_branch(strong: float, weak: float, n: float, chi: EntangledInput) -> DensityMatrix:
    a2, b2 = chi.alpha_sq, chi.beta**2
    return _x_state(
        (1 + strong**2) * a2 / n,
        weak**2 * a2 / n,
        weak**2 * b2 / n,
        (1 + strong**2) * b2 / n,
        2 * strong * chi.alpha * chi.beta / n,
    )


def analytic_branches_one_side(
    params: ClonerParams, chi: EntangledInput
) -> tuple[DensityMatrix, DensityMatrix]:
    """Closed-form ``(rho_{a_I a_II}, rho_{a_I b_II})`` for one-side cloning."""
    p, q, n = params.p, params.q, params.n_factor
    return _one_side_branch(p, q, n, chi), _one_side_branch(q, p, n, chi)


def _two_side_branch(strong: float, weak: float, n: float, chi: EntangledInput) -> DensityMatrix:
    a2, b2 = chi.alpha_sq, chi.beta**2
    n2 = n * n
    hi = (1 + strong**2) ** 2
    lo = weak**4
    cross = (1 + strong**2) * weak**2 / n2
    return _x_state(
        (hi * a2 + lo * b2) / n2,
        cross,
        cross,
        (hi * b2 + lo * a2) / n2,
        4 * strong**2 * chi.alpha * chi.beta / n2,
    )


def analytic_branches_both_sides(
    params: ClonerParams, chi: EntangledInput
) -> tuple[DensityMatrix, DensityMatrix]:
    """Closed-form ``(rho_{a_I a_II}, rho_{b_I b_II})`` for two-side cloning."""
    p, q, n = params.p, params.q, params.n_factor
    return _two_side_branch(p, q, n, chi), _two_side_branch(q, p, n, chi)


def depolarizing_probs(params: ClonerParams) -> tuple[float, float]:
    """Depolarizing probabilities ``(P, P')`` seen by the kept and the copied qubit."""
    p, n = params.p, params.n_factor
    return 3 * (1 - p) ** 2 / (2 * n), 3 * p**2 / (2 * n)
