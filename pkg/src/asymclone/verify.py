"""Self-check suite behind ``asymclone verify``.

Each check returns the worst residual it saw and compares it to a fixed
tolerance. Analytic results are always compared against the brute-force
simulation (isometry applied to the register, then partial trace).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .analysis import (
    ONE_SIDE_THRESHOLD_EXACT,
    TWO_SIDE_THRESHOLD_EXACT,
    copy_fidelity,
    find_threshold_one_side,
    find_threshold_two_side,
    scaling_factors_two_side,
)
from .cloner import (
    ClonerParams,
    analytic_branches_both_sides,
    analytic_branches_one_side,
    clone_both_sides,
    clone_one_side,
    cloner_isometry,
    depolarizing_probs,
    shrunk_state,
    single_qubit_outputs,
)
from .numerics import EQUALITY_TOL, max_abs_diff
from .states import (
    EntangledInput,
    bell_weights,
    density_from_pure,
    fidelity_with_pure,
    partial_trace,
)

P_GRID = np.linspace(0.0, 1.0, 101)
ALPHA_SQ_GRID = np.linspace(0.0, 1.0, 21)
THRESHOLD_TOL = 1e-6


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tol)


@lru_cache(maxsize=1)
def _simulated_grid():
    cells = []
    for p in P_GRID:
        params = ClonerParams(p)
        for a2 in ALPHA_SQ_GRID:
            chi = EntangledInput.from_alpha_sq(a2)
            cells.append((params, chi, clone_one_side(chi, params), clone_both_sides(chi, params)))
    return cells


def check_isometry() -> CheckResult:
    worst = max(
        max_abs_diff(v.conj().T @ v, np.eye(2))
        for v in (cloner_isometry(ClonerParams(p)) for p in P_GRID)
    )
    return CheckResult("isometry V^H V = I", worst, EQUALITY_TOL)


def check_no_cloning_identity() -> CheckResult:
    worst = max(abs(ClonerParams(p).no_cloning_residual()) for p in P_GRID)
    return CheckResult("reduction-factor identity", worst, EQUALITY_TOL)


def check_single_qubit_shrink() -> CheckResult:
    worst = 0.0
    for p in P_GRID:
        params = ClonerParams(p)
        for a2 in ALPHA_SQ_GRID:
            phi = EntangledInput.from_alpha_sq(a2).one_qubit()
            rho_in = density_from_pure(phi).matrix
            rho_a, rho_b = single_qubit_outputs(params, phi)
            worst = max(
                worst,
                max_abs_diff(rho_a.matrix, shrunk_state(params.eta_a, rho_in)),
                max_abs_diff(rho_b.matrix, shrunk_state(params.eta_b, rho_in)),
            )
    return CheckResult("single-qubit copies are shrunk inputs", worst, EQUALITY_TOL)


def check_oracle_one_side() -> CheckResult:
    worst = 0.0
    for params, chi, one, _ in _simulated_grid():
        kept, other = analytic_branches_one_side(params, chi)
        worst = max(
            worst,
            max_abs_diff(kept.matrix, one.branch_kept.matrix),
            max_abs_diff(other.matrix, one.branch_other.matrix),
        )
    return CheckResult("one-side analytic branches = simulation", worst, EQUALITY_TOL)


def check_oracle_two_side() -> CheckResult:
    worst = 0.0
    for params, chi, _, two in _simulated_grid():
        kept, other = analytic_branches_both_sides(params, chi)
        worst = max(
            worst,
            max_abs_diff(kept.matrix, two.branch_kept.matrix),
            max_abs_diff(other.matrix, two.branch_other.matrix),
        )
    return CheckResult("two-side analytic branches = simulation", worst, EQUALITY_TOL)


def check_fidelity() -> CheckResult:
    worst = 0.0
    for params, chi, _, two in _simulated_grid():
        direct = fidelity_with_pure(chi.two_qubit(), two.branch_kept)
        worst = max(worst, abs(copy_fidelity(params, chi) - direct))
    return CheckResult("closed-form copy fidelity = <chi|rho|chi>", worst, EQUALITY_TOL)


def check_marginal_scaling() -> CheckResult:
    """Disentangled-branch marginals are state-independent shrinks of the input marginals."""
    worst = 0.0
    for params, chi, one, two in _simulated_grid():
        rho_chi = density_from_pure(chi.two_qubit())
        s = scaling_factors_two_side(params).s_b1
        for pos in (0, 1):
            want = shrunk_state(s, partial_trace(rho_chi, [pos]).matrix)
            got = partial_trace(two.branch_other, [pos]).matrix
            worst = max(worst, max_abs_diff(got, want))
        want = shrunk_state(params.eta_b, partial_trace(rho_chi, [1]).matrix)
        got = partial_trace(one.branch_other, [1]).matrix
        worst = max(worst, max_abs_diff(got, want))
    return CheckResult("branch marginals follow s*rho + (1-s)I/2", worst, EQUALITY_TOL)


def check_bell_weights() -> CheckResult:
    worst = 0.0
    chi = EntangledInput.from_alpha_sq(0.5)
    for p in P_GRID:
        params = ClonerParams(p)
        n = params.n_factor
        big_p, big_p_prime = depolarizing_probs(params)
        out = clone_one_side(chi, params)
        wk, wo = bell_weights(out.branch_kept), bell_weights(out.branch_other)
        minor_k, minor_o = (1 - p) ** 2 / (2 * n), p**2 / (2 * n)
        expected_k = ((1 + p) ** 2 / (2 * n), minor_k, minor_k, minor_k)
        expected_o = ((2 - p) ** 2 / (2 * n), minor_o, minor_o, minor_o)
        worst = max(
            worst,
            max_abs_diff(wk, expected_k),
            max_abs_diff(wo, expected_o),
            max_abs_diff(wk[1:], [big_p / 3] * 3),
            max_abs_diff(wo[1:], [big_p_prime / 3] * 3),
        )
    return CheckResult("Bell weights and depolarizing probabilities", worst, EQUALITY_TOL)


def check_scaling_product_bound() -> CheckResult:
    # one side: s(a_I) * s(b_II) = 1 * eta_b must stay <= 1/3 above threshold
    ps = np.linspace(ONE_SIDE_THRESHOLD_EXACT, 1.0, 101)
    excess = max(ClonerParams(p).eta_b - 1.0 / 3.0 for p in ps)
    return CheckResult("one-side s1*s2 <= 1/3 above threshold", max(excess, 0.0), EQUALITY_TOL)


def check_thresholds() -> CheckResult:
    err = max(
        abs(find_threshold_one_side() - ONE_SIDE_THRESHOLD_EXACT),
        abs(find_threshold_two_side() - TWO_SIDE_THRESHOLD_EXACT),
    )
    return CheckResult("bisected thresholds = closed forms", err, THRESHOLD_TOL)


ALL_CHECKS = (
    check_isometry,
    check_no_cloning_identity,
    check_single_qubit_shrink,
    check_oracle_one_side,
    check_oracle_two_side,
    check_fidelity,
    check_marginal_scaling,
    check_bell_weights,
    check_scaling_product_bound,
    check_thresholds,
)


def run_all() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]
