"""Derived quantities and regime logic for the cloning machine.

Two operating modes are analysed:

``one-side``
    only ``a_II`` is cloned; the copy branch is ``(a_I, a_II)`` and the
    disentangled branch is ``(a_I, b_II)``.
``two-side``
    both qubits are cloned by identical cloners; the copy branch is
    ``(a_I, a_II)`` and the disentangled branch is ``(b_I, b_II)``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Literal, Sequence

import numpy as np

from .cloner import (
    ClonerParams,
    analytic_branches_both_sides,
    analytic_branches_one_side,
)
from .numerics import ConsistencyError, ValidationError
from .states import (
    EntangledInput,
    SeparabilityVerdict,
    fidelity_with_pure,
    separability_verdict,
)

Mode = Literal["one-side", "two-side"]
MODES: tuple[str, ...] = ("one-side", "two-side")

BISECT_MAX_ITER = 200
BISECT_WIDTH = 1e-12

ONE_SIDE_THRESHOLD_EXACT = math.sqrt(3.0) - 1.0
TWO_SIDE_THRESHOLD_EXACT = (1.0 - math.sqrt(3.0) + math.sqrt(2.0 * math.sqrt(3.0))) / 2.0


@dataclass(frozen=True)
class ScalingFactors:
    """Marginal shrink factors of the two qubits of the disentangled branch."""

    s_b1: float
    s_b2: float


@dataclass(frozen=True)
class AlphaWindow:
    lower: float
    upper: float
    nonempty: bool

    def contains(self, alpha_sq: float) -> bool:
        return self.nonempty and self.lower < alpha_sq < self.upper


@dataclass(frozen=True)
class RegimeReport:
    mode: str
    p: float
    alpha_sq: float
    kept_verdict: SeparabilityVerdict
    other_verdict: SeparabilityVerdict
    fidelity: float
    scaling: ScalingFactors
    goal_met: bool


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValidationError(f"mode must be one of {MODES}, got {mode!r}")


def branches(mode: str, params: ClonerParams, chi: EntangledInput):
    _check_mode(mode)
    if mode == "one-side":
        return analytic_branches_one_side(params, chi)
    return analytic_branches_both_sides(params, chi)


def copy_fidelity(params: ClonerParams, chi: EntangledInput) -> float:
    """Closed-form fidelity of the two-side copy branch with the input state."""
    p, q, n = params.p, params.q, params.n_factor
    return ((1 + p * p) ** 2 - 8 * p * q * q * chi.alpha_sq * chi.beta**2) / n**2


def scaling_factors_two_side(params: ClonerParams) -> ScalingFactors:
    s = 2.0 * (1.0 - params.p) / params.n_factor
    return ScalingFactors(s, s)


def scaling_factor_one_side(params: ClonerParams) -> float:
    """Shrink factor of ``b_II``; ``a_I`` is untouched so its factor is 1."""
    return params.eta_b


def fit_scaling(rho_out: np.ndarray, rho_in: np.ndarray) -> float:
    """Least-squares ``s`` in ``rho_out = s*rho_in + (1-s)*I/2`` for one qubit.

    Undefined when ``rho_in`` is maximally mixed.
    """
    half = np.eye(2) / 2.0
    d_in = np.asarray(rho_in) - half
    d_out = np.asarray(rho_out) - half
    denom = float(np.vdot(d_in, d_in).real)
    if denom < 1e-20:
        raise ValidationError("input marginal is maximally mixed; s is undetermined")
    return float(np.vdot(d_in, d_out).real) / denom


def alpha_window(params: ClonerParams) -> AlphaWindow:
    """Range of alpha^2 on which the two-side copy branch stays entangled."""
    p = params.p
    if p <= 0.0:
        raise ValidationError("alpha window is undefined at p = 0")
    k = (1 + p * p) * (1 - p) ** 2 / (4 * p * p)
    if k >= 0.5:
        return AlphaWindow(0.5, 0.5, False)
    r = math.sqrt(0.25 - k * k)
    return AlphaWindow(0.5 - r, 0.5 + r, True)


def _bisect_lower_edge(pred: Callable[[float], bool], lo: float, hi: float) -> float:
    if pred(lo) or not pred(hi):
        raise ConsistencyError(
            f"predicate is not false->true on [{lo}, {hi}]: "
            f"pred(lo)={pred(lo)}, pred(hi)={pred(hi)}"
        )
    for _ in range(BISECT_MAX_ITER):
        if hi - lo < BISECT_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


_BALANCED = EntangledInput.from_alpha_sq(0.5)


def one_side_goal(p: float) -> bool:
    """Copy branch entangled and other branch separable at alpha^2 = 1/2."""
    kept, other = analytic_branches_one_side(ClonerParams(p), _BALANCED)
    return separability_verdict(other).separable and not separability_verdict(kept).separable


def two_side_goal(p: float) -> bool:
    """Other branch separable at alpha^2 = 1/2 and a nonempty alpha window."""
    params = ClonerParams(p)
    _, other = analytic_branches_both_sides(params, _BALANCED)
    return separability_verdict(other).separable and alpha_window(params).nonempty


def find_threshold_one_side(lo: float = 0.3, hi: float = 1.0) -> float:
    return _bisect_lower_edge(one_side_goal, lo, hi)


def find_threshold_two_side(lo: float = 0.5, hi: float = 1.0) -> float:
    return _bisect_lower_edge(two_side_goal, lo, hi)


def classify_regime(p: float, alpha_sq: float, mode: str = "two-side") -> RegimeReport:
    _check_mode(mode)
    params = ClonerParams(p)
    chi = EntangledInput.from_alpha_sq(alpha_sq)
    kept, other = branches(mode, params, chi)
    kept_v = separability_verdict(kept)
    other_v = separability_verdict(other)
    if mode == "one-side":
        scaling = ScalingFactors(1.0, scaling_factor_one_side(params))
    else:
        scaling = scaling_factors_two_side(params)
    goal = chi.is_entangled and not kept_v.separable and other_v.separable
    return RegimeReport(
        mode=mode,
        p=params.p,
        alpha_sq=float(alpha_sq),
        kept_verdict=kept_v,
        other_verdict=other_v,
        fidelity=fidelity_with_pure(chi.two_qubit(), kept),
        scaling=scaling,
        goal_met=bool(goal),
    )


def _classify_cell(args: tuple[float, float, str]) -> RegimeReport:
    return classify_regime(*args)


def sweep(
    mode: str,
    p_grid: Sequence[float],
    alpha_grid: Sequence[float],
    workers: int = 1,
) -> list[RegimeReport]:
    """Classify every ``(p, alpha^2)`` cell, p outer and alpha^2 inner.

    ``workers > 1`` spreads cells over processes; row order is unchanged.
    """
    _check_mode(mode)
    p_grid, alpha_grid = list(p_grid), list(alpha_grid)
    if not p_grid or not alpha_grid:
        raise ValidationError("sweep grids must be non-empty")
    for x in (*p_grid, *alpha_grid):
        if not 0.0 <= x <= 1.0:
            raise ValidationError(f"grid value {x} outside [0, 1]")
    cells = [(float(p), float(a), mode) for p in p_grid for a in alpha_grid]
    if workers <= 1:
        return [_classify_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_classify_cell, cells, chunksize=64))
