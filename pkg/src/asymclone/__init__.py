"""Asymmetric 1->2 cloning machine that broadcasts and disentangles a two-qubit state."""

from .analysis import (
    AlphaWindow,
    RegimeReport,
    ScalingFactors,
    alpha_window,
    classify_regime,
    copy_fidelity,
    find_threshold_one_side,
    find_threshold_two_side,
    scaling_factor_one_side,
    scaling_factors_two_side,
    sweep,
)
from .cloner import (
    ClonerParams,
    CloneOutput,
    analytic_branches_both_sides,
    analytic_branches_one_side,
    clone_both_sides,
    clone_one_side,
    cloner_isometry,
    depolarizing_probs,
    single_qubit_outputs,
)
from .numerics import ConsistencyError, NumericalError, ValidationError
from .states import (
    DensityMatrix,
    EntangledInput,
    PureState,
    SeparabilityVerdict,
    bell_weights,
    density_from_pure,
    fidelity_with_pure,
    partial_trace,
    partial_transpose,
    separability_verdict,
)

__version__ = "0.1.0"
