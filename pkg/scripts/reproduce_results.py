"""Print the machine's headline numbers: thresholds, scaling maxima, fidelities."""

import math

import numpy as np

from asymclone import (
    ClonerParams,
    EntangledInput,
    alpha_window,
    copy_fidelity,
    depolarizing_probs,
    find_threshold_one_side,
    find_threshold_two_side,
    scaling_factor_one_side,
    scaling_factors_two_side,
)


def main():
    p1, p2 = find_threshold_one_side(), find_threshold_two_side()
    print(f"one-side threshold  {p1:.10f}   sqrt(3)-1 = {math.sqrt(3) - 1:.10f}")
    print(f"two-side threshold  {p2:.10f}   radical   = {(1 - math.sqrt(3) + math.sqrt(2 * math.sqrt(3))) / 2:.10f}")
    print(f"one-side s at threshold  {scaling_factor_one_side(ClonerParams(p1)):.10f}  (1/3)")
    print(f"two-side s at threshold  {scaling_factors_two_side(ClonerParams(p2)).s_b1:.10f}  (1/sqrt3 = {1 / math.sqrt(3):.10f})")
    print()
    print("   p      P      P'     s_two   window            F(a2=.1)  F(a2=.5)")
    for p in np.round(np.arange(0.55, 1.0001, 0.05), 2):
        params = ClonerParams(p)
        big_p, big_pp = depolarizing_probs(params)
        w = alpha_window(params)
        win = f"[{w.lower:.4f}, {w.upper:.4f}]" if w.nonempty else "empty"
        f1 = copy_fidelity(params, EntangledInput.from_alpha_sq(0.1))
        f5 = copy_fidelity(params, EntangledInput.from_alpha_sq(0.5))
        s = scaling_factors_two_side(params).s_b1
        print(f"{p:5.2f}  {big_p:.4f} {big_pp:.4f}  {s:.4f}  {win:17s} {f1:.5f}   {f5:.5f}")


if __name__ == "__main__":
    main()
