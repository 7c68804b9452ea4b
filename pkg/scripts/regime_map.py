"""Sweep a (p, alpha^2) grid and write the regime table; plot it if matplotlib is present.

    python scripts/regime_map.py --mode two-side --out regime_two_side.csv
"""

import argparse

import numpy as np

from asymclone import analysis
from asymclone.cli import RunConfig, run_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--mode", choices=analysis.MODES, default="two-side")
    ap.add_argument("--p-steps", type=int, default=201)
    ap.add_argument("--alpha-sq-steps", type=int, default=101)
    ap.add_argument("--out", default="regime.csv")
    ap.add_argument("--plot", default=None, help="optional PNG path")
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()

    cfg = RunConfig(mode=args.mode, p_steps=args.p_steps, alpha_sq_steps=args.alpha_sq_steps,
                    output_path=args.out, workers=args.workers)
    with open(args.out, "w", newline="") as fh:
        fh.write(run_sweep(cfg))
    print(f"wrote {args.out}")

    if args.plot:
        import matplotlib.pyplot as plt

        rows = analysis.sweep(cfg.mode, cfg.p_grid(), cfg.alpha_grid(), workers=args.workers)
        shape = (len(cfg.p_grid()), len(cfg.alpha_grid()))
        kept = np.array([r.kept_verdict.negativity for r in rows]).reshape(shape)
        other = np.array([r.other_verdict.negativity for r in rows]).reshape(shape)
        goal = np.array([r.goal_met for r in rows]).reshape(shape)
        extent = (0, 1, 0, 1)
        fig, axes = plt.subplots(1, 3, figsize=(13, 4), sharey=True)
        for ax, data, title in zip(axes, (kept, other, goal), ("copy negativity", "other negativity", "goal met")):
            im = ax.imshow(data, origin="lower", extent=extent, aspect="auto")
            ax.set_title(title)
            ax.set_xlabel("alpha^2")
            fig.colorbar(im, ax=ax)
        axes[0].set_ylabel("p")
        fig.tight_layout()
        fig.savefig(args.plot, dpi=120)
        print(f"wrote {args.plot}")


if __name__ == "__main__":
    main()
