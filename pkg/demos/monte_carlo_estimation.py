#!/usr/bin/env python3
"""Monte Carlo phase estimation with the parity readout.

Simulates repeated experiments: each trial draws ten thousand +/-1 parity
outcomes at the true phase, averages them, and inverts the signal on its
central monotone branch to produce a phase estimate.  The histogram of
estimates should match the predicted error 2/((nbar + 1) sqrt(shots)),
and the RMSE-versus-shots curve should fall as 1/sqrt(shots).

Run:  python3 demos/monte_carlo_estimation.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from bellamp import r_from_nbar, run_experiment

OUT_DIR = Path(__file__).resolve().parent / "output"
OUT_DIR.mkdir(exist_ok=True)

NBAR = 6.0
R = r_from_nbar(NBAR)
PHI_TRUE = 0.02

run = run_experiment(R, PHI_TRUE, shots=10_000, trials=400, seed=20240815)
print(f"nbar = {NBAR}, true phase = {PHI_TRUE} rad")
print(f"empirical RMSE = {run.empirical_rmse:.5f} rad")
print(f"predicted RMSE = {run.predicted_rmse:.5f} rad "
      f"(ratio {run.empirical_rmse / run.predicted_rmse:.3f})")

fig, (hist, scaling) = plt.subplots(1, 2, figsize=(10.5, 4.2))
hist.hist(run.estimates, bins=40, color="0.75", edgecolor="0.3")
hist.axvline(PHI_TRUE, color="k", linestyle="--", label="true phase")
for sign in (-1, 1):
    hist.axvline(
        PHI_TRUE + sign * run.predicted_rmse,
        color="r",
        linestyle=":",
        label="predicted +/- RMSE" if sign < 0 else None,
    )
hist.set_xlabel(r"$\hat\varphi$ (rad)")
hist.set_ylabel("trials")
hist.set_title(f"{run.trials} trials x {run.shots_per_trial} shots")
hist.legend()

shot_grid = [250, 1000, 4000, 16000, 64000]
rmses = [
    run_experiment(R, PHI_TRUE, shots=s, trials=150, seed=7 + s).empirical_rmse
    for s in shot_grid
]
predicted = [run.predicted_rmse * np.sqrt(run.shots_per_trial / s) for s in shot_grid]
scaling.loglog(shot_grid, rmses, "ko", label="empirical")
scaling.loglog(shot_grid, predicted, "r-", label=r"$\Delta\varphi/\sqrt{\mathrm{shots}}$")
scaling.set_xlabel("shots per trial")
scaling.set_ylabel("RMSE (rad)")
scaling.legend()
scaling.set_title("estimator consistency")

png_path = OUT_DIR / "monte_carlo_estimation.png"
fig.tight_layout()
fig.savefig(png_path, dpi=150)
print(f"wrote {png_path}")
