#!/usr/bin/env python3
"""Anatomy of the squeezed-Bell probe.

Shows what the probe actually looks like in the photon-number basis: the
squeezed vacuum occupies even photon numbers, the squeezed single photon
odd ones, and their entangled combination fills only the (even, odd) and
(odd, even) checkerboard of the joint grid -- one photon's worth of
asymmetry smeared across two bright modes.  Also plots how the truncation
tail falls with the cutoff, which is what the adaptive cutoff search
exploits.

Run:  python3 demos/probe_anatomy.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from bellamp import (
    ModeCutoff,
    ProbeSpec,
    SqueezeParams,
    prepare_probe,
    resolve_cutoff,
    squeezed_one_photon,
    squeezed_vacuum,
    tail_mass,
)

OUT_DIR = Path(__file__).resolve().parent / "output"
OUT_DIR.mkdir(exist_ok=True)

R = 1.0
spec = resolve_cutoff(ProbeSpec(r=R))
cutoff = spec.resolved_cutoff
print(f"r = {R}: adaptive cutoff {cutoff.n_max}, probe tail {tail_mass(prepare_probe(spec)):.2e}")

params = SqueezeParams(R)
vac = squeezed_vacuum(params, cutoff)
one = squeezed_one_photon(params, cutoff)
probe = prepare_probe(spec)

fig, axes = plt.subplots(1, 3, figsize=(13.5, 4.0))

show = 25
n = np.arange(show)
axes[0].bar(n - 0.2, np.abs(vac.amps[:show]) ** 2, width=0.4, label="squeezed vacuum")
axes[0].bar(n + 0.2, np.abs(one.amps[:show]) ** 2, width=0.4, label="squeezed photon")
axes[0].set_xlabel("photon number")
axes[0].set_ylabel("probability")
axes[0].set_title("even/odd single-mode ladders")
axes[0].legend()

joint = np.abs(probe.amps[:show, :show]) ** 2
image = axes[1].imshow(
    np.where(joint > 0, np.log10(joint + 1e-30), np.nan),
    origin="lower",
    cmap="viridis",
    vmin=-12,
)
axes[1].set_xlabel("photons in mode b")
axes[1].set_ylabel("photons in mode a")
axes[1].set_title("joint distribution (log10), checkerboard support")
fig.colorbar(image, ax=axes[1], shrink=0.85)

cutoffs = [4, 8, 16, 32, 64, 128, 256]
tails = [
    max(tail_mass(squeezed_one_photon(params, ModeCutoff(c))), 1e-18) for c in cutoffs
]
axes[2].loglog(cutoffs, tails, "ko-")
axes[2].axhline(spec.epsilon_tail, color="r", linestyle=":", label="tail budget")
axes[2].axvline(cutoff.n_max, color="b", linestyle="--", label="chosen cutoff")
axes[2].set_xlabel("per-mode cutoff")
axes[2].set_ylabel("truncation tail mass")
axes[2].set_title("adaptive cutoff selection")
axes[2].legend()

png_path = OUT_DIR / "probe_anatomy.png"
fig.tight_layout()
fig.savefig(png_path, dpi=150)
print(f"wrote {png_path}")
