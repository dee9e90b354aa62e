"""Tour of the kitchen simulator and its scripted demonstrations.

Run: python demos/01_kitchen.py [--png frames.png]
"""

import argparse

import numpy as np

from deepaif.kitchen.dataset import FAMILIES
from deepaif.kitchen.policies import PolicyPattern, initial_states, run_policy, valid_pairs
from deepaif.kitchen.render import render
from deepaif.kitchen.sim import ScenarioSpec, reset

parser = argparse.ArgumentParser()
parser.add_argument("--png", help="save a strip of frames (needs matplotlib)")
args = parser.parse_args()

# A scene is fully described by where each ball sits and whether the lid is on.
state = reset(ScenarioSpec(red="pot", blue="pan", lid="closed"))
print("initial layout (red, blue, lid, held):", state.symbolic())

# Every pattern is a 50-step scripted controller with small waypoint jitter.
# Moving a ball into the pot needs the lid off, so open it first.
frames = []
for pattern in (PolicyPattern.OPEN_LID, PolicyPattern.PAN_TO_DISH):
    actions, obs, state = run_policy(state, pattern, noise_seed=1)
    frames += obs[::10]
    print(f"{pattern.value:>10}: {len(actions)} steps -> {state.symbolic()}")
frames.append(render(state))

# Patterns with unmet preconditions are refused rather than silently failing:
# the pan is empty now.
try:
    run_policy(state, PolicyPattern.PAN_TO_DISH, 0)
except Exception as exc:  # noqa: BLE001
    print("refused:", exc)

# Demonstrations chain two patterns from each initial layout.
for family, colors in FAMILIES.items():
    n_init = len(list(initial_states(colors)))
    print(f"family {family:>4}: {n_init:2d} initial layouts, {len(valid_pairs(colors))} pattern pairs")

if args.png:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, len(frames), figsize=(2 * len(frames), 2))
    for ax, f in zip(axes, frames):
        ax.imshow(np.clip(f, 0, 1))
        ax.axis("off")
    fig.savefig(args.png, dpi=100, bbox_inches="tight")
    print("wrote", args.png)
