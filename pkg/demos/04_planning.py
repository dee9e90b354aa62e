"""Plan with expected free energy: goal-directed versus exploratory choices.

Needs a run with all three stages. Without ``--out`` a tiny run is trained
first (about half a minute), which is enough to exercise every step but not
to plan well; point ``--out``/``--config`` at a trained run for meaningful
choices.

Run: python demos/04_planning.py [--out runs/desk --config configs/desk.ini]
"""

import argparse
import time

import numpy as np

from deepaif import pipeline
from deepaif.config import load_config
from deepaif.kitchen.policies import PolicyPattern, execute
from deepaif.kitchen.render import render
from deepaif.kitchen.sim import ScenarioSpec, reset
from deepaif.planner import PreferenceSpec, predict_d_slow, select_action
from deepaif.training import RunPaths

parser = argparse.ArgumentParser()
parser.add_argument("--out", default="runs/demo-plan")
parser.add_argument("--config", default="configs/tiny.ini")
args = parser.parse_args()

cfg = load_config(args.config)
paths = RunPaths(args.out)
if not all(paths.ckpt(s).exists() for s in pipeline.STAGES):
    if not (paths.data / "index.jsonl").exists():
        pipeline.cmd_gen_data(cfg, args.out)
    pipeline.cmd_train(cfg, args.out, "all")
models = pipeline.load_models(cfg, args.out)
H, W = cfg.data.height, cfg.data.width

# Goal: move the blue ball from the pan to the dish. The preference is the
# rendered goal scene; gamma sets how sharply it is preferred.
state = reset(ScenarioSpec(red="pot", blue="pan", lid="closed"))
o_pref, goal = pipeline.goal_image(state, PolicyPattern.PAN_TO_DISH, 0, H, W)
z = pipeline.filter_state(models.world_model, render(state, H, W)[None], None, 0)

for gamma in (100.0, 1.0, 1e-4):
    cand, actions, report = select_action(z, PreferenceSpec(o_pref, gamma), models,
                                          n_mc=cfg.planner.n_mc, seed=0)
    order = np.argsort(report.efe_total)[:3]
    print(f"\ngamma={gamma:g}: chose {cand.label}, executed -> "
          f"{pipeline.classify(state, execute(state, actions))}")
    for k in order:
        print(f"  {models.candidates[k].label:>12}  EFE {report.efe_total[k]:12.4g}  "
              f"epistemic {report.epistemic_value[k]:8.4f}  extrinsic {report.extrinsic_value[k]:12.4g}")

# The two backends differ only in how the future slow state is obtained.
for backend in ("abstract", "sequential"):
    t0 = time.perf_counter()
    for _ in range(5):
        predict_d_slow(z, models, backend)
    print(f"{backend:>10}: {(time.perf_counter() - t0) / 5 * 1e3:.2f} ms for "
          f"{len(models.candidates)} candidates")

# Representative behaviors and the precision at which the choice flips.
idx = pipeline.representatives(models)
print("\nrepresentatives:", idx)
if None not in idx.values():
    cross = pipeline.find_crossover(models, z, o_pref, idx, cfg.planner.n_mc, 0, iters=20)
    print("sign changes:", cross["sign_changes"], "gamma*:", cross["gamma_star"])
