"""Train a small hierarchical world model, then filter and imagine with it.

Uses the tiny configuration so it finishes in well under a minute.

Run: python demos/02_world_model.py [--out runs/demo] [--steps 150]
"""

import argparse

import numpy as np
import torch

from deepaif import pipeline
from deepaif.config import load_config
from deepaif.training import RunPaths, load_stage
from deepaif.world_model import RowSampler

parser = argparse.ArgumentParser()
parser.add_argument("--out", default="runs/demo")
parser.add_argument("--steps", type=int, default=150)
args = parser.parse_args()

cfg = load_config("configs/tiny.ini")
paths = RunPaths(args.out)
if not (paths.data / "index.jsonl").exists():
    pipeline.cmd_gen_data(cfg, args.out)
summary = pipeline.cmd_train(cfg, args.out, "wm", steps={"wm": args.steps})
print("world model checkpoint", summary["stages"]["wm"]["checkpoint_sha256"][:12])

wm = load_stage(cfg, paths, "wm")
data = pipeline.load_data(paths)
_, held = data.split(cfg.data.holdout_fraction, cfg.data.seed)
ep = int(held[0]) if len(held) else 0
frames = torch.from_numpy(data.observations(ep))[None]
actions = torch.from_numpy(data.actions[ep])[None]
per_step = wm.cfg.s_slow + wm.cfg.s_fast

# Filtering: posterior state after 30 observed frames, then reconstruct the last one.
with torch.no_grad():
    z = wm.filter(frames[:, :30], actions, RowSampler([0], 30 * per_step))
    recon = wm.decode_obs(z)
err = float(((recon[0] - frames[0, 29]) ** 2).mean())
print(f"reconstruction MSE of frame 29: {err:.4f}")

# Imagination: roll 20 steps ahead on the recorded actions with no observations.
with torch.no_grad():
    future = wm.imagine(z, actions[:, 29:49], RowSampler([1], 20 * per_step))
    pred = wm.decode_obs(future)
print(f"20-step imagined frame MSE: {float(((pred[0] - frames[0, 49]) ** 2).mean()):.4f}")

# The two layers integrate at different speeds (time constants 32 and 4).
with torch.no_grad():
    slow, fast, s = [], [], z
    sampler = RowSampler([2], 20 * per_step)
    for k in range(20):
        n = wm.imagine_step(s, actions[:, 29 + k], sampler)
        slow.append(float((n.d_slow - s.d_slow).abs().max()))
        fast.append(float((n.d_fast - s.d_fast).abs().max()))
        s = n
print(f"mean per-step change: slow {np.mean(slow):.4f}, fast {np.mean(fast):.4f}")
