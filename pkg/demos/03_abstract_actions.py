"""Compress 50-step joint trajectories into pairs of discrete codes.

Run: python demos/03_abstract_actions.py [--out runs/demo] [--steps 600]
"""

import argparse
from collections import Counter

import torch

from deepaif import pipeline
from deepaif.config import load_config
from deepaif.training import RunPaths, action_windows, code_usage, load_stage

parser = argparse.ArgumentParser()
parser.add_argument("--out", default="runs/demo")
parser.add_argument("--steps", type=int, default=600)
args = parser.parse_args()

cfg = load_config("configs/tiny.ini")
paths = RunPaths(args.out)
if not (paths.data / "index.jsonl").exists():
    pipeline.cmd_gen_data(cfg, args.out)
pipeline.cmd_train(cfg, args.out, "am", steps={"am": args.steps})
am = load_stage(cfg, paths, "am")
data = pipeline.load_data(paths)

windows = torch.from_numpy(action_windows(data, am.cfg.horizon))
with torch.no_grad():
    recon = am.reconstruct(windows)
    codes = [a.codes for a in am.abstract(am.encode(windows))]
print(f"{len(windows)} pattern windows, reconstruction RMSE "
      f"{float((recon - windows).pow(2).mean().sqrt()):.3f} rad")
print("assignments per code (layer x index):")
print(code_usage(am, windows).numpy())

# Which code pairs do the scripted patterns land on?
# windows are grouped by start: every first pattern, then every second one
patterns = [r["pattern_pair"][k] for k in (0, 1) for r in data.records]
by_pattern = {}
for p, c in zip(patterns, codes):
    by_pattern.setdefault(p, Counter())[c] += 1
for p, counter in sorted(by_pattern.items()):
    top = ", ".join(f"{c}x{n}" for c, n in counter.most_common(3))
    print(f"{p:>10}: {top}")

# The finite candidate set the planner searches over.
cands = am.enumerate_abstract_actions()
print(f"{len(cands)} candidate abstract actions, first {cands[0].label}, last {cands[-1].label}")
