"""
Training with an always-open gate
=================================

A short run on the easy junction through the experiment layer, then a
greedy evaluation of the final checkpoint. The full acceptance runs use 600
epochs; this one is cut down to finish in about a minute.
"""

import json
import os
import tempfile

from sparsecomm import experiment as ex

out = os.path.join(tempfile.mkdtemp(), "fixed_proto")
cfg = {
    "env": {"name": "tj-easy"},
    "mode": "fixed-proto",
    "policy": {"hidden": 64, "n_protos": 28, "d_p": 32},
    "train": {"workers": 2, "batch_steps": 250, "mini_updates": 4, "epochs": 100},
    "seeds": [0],
}
ex.train(cfg, out)

rows, _ = ex.read_metrics(os.path.join(out, "seed_0", "metrics.jsonl"))
w = ex.windowed([r["success_rate"] for r in rows], 10)
print(f"windowed training success: first {w[9]:.3f}, last {w[-1]:.3f}")

res = ex.evaluate(os.path.join(out, "seed_0", "ckpt_final.json"), episodes=200)
print(json.dumps({k: res[k] for k in ("success_rate", "c", "distinct_protos")}))
print("prototype usage:", res["proto_histogram"])
