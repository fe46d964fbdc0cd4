"""
Budget sweep and report
=======================

Soft enforcement at several budgets on the small predator-prey grid, then
the CSV tables and SVG plots regenerated from the metrics files alone.
"""

import os
import tempfile

from sparsecomm import experiment as ex

root = tempfile.mkdtemp()
base = {
    "env": {"name": "pp-5x5"},
    "mode": "gated-proto",
    "policy": {"hidden": 32, "n_protos": 16, "d_p": 8},
    "budget": {"mode": "soft"},
    "train": {"workers": 1, "batch_steps": 100, "mini_updates": 2, "epochs": 40},
}
path, rows = ex.sweep(base, {"budget.b": [0.9, 0.5, 0.2]}, os.path.join(root, "sweep"))
print(open(path).read())

cells = sorted(os.path.join(root, "sweep", d) for d in os.listdir(os.path.join(root, "sweep"))
               if d.startswith("cell_"))
rep = ex.report(cells, os.path.join(root, "report"))
for name, p in rep["paths"].items():
    print(f"{name:>15}: {p}")
