"""Fit the desk-profile model to 16 shallow-water trajectories.

Records the run to results/overfit_swe.json. Usage: python3 demos/03_overfit_swe.py [peak_lr]
"""
import sys
from pathlib import Path

from prose_fd.experiments import overfit_run

root = Path(__file__).resolve().parent.parent
lr = float(sys.argv[1]) if len(sys.argv) > 1 else 1e-3
rec = overfit_run(root / "results" / "overfit_swe.json", root / "results" / "work_overfit",
                  overrides={"train.peak_lr": lr})
print(f"\n{rec['steps']} steps, train relative L2 {rec['final_train_rel_l2']:.4f}, {rec['wall_s']:.0f}s")
