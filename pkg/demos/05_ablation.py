"""Baseline vs rollout vs data-only, same data and seeds, at desk width.

Records the run to results/ablation.json.
"""
import sys
from pathlib import Path

from prose_fd.experiments import ablation_run

root = Path(__file__).resolve().parent.parent
steps = int(sys.argv[1]) if len(sys.argv) > 1 else 400
rec = ablation_run(root / "results" / "ablation.json", root / "results" / "work_ablation", steps=steps,
                   overrides={"train.peak_lr": 1e-3, "train.batch_size": 8})
print(f"\n{rec['wall_s'] / 3600:.2f} h")
