"""Train on 512 mixed SWE + INS trajectories and score the held-out split.

Records the run to results/generalization.json.
"""
import sys
from pathlib import Path

from prose_fd.experiments import generalization_run

root = Path(__file__).resolve().parent.parent
lr = float(sys.argv[1]) if len(sys.argv) > 1 else 1e-3
steps = int(sys.argv[2]) if len(sys.argv) > 2 else 4000
rec = generalization_run(root / "results" / "generalization.json", root / "results" / "work_generalization",
                         max_steps=steps, time_budget_s=3.7 * 3600, overrides={"train.peak_lr": lr})
for fam, r in rec["test"].items():
    print(f"{fam:4s} held-out relative L2 {r['mean']:.4f} +- {r['std']:.4f} over {r['n']} trajectories")
print(f"{rec['steps']} steps in {rec['wall_s'] / 3600:.2f} h")
