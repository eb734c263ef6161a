"""Render results/RESULTS.md from the JSON records written by demos 03-05."""
import json
from pathlib import Path

from prose_fd.data import Dataset
from prose_fd.experiments import reference_errors

root = Path(__file__).resolve().parent.parent
res = root / "results"


def load(name):
    p = res / f"{name}.json"
    return json.loads(p.read_text()) if p.exists() else None


out = ["# Recorded desk-scale runs", ""]
out.append("Each section is generated from the JSON record next to this file. The records hold the full resolved "
           "configuration and the evaluation curve.")
out.append("")

rec = load("overfit_swe")
if rec:
    m = rec["machine"]
    out += ["## Overfit: 16 SWE trajectories", "",
            f"Seed {rec['seed']}, peak lr {rec['train_config']['peak_lr']}, batch {rec['train_config']['batch_size']}, "
            f"{rec['parameters']:,} parameters. Run on {m['cpu_count']} CPU core(s), numpy {m['numpy']}.", "",
            "| step | train rel L2 | mean loss | wall (s) |", "| ---: | ---: | ---: | ---: |"]
    out += [f"| {c['step']} | {c['train_rel_l2']:.4f} | {c['mean_loss']:.4f} | {c['wall_s']:.0f} |" for c in rec["curve"]]
    out += ["", f"Target < 0.05 within 5000 steps and 30 min: "
            f"{'reached' if rec['reached'] else 'not reached'} at step {rec['steps']} after {rec['wall_s']:.0f} s.", ""]

rec = load("generalization")
if rec:
    tc = rec["train_config"]
    out += ["## Generalization: 512 mixed SWE + INS trajectories", "",
            f"{rec['n_per_family']} trajectories per family, split 80/10/10. Data and model seed {rec['seed']}, "
            f"peak lr {tc['peak_lr']}, batch {tc['batch_size']}, {rec['steps']} steps, "
            f"{rec['wall_s'] / 3600:.2f} h wall.", "",
            "| family | test trajectories | rel L2 mean | rel L2 std | below 0.20 |", "| --- | ---: | ---: | ---: | --- |"]
    for f, r in rec["test"].items():
        out.append(f"| {f} | {r['n']} | {r['mean']:.4f} | {r['std']:.4f} | {'yes' if r['mean'] < 0.2 else 'no'} |")
    out += ["", "Validation curve:", "", "| step | " + " | ".join(rec["families"]) + " | wall (s) |",
            "| ---: | " + " | ".join("---:" for _ in rec["families"]) + " | ---: |"]
    for c in rec["curve"]:
        out.append(f"| {c['step']} | " + " | ".join(f"{c['val'][f]:.4f}" for f in rec["families"])
                   + f" | {c['wall_s']:.0f} |")
    work = res / "work_generalization"
    if work.exists():
        b = reference_errors({f: Dataset.load(work / f"{f}_test.pfdd") for f in rec["families"]})
        out += ["", "Reference predictors on the same test split (no training):", "",
                "| family | copy last input frame | input-window mean |", "| --- | ---: | ---: |"]
        out += [f"| {f} | {v['copy_last']:.4f} | {v['window_mean']:.4f} |" for f, v in b.items()]
    out.append("")

rec = load("ablation")
if rec:
    out += ["## Ablation", "",
            f"{rec['n_per_family']} trajectories per family ({', '.join(rec['families'])}), {rec['steps']} steps per "
            f"run, batch {rec['train_config']['batch_size']}, seeds {rec['seeds']}. Test-split relative L2.", "",
            "| model | parameters | mean | std | per seed |", "| --- | ---: | ---: | ---: | --- |"]
    for r in rec["rows"]:
        out.append(f"| {r['model']} | {r['params']:,} | {r['mean']:.4f} | {r['std']:.4f} | "
                   + ", ".join(f"{e:.4f}" for e in r["errors"]) + " |")
    order = [r["model"] for r in sorted(rec["rows"], key=lambda r: r["mean"])]
    out += ["", f"Observed order, best first: {' < '.join(order)}.", ""]

(res / "RESULTS.md").write_text("\n".join(out) + "\n")
print((res / "RESULTS.md").read_text())
