"""Generate, train, evaluate and export frames through the command line entry point.

Uses a tiny model so the whole tour takes a few seconds.
"""
import tempfile
from pathlib import Path

from prose_fd.cli import main

TINY = ["model.d_model=16", "model.d_ffn=32", "model.n_heads=2", "model.grid=16", "model.p_in=4",
        "model.p_out=4", "model.layers_data_enc=1", "model.layers_sym_enc=1", "model.layers_fusion=1",
        "model.layers_decoder=1", "train.batch_size=4", "train.total_steps=30", "train.peak_lr=1e-3",
        "train.t0=4", "train.t_out=3", "train.checkpoint_every=10", "train.eval_every=10"]

with tempfile.TemporaryDirectory() as d:
    d = Path(d)
    main(["generate", "--family", "swe", "--n", "10", "--grid", "16", "--frames", "8", "--out", str(d / "data")])
    main(["generate", "--family", "ins", "--n", "10", "--grid", "16", "--frames", "8", "--out", str(d / "data")])
    main(["train", "--data", str(d / "data"), "--set", *TINY, "--out", str(d / "run")])
    print("\nlast log line:", (d / "run" / "train_log.ndjson").read_text().splitlines()[-1])
    print("\nheld-out report:")
    main(["eval", "--checkpoint", str(d / "run" / "final"), "--data", str(d / "data"), "--report", "text"])
    main(["predict", "--checkpoint", str(d / "run" / "final"), "--data", str(d / "data"), "--sample", "0",
          "--export", str(d / "frames")])
    print("\nexported:", sorted(p.name for p in (d / "frames").iterdir())[:6], "...")
