"""Walk through the two input encodings: equation tokens and field patches."""
import numpy as np

from prose_fd import symbolic as sy
from prose_fd.equations import REFERENCE_SYSTEMS, sample_system_text
from prose_fd.patching import PatchConfig, patchify, unpatchify

vocab = sy.default_vocabulary()
print(f"vocabulary: {len(vocab)} tokens")

# A shallow-water system with one sampled gravity constant.
text = sample_system_text("swe", {"g_r": 1.0})
print("\nequation text:\n ", text)
seq = sy.encode_system(text)
print(f"\nPolish tokens ({len(seq.ids)}):\n ", " ".join(seq.tokens()))
back = sy.system_from_polish(seq.tokens())
print("\ndecoded back to text:\n ", "; ".join(sy.to_text(e) for e in back))

# constants: sign, three-digit mantissa, exponent
for v in (9.81, -0.5, 0.00123):
    toks = sy.encode_constant(v)
    print(f"  {v!r:>8} -> {toks} -> {sy.decode_constant(toks)}")

print("\nreference systems that round-trip through the codec:")
for key in REFERENCE_SYSTEMS:
    s = sy.parse_system(REFERENCE_SYSTEMS[key])
    ok = sy.system_from_polish(sy.to_polish(s)) == s
    print(f"  {key:18s} {len(sy.to_polish(s)):4d} tokens  round trip {ok}")

# Patches: 10 frames of a 3-channel 32x32 field, 4x4 patches per frame.
cfg = PatchConfig(p_in=4, p_out=8, grid=32)
x = np.random.default_rng(0).normal(size=(10, 3, 32, 32))
tok = patchify(x, cfg)
print(f"\nfield {x.shape} -> tokens {tok.shape} "
      f"({cfg.in_tokens_per_frame} per frame, {cfg.in_dim} values each, channels padded to {cfg.c_max})")
print("bitwise round trip:", unpatchify(tok, cfg, channels=3, p=cfg.p_in).tobytes() == x.tobytes())
