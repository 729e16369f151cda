"""Inside one directional spectral layer.

Decomposes an oriented test pattern over the window bank, shows where its
energy lands (scale x orientation), then runs an untrained layer stack
and reads off the scale gates.
"""

import numpy as np

from shearop.fields import Grid2D, ScalarField, rfft2, halfplane_weights
from shearop.frame import FrameSpec, apply_band, get_window_bank
from shearop.operators import ModelConfig, block_forward, init_model

grid = Grid2D.square(64, 0.0, 2.0 * np.pi)
spec = FrameSpec(scales=3, shears=8)
bank = get_window_bank(grid, spec)

# an anisotropic pattern: one steep ridge plus fine oblique stripes
x, y = grid.mesh()
pattern = np.tanh(10.0 * np.sin(x + 4.0 * y)) + 0.3 * np.sin(12.0 * x - 5.0 * y)
field = ScalarField(grid, pattern)
coeffs = rfft2(field)

weights = halfplane_weights(grid.ny)
total = float(np.sum(weights * np.abs(coeffs.coeffs) ** 2))
print(f"{bank.n_bands} bands on a {grid.nx}x{grid.ny} grid; pattern energy {total:.3e}")
print("energy share per band (bands above 1%):")
for m in range(bank.n_bands):
    banded = apply_band(coeffs, bank, m)
    share = float(np.sum(weights * np.abs(banded.coeffs) ** 2)) / total
    if share > 0.01:
        scale = bank.scale_of[m]
        label = "low-pass" if scale == 0 else f"scale {scale}, band {m}"
        print(f"  {label}: {share:6.1%}")

config = ModelConfig(arch="sno", width=1, n_layers=2, frame=spec, mixing_mode="diagonal")
params = init_model(config, seed=0)
print("\nuntrained forward pass through the first operator block:")
out = block_forward(field.as_feature(), params.blocks[0], bank)
print(f"  input range [{pattern.min():+.3f}, {pattern.max():+.3f}]")
print(f"  block output range [{out.values.min():+.3f}, {out.values.max():+.3f}]")

print("scale gates start half-open (sigmoid of 0) and are learned per layer:")
for i, blk in enumerate(params.blocks):
    gates = 1.0 / (1.0 + np.exp(-blk.spectral.gate_logits))
    print(f"  layer {i}: " + ", ".join(f"g{j}={g:.2f}" for j, g in enumerate(gates)))
