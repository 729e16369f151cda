"""Training both architectures on one benchmark, in miniature.

Generates the bent-ridge advection case at 32x32, trains a small
directional model and a small Fourier model for 40 epochs each, and
prints the loss trajectory and parameter budgets.  Runs in well under a
minute; everything is derived from one seed.
"""

from pathlib import Path

from shearop.benchmarks import generate_dataset, make_spec
from shearop.frame import FrameSpec
from shearop.operators import ModelConfig, init_model, param_count
from shearop.training import TrainConfig, chronological_split, train_model

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

spec = make_spec("bent_ridge_advect", 32, n_frames=60, seed=0)
ds = generate_dataset(spec)
inputs, targets = ds.pairs()
tr, va, te = chronological_split(inputs.shape[0], (0.6, 0.25, 0.15))
print(f"dataset: {ds.frames.shape[0]} frames at 32x32 -> "
      f"{tr.stop - tr.start} train / {va.stop - va.start} val / {te.stop - te.start} test pairs")

train_cfg = TrainConfig(lr=1e-3, batch_size=16, max_epochs=40, seed=0)

configs = {
    "directional (sno)": ModelConfig(
        arch="sno", width=4, n_layers=2, frame=FrameSpec(scales=2, shears=8),
        mixing_mode="diagonal",
    ),
    "fourier (fno)": ModelConfig(arch="fno", width=4, n_layers=2, modes=(4, 4)),
}

for label, model_cfg in configs.items():
    params = init_model(model_cfg, seed=0)
    print(f"\n{label}: {param_count(params).total:,} parameters")
    result = train_model(
        params, ds.grid, (inputs[tr], targets[tr]), (inputs[va], targets[va]), train_cfg
    )
    for row in result.history[:: max(1, len(result.history) // 5)]:
        print(f"  epoch {row['epoch']:3d}: train mse {row['train_loss']:.3e}, "
              f"val mse {row['val_loss']:.3e}")
    print(f"  best val mse {result.best_val:.3e} at epoch {result.best_epoch}")
