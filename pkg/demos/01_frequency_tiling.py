"""How the directional window bank carves up the frequency half-plane.

Builds the production-size bank, prints its structure and tightness, and
renders two tiling images: one coloring each frequency by its dominant
band, one shading by how many bands overlap there.
"""

from pathlib import Path

from shearop.fields import Grid2D
from shearop.frame import FrameSpec, build_windows, export_tiling

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

grid = Grid2D.square(128, 0.0, 6.283185307179586)
spec = FrameSpec(scales=4, shears=64)
bank = build_windows(grid, spec)

print(f"grid {grid.nx}x{grid.ny}, {spec.scales} radial scales, {spec.shears} orientations")
print(f"bands M = {bank.n_bands} (1 low-pass + {spec.scales} x {spec.shears})")
for scale, count in sorted(bank.band_counts().items()):
    label = "low-pass" if scale == 0 else f"scale {scale}"
    print(f"  {label}: {count} band(s)")
print(f"tight-frame deviation max|sum of squared windows - 1| = {bank.frame_deviation():.3e}")

for mode in ("argmax", "count"):
    path = OUT / f"tiling_{mode}.png"
    export_tiling(bank, path, mode=mode)
    print(f"wrote {path}")

# a coarser bank makes the individual wedges visible
small = build_windows(Grid2D.square(64, 0.0, 6.283185307179586), FrameSpec(scales=3, shears=8))
export_tiling(small, OUT / "tiling_coarse.png", mode="argmax")
print(f"wrote {OUT / 'tiling_coarse.png'} (3 scales x 8 orientations)")
