"""The full comparison pipeline through the command-line interface.

Drives generate -> train (both architectures) -> compare on two fast
benchmarks at 32x32, then prints the resulting report files.  The same
five commands at --n 64 --epochs 300 produce the full desk-scale
comparison (see scripts/run_comparison.sh).
"""

from pathlib import Path

from shearop.cli import main

run = Path(__file__).parent / "output" / "compare_run"
base = ["--out", str(run), "--n", "32", "--seed", "0"]
benches = "bent_ridge_advect,polygonal_shock"

steps = [
    ["generate", *base, "--bench", benches, "--frames", "40"],
    ["train", *base, "--bench", "bent_ridge_advect", "--arch", "sno", "--epochs", "80", "--batch", "8",
     "--width", "4", "--layers", "2", "--scales", "2", "--shears", "8"],
    ["train", *base, "--bench", "bent_ridge_advect", "--arch", "fno", "--epochs", "80", "--batch", "8",
     "--width", "4", "--layers", "2"],
    ["train", *base, "--bench", "polygonal_shock", "--arch", "sno", "--epochs", "80", "--batch", "8",
     "--width", "4", "--layers", "2", "--scales", "2", "--shears", "8"],
    ["train", *base, "--bench", "polygonal_shock", "--arch", "fno", "--epochs", "80", "--batch", "8",
     "--width", "4", "--layers", "2"],
    ["compare", *base, "--bench", benches],
]
for argv in steps:
    print(f"\n$ shearop {' '.join(argv)}")
    rc = main(argv)
    assert rc == 0, f"command failed with exit code {rc}"

report = run / "reports" / "compare"
print(f"\nreport files under {report}:")
for path in sorted(report.rglob("*")):
    if path.is_file():
        print(f"  {path.relative_to(report)}")
print("\nmarkdown summary:\n")
print((report / "table.md").read_text())
