"""Write the data behind every figure as CSV, the same files `spincat figure` emits."""
import sys
from pathlib import Path

from spincat.figures import FIGURES, default_spec, emit_figure

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figure_data")
for fig in FIGURES:
    if fig == "custom":
        continue
    path = emit_figure(default_spec(fig, out=str(out / f"{fig}.csv")))
    print(f"{fig:<6} {sum(1 for _ in open(path)) - 1:>4} rows -> {path}")

# A sweep no figure covers: success probability after five repeats versus omega.
spec = default_spec("custom", x="omega", start=0.0, stop=3.141592653589793, steps=13,
                    p=(0.9,), j=(1.0, 4.0), depths=(5,), quantity="p_success", out=str(out / "custom.csv"))
print(f"custom {emit_figure(spec)}")
