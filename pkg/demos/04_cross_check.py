"""Three independent routes to the same numbers.

1. the engine: orthonormal logical basis, reshape-and-project;
2. the oracle: coherent (nonorthogonal) basis, Gram metric, explicit 8x8 projectors;
3. the published closed forms and tables, transcribed as printed.

Engine and oracle must agree to 1e-10; published expressions are only reported.
"""
import math
from collections import Counter

from spincat.oracle import Grid, adjudicate

grid = Grid(p=(0.0, 0.3, 0.6, 0.9), j=(1.0, 2.0), m=(0, 1),
            omega=(0.0, math.pi / 2, math.pi), depth=2)
reports = adjudicate(grid)
print(f"{len(grid)} points, {len(reports)} comparisons")
print(Counter(r.verdict for r in reports))
print(f"max |engine - oracle| = {max(abs(r.engine - r.oracle) for r in reports):.2e}")

# Which printed quantities miss, and by how much at worst?
worst = {}
for r in reports:
    if r.verdict != "AGREE" and r.paper is not None:
        worst[r.quantity] = max(worst.get(r.quantity, 0.0), r.deviation)
for k in sorted(worst):
    print(f"  {k:<34} worst deviation {worst[k]:.3g}")
