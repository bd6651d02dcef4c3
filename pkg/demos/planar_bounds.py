"""Formula-level checks for the planar bounds.

The grid gadget replaces each edge of a p x p grid by k parallel paths of
length two. Its size and maximum degree follow closed formulas, and the
cat's guarantee kp stays above the square-root lower bound.
"""

from catherding import formulas as F
from catherding import generators as gen

print("p k   n  Delta  kp  sqrt bound  planar upper")
for p in range(3, 7):
    for k in range(1, 4):
        g = gen.grid_gadget(p, k)
        n, delta = F.grid_size(p, k)
        assert (n, delta) == (g.n, max(g.degree(v) for v in range(g.n)))
        lower = F.GRID_CONSTANT * (delta * n) ** 0.5
        print(f"{p} {k} {n:4d} {delta:5d} {F.gr_lower(p, k):3d} {lower:11.3f} "
              f"{F.planar_upper(n, delta):13.1f}")
