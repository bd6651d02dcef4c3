"""Exact values on small graphs.

The solver searches every line of play, so on a path of nine vertices it
reports what each starting vertex is worth and an optimal game from the best one.
"""

from catherding import generators as gen
from catherding.solver import Solver, optimal_trace

p9 = gen.path(9)
solver = Solver(p9)
print("P_9 values by start vertex:", solver.values())
print("best start and value:", solver.best_start())
print()
print("an optimal game on P_9:")
print(optimal_trace(p9, solver).to_text())

# the extra leaf on the spider's middle vertex raises the middle to 4
print("spider values:", Solver(gen.spider()).values())

for name, g in [("C_7", gen.cycle(7)), ("W_6", gen.wheel(6)), ("K_5", gen.complete(5)),
                ("Q_3", gen.hypercube(3))]:
    s = Solver(g)
    print(f"{name}: cat number {max(s.values())}, {s.nodes} nodes searched")
