"""Explicit strategies, scored against an exhaustive opponent.

A fixed strategy's guarantee is its score when the other side searches every
reply. Tight strategies meet the exact value.
"""

from catherding import formulas as F
from catherding import generators as gen
from catherding.arena import play
from catherding.solver import Side, best_response_score
from catherding.strategies import (BinaryHerder, CatStrategyC, CutwidthHerder, PathCat,
                                   PathHerder, WheelCat, WheelHerder)

for n in (5, 8, 12):
    g = gen.path(n)
    print(f"P_{n}: path_cat guarantees {best_response_score(g, PathCat(), Side.CAT)}, "
          f"path_herder holds it to {best_response_score(g, PathHerder(), Side.HERDER)}, "
          f"value {F.path_value(n)}")

for n in (4, 5, 6):
    g = gen.wheel(n)
    print(f"W_{n}: wheel_cat {best_response_score(g, WheelCat(), Side.CAT)}, "
          f"wheel_herder {best_response_score(g, WheelHerder(), Side.HERDER)}, value {n + 1}")

for n in range(2, 7):
    g = gen.complete(n)
    print(f"K_{n}: cat strategy C vs binary herder scores {play(g, CatStrategyC(), BinaryHerder()).score}, "
          f"c_n = {F.c_recurrence(n)}")

g = gen.hypercube(3)
cw, order = F.cutwidth(g)
score = best_response_score(g, CutwidthHerder(order), Side.HERDER)
print(f"Q_3: cutwidth {cw}, cutwidth herder holds the cat to {score} "
      f"(bound {F.cutwidth_bound(cw, g.n)})")
