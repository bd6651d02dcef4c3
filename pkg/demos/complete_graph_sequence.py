"""The complete-graph sequence c_n and its first differences.

The recurrence and the closed form are computed independently, the closed
form in O(log n) integer steps, and vectorised over a range with numpy.
"""

import numpy as np

from catherding import formulas as F

print("c_2..c_15:", [F.c_recurrence(n) for n in range(2, 16)])
print("Delta_2..Delta_13:", [F.delta_recurrence(n) for n in range(2, 14)])

N = 10**6
rec, closed = F.c_recurrence_array(N), F.c_closed_array(N)
print(f"closed form equals the recurrence for 2..{N}:", bool(np.array_equal(rec[2:], closed[2:])))

n = np.arange(2, N + 1, dtype=np.int64)
c = rec[2:]
print("n^2/3 - 1 <= c_n <= (n^2+n)/3 throughout:",
      bool(np.all(3 * c >= n * n - 3) and np.all(3 * c <= n * n + n)))

big = 10**18
print(f"c_n for n = 10^18: {F.c_closed(big)}")
print(f"c_n / n^2 there: {F.c_closed(big) / big**2:.6f}")
