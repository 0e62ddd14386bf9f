"""Largest Wiener index among unicyclic graphs, by matching number.

Run with ``python3 demos/01_extremal_table.py``.
"""
# %%
import numpy as np

from unicyclic_wiener import (
    bound_max_unicyclic,
    extremal_set_predicted,
    extremal_table,
    from_graph6,
    wiener_index,
)

# %% [markdown]
# Exhaustive search over every unicyclic graph of order n, grouped by
# matching number m. Each row keeps the maximum W and all graphs reaching it.

# %%
N = 10
rows = extremal_table(N)
for r in rows:
    print(f"n={r.n} m={r.m}  searched={r.count_searched:4d}  w_max={r.w_max:4d}  "
          f"maximisers={[k.decode() for k in r.extremal]}")

# %% [markdown]
# The closed-form bound should agree with every row, and the predicted
# broom-on-a-cycle graphs should be exactly the maximisers found.

# %%
for r in rows:
    if r.m < 2:
        continue
    predicted = extremal_set_predicted(r.n, r.m)
    print(r.m, bound_max_unicyclic(r.n, r.m), [wiener_index(g) for g in predicted])

# %%
# a small table of the bound; rows are n, columns are m
table = np.zeros((13, 7), dtype=np.int64)
for n in range(4, 13):
    for m in range(2, min(n // 2, 6) + 1):
        table[n, m] = bound_max_unicyclic(n, m)
print(table[4:, 2:])

# %%
# the maximiser at (10, 3): a four-cycle with a broom and opposite pendants
g = from_graph6(rows[1].extremal[0])
print(sorted(g.degrees(), reverse=True), g.edges())
