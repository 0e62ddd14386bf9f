"""Closed forms for the three- and four-cycle broom families, checked against
direct BFS distances, and the collapse step that moves all path length onto
one broom.
"""
# %%
import itertools

import numpy as np

from unicyclic_wiener import (
    G3Params,
    G4Params,
    build_g3,
    build_g4,
    collapse_g4,
    delta_g4_collapse,
    wiener_g3_closed,
    wiener_g4_closed,
    wiener_index,
)

# %%
p = G3Params(a=2, b=1, c=0, j=2, k=1, l=0)
g = build_g3(p)
print(p, "order", g.n, "closed", wiener_g3_closed(p), "direct", wiener_index(g))

# %% [markdown]
# Sweep a grid of four-cycle parameters and record the collapse gain.

# %%
gains = []
for v in itertools.product(range(3), repeat=8):
    q = G4Params(*v)
    assert wiener_g4_closed(q) == wiener_index(build_g4(q))
    gains.append(delta_g4_collapse(q))
gains = np.array(gains)
print("cases", gains.size, "min gain", gains.min(), "zero gains", int((gains == 0).sum()))

# %%
q = G4Params(a=1, b=2, c=1, d=0, h=1, j=1, k=2, l=0)
r = collapse_g4(q)
print(q)
print(r, "gain", wiener_g4_closed(r) - wiener_g4_closed(q))
