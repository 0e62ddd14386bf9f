"""Rewrites that push the Wiener index up: shortening a long cycle, and
moving one leg of a cycle onto the end of another.
"""
# %%
import numpy as np

from unicyclic_wiener import cycle_graph, cycle_swap, path_regraft, random_unicyclic
from unicyclic_wiener.transforms import path_regraft_corpus

# %%
for variant in ("G1", "G2"):
    rep = cycle_swap(cycle_graph(7), variant)
    print(variant, rep.to_dict())

# %% [markdown]
# On random graphs with cycle length 6 the triangle variant wins every time.

# %%
d1, d2 = [], []
for seed in range(200):
    g = random_unicyclic(12, 6, seed)
    d1.append(cycle_swap(g, "G1").delta_wiener)
    d2.append(cycle_swap(g, "G2").delta_wiener)
d1, d2 = np.array(d1), np.array(d2)
print("G1 mean gain", d1.mean(), "G2 mean gain", d2.mean(), "G1 > G2 always:", bool((d1 > d2).all()))

# %%
slack = []
for g, i1, i2 in path_regraft_corpus(200, seed=1):
    rep = path_regraft(g, i1, i2)
    slack.append(rep.delta_wiener - rep.params["lower_bound"])
print("regraft gain minus lower bound: min", min(slack), "max", max(slack))
