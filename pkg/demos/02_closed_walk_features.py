"""Closed-walk counts as node features.

diag(S^k) counts the closed k-walks at each node: k=2 gives the degree, k=3
twice the triangle count, and higher k mixes neighbor degrees with larger
motifs. A fixed-coefficient module on these counts separates both example
pairs that color refinement misses, reproducing the reference per-node
outputs (10.42 / 1.75 and the 7.5-7.25-5.25 / 7.9-7.65-5.65 patterns).
"""

import numpy as np

from spectrawl import PAIR_FILTER, RELU, closed_walk_count, corpus_graph, diag_powers, diagonal_module

for key in ("prism", "k33", "bihexagon", "bipentagon"):
    g = corpus_graph(key)
    x = diag_powers(g, 6)
    print(f"=== {key} (n={g.n}) ===")
    print("diag(S^k) for k=0..5, one row per node:")
    print(x.astype(int))
    y = diagonal_module(g, PAIR_FILTER, RELU)
    print(f"module output with h={PAIR_FILTER.coeffs}, relu:")
    print(np.round(y, 4))
    print()

# the columns really are walk counts: cross-check one value by enumeration
prism = corpus_graph("prism")
enumerated = closed_walk_count(prism, 0, 4)
from_powers = int(diag_powers(prism, 5)[0, 4])
print(f"closed 4-walks at prism node 0: enumerated={enumerated}, diag(S^4)={from_powers}")

print()
print("prism vs k33: outputs 10.42 vs 1.75 per node, so the pair separates")
print("even though both graphs are 3-regular and refinement-equivalent.")
