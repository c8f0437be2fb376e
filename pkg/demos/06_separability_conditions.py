"""When does a feature matrix let a GNN separate two graphs?

Three sufficient conditions, checked mechanically: (1) the feature rows
already differ as multisets; (2) an eigenvalue exclusive to one graph has an
eigenspace the features can see; (3) a shared eigenvalue has different
multiplicities and the features reach outside the shared part of the two
eigenspaces. The all-ones input fails all three on the example pairs; the
closed-walk features pass condition 1 immediately.
"""

import numpy as np

from spectrawl import (
    abs_eigvec_test,
    check_separability_conditions,
    corpus_graph,
    diag_powers,
    from_edge_list,
)

prism, k33 = corpus_graph("prism"), corpus_graph("k33")
ones = np.ones((6, 1))

print("prism vs k33, all-ones features:")
print(" ", check_separability_conditions(prism, k33, ones, ones))

print("prism vs k33, closed-walk features diag(S^0..S^3):")
print(" ", check_separability_conditions(prism, k33, diag_powers(prism, 4), diag_powers(k33, 4)))

# condition 2: an exclusive eigenvalue visible to the all-ones signal
p3 = from_edge_list(3, [(0, 1), (1, 2)], name="path3")
k3 = from_edge_list(3, [(0, 1), (1, 2), (0, 2)], name="triangle")
print("\npath vs triangle, all-ones features (exclusive eigenvalue, visible):")
print(" ", check_separability_conditions(p3, k3, np.ones((3, 1)), np.ones((3, 1))))

# condition 3: shared eigenvalue, different multiplicities
g_empty = from_edge_list(4, [], name="empty4")
g_edge = from_edge_list(4, [(0, 1)], name="one-edge4")
print("\nempty vs one-edge on 4 nodes (shared eigenvalue 0, multiplicity 4 vs 2):")
print(" ", check_separability_conditions(g_empty, g_edge, np.ones((4, 1)), np.ones((4, 1))))

# the absolute-eigenvector comparison applies only to equal simple spectra
relabeled = from_edge_list(3, [(1, 0), (0, 2)], name="path3-relabeled")
print("\nabsolute-eigenvector test:")
print(f"  path vs relabeled path: {abs_eigvec_test(p3, relabeled)}")
print(f"  prism vs k33:           {abs_eigvec_test(prism, k33)} (spectra differ)")
