"""Symmetric Hadamard matrices diagonalize the complete graph.

The doubling construction H_{2k} = H_k (x) H_2 yields symmetric +-1 matrices
with all-ones first column.  X = H/sqrt(n) is then a symmetric orthogonal
eigenvector matrix for the complete graph K_n, the extremal case where the
fundamental weight vector equals its dual.

Run:  python demos/05_hadamard_complete_graph.py
"""

import numpy as np

import spectramark as sm
from spectramark.weights import hadamard_det

for k in range(1, 5):
    n = 2**k
    h = sm.sylvester_hadamard(k)
    det = hadamard_det(k)
    print(f"order {n:>2}: H H' = {n} I exact: "
          f"{np.array_equal(h @ h.T, n * np.eye(n, dtype=np.int64))}, "
          f"symmetric: {np.array_equal(h, h.T)}, |det| = {abs(det)} "
          f"(maximal n^(n/2): {abs(det) == round(n ** (n / 2))})")

print()
print("H_4 =")
print(sm.sylvester_hadamard(2))
print()

for k in (2, 3, 4):
    chk = sm.hadamard_diagonalizes_complete(k)
    n = 2**k
    print(f"n = {n}: complete-graph Laplacian eigenvalues via X Q X = "
          f"{sorted(round(float(v), 10) for v in chk.laplacian_diag)}")
    print(f"        adjacency eigenvalues {sorted(round(float(v), 10) for v in chk.adjacency_diag)}, "
          f"w = phi gap {chk.w_phi_gap:.1e}")
