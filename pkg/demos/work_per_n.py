"""
Work per value of n
===================
"""
import numpy as np

from deltanu import compute_bounds, delta_nu_record, new_semigroup, w_set

S = new_semigroup([3, 10, 14])
N0 = compute_bounds(S).N0
ns = np.arange(N0, N0 + 501, 50)
fast = [delta_nu_record(S, int(n), method="fast").evaluated_elements for n in ns]
full = [len(w_set(S, int(n))) for n in ns]

# the windowed count stays flat while |W(n)| grows linearly
for n, a, b in zip(ns, fast, full):
    print(n, a, b)
