"""
Bounds and windows for <4,9,10,15>
==================================

Every threshold is an exact fraction. Rounding only happens at the end.
"""

from deltanu import compute_bounds, decompose, new_semigroup

S = new_semigroup([4, 9, 10, 15])
B = compute_bounds(S)
print(S, "d =", B.d, "NS =", B.NS)

# the two window widths, then the threshold on n
print("lambda1 =", B.lambda1, "->", B.lambda1_ceil)
print("lambda2 =", B.lambda2, "->", B.lambda2_floor)
print("N0 =", B.N0, "from", [str(t) for t in B.N0_terms])

# %%
# Only two windows of W(n) have to be inspected
for n in (130, 150):
    z = decompose(S, n, B)
    print(n, (z.x1, z.x2), "skipped width", z.x2 - z.x1, "evaluated", z.evaluated_elements)
