"""
Delta-nu tables
===============

Small n go through the full W(n). From N0 on the windowed path takes over.
"""

from deltanu import delta_nu_table, new_semigroup

for gens in ([3, 10, 11], [3, 10, 14]):
    S = new_semigroup(gens)
    rows = delta_nu_table(S, 70)
    print(S)
    for r in rows[:12] + rows[58:64]:
        print(f"  n={r.n:3d}  {set(r.delta_nu) or '{}'}  {r.method}")

# %%
# the fast path and the naive path agree
from deltanu import delta_nu_fast, delta_nu_naive, compute_bounds

S = new_semigroup([6, 8, 9, 11])
N0 = compute_bounds(S).N0
assert all(delta_nu_fast(S, n) == delta_nu_naive(S, n) for n in range(N0, N0 + 40))
print("fast == naive on", (N0, N0 + 39), "for", S)
