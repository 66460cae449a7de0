"""
Periodicity of Delta-nu
=======================

The proven period is lcm(a1, ap). The observed one is often much smaller.
"""

from deltanu import minimal_period_report, new_semigroup, verify_shift_invariance

for gens in ([3, 10, 11], [3, 10, 14], [4, 7, 9], [5, 12, 16]):
    S = new_semigroup(gens)
    r = minimal_period_report(S)
    print(S, "delta", r.delta, "N0", r.N0, "period", r.minimal_period,
          "preperiod", r.minimal_preperiod, r.residue_table)

# %%
print(verify_shift_invariance(new_semigroup([6, 8, 9, 11]), cycles=2))
