"""
Exact soundness of the BLR linearity test
=========================================

Every word of length 8 is swept and compared against the 1/4 bound.
"""

from collections import Counter

from zkcss.ltc import blr_hadamard_tester, soundness_sweep

T = blr_hadamard_tester(3)
report = soundness_sweep(T)

# %%
# Worst rejection rate seen at each distance from the code.
worst = {}
for r in report.records:
    worst[r.distance] = min(worst.get(r.distance, r.rejection), r.rejection)
for dist in sorted(worst):
    print(dist, worst[dist], "bound", report.constant * dist / T.n)

# %%
# How many words sit at each distance, and the best constant achieved.
print(Counter(r.distance for r in report.records))
print("all pass:", report.all_passed, "best constant:", report.best_constant)
