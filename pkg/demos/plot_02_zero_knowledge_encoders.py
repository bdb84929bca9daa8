"""
Zero knowledge of a randomized encoder
======================================

A degree-1 Shamir encoder over GF(5), checked three ways.
"""

from zkcss import Matrix, PrimeField, RandomizedEncoder
from zkcss import zkenc

# %%
# Evaluate ``m + r x`` at x = 1..4. Column 0 carries the message.
F = PrimeField(5)
E = RandomizedEncoder(Matrix(F, [[1, x] for x in range(1, 5)]), k_prime=1)
print(zkenc.encode(E, [2], [1]))

# %%
# A single share is uniform whatever the message.
for m in range(5):
    d = zkenc.restriction_distribution(E, [m], [2])
    print(m, sorted(d.counts.items()))

# %%
# Two shares pin the message down.
d0 = zkenc.restriction_distribution(E, [0], [0, 1])
d1 = zkenc.restriction_distribution(E, [1], [0, 1])
print(d0.support & d1.support)

# %%
# The exhaustive definition, the support test and the distance test agree.
for t in range(E.n + 1):
    row = (zkenc.is_t_zk_oracle(E, t), zkenc.is_t_zk_support(E, t), zkenc.is_t_zk_algebraic(E, t))
    print(t, row)

# %%
# Decoding: one corrupted share is corrected.
w = zkenc.encode(E, [2], [1])
w[3] = (w[3] + 1) % 5
print("decoded", zkenc.decode(E, w), "radius", zkenc.max_decoding_radius(E))
