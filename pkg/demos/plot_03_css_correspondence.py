"""
From encoders to CSS pairs and back
===================================

The Z-distance of the pair is one more than the ZK threshold; the
X-distance controls how many errors can be corrected.
"""

import numpy as np

from zkcss import PrimeField, RandomizedEncoder, css_rate, css_to_zk, distance_x, distance_z, gallery, roundtrip_check, zk_to_css
from zkcss.zkenc import max_decoding_radius, max_zk_threshold

# %%
# The fixture gallery.
for name, Q in gallery().items():
    print(f"{name:9s} n={Q.n} rate={css_rate(Q)} d_X={distance_x(Q)} d_Z={distance_z(Q)}")

# %%
# Steane's pair becomes an encoder with one message symbol.
E = css_to_zk(gallery()["steane"]).encoder
print(E.generator.array)
print("max t-ZK", max_zk_threshold(E, method="oracle"), "max e", max_decoding_radius(E, method="pairwise"))

# %%
# Random encoders keep their thresholds through a round trip, though the
# generator may change.
rng = np.random.default_rng(4)
for _ in range(3):
    E = RandomizedEncoder.random(PrimeField(3), 6, 3, 1, rng)
    Q = zk_to_css(E).css
    print(distance_x(Q), distance_z(Q), roundtrip_check(E, method="oracle").ok)
