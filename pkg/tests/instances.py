"""Seeded random instance families shared by the acceptance and property tests."""

from __future__ import annotations

import numpy as np

from zkcss import PrimeField, RandomizedEncoder

FIELDS = (2, 3, 5)
FAMILY_SIZE = 500


def random_encoder(p: int, rng: np.random.Generator, max_n: int = 10, max_k: int = 5) -> RandomizedEncoder:
    k = int(rng.integers(2, max_k + 1))
    n = int(rng.integers(k, max_n + 1))
    k_prime = int(rng.integers(1, k))
    return RandomizedEncoder.random(PrimeField(p), n, k, k_prime, rng)


def family(p: int, count: int = FAMILY_SIZE, seed: int = 0, **kwargs) -> list[RandomizedEncoder]:
    rng = np.random.default_rng([p, seed])
    return [random_encoder(p, rng, **kwargs) for _ in range(count)]
