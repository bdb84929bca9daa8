"""Randomized linear encoders and their zero-knowledge and decoding properties.

An encoder is a generator matrix ``G`` (``n x k``) together with a message
length ``k_prime``. A message ``m`` is encoded as ``G @ (m || r)`` with
``r`` uniform over GF(p)^(k - k_prime). Zero knowledge is a property of
the pair ``(G, k_prime)``, not of the code alone.

Index sets are 0-based throughout. All ``t``-ZK deciders look at index sets of
size exactly ``t``; since a restriction of equal distributions is equal,
``t``-ZK implies ``t'``-ZK for every ``t' <= t``. A threshold ``t`` larger than
``n`` is treated as ``n``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .code import DEFAULT_BUDGET, LinearCode
from .errors import BudgetExceededError
from .field import PrimeField
from .matrix import Matrix, _rank_array, rank, solvable_columns, solve, vector_chunks


class RandomizedEncoder:
    """The map ``m -> G (m || r)`` for a fixed generator ``G``."""

    def __init__(self, generator: Matrix, k_prime: int):
        k = generator.cols
        if not 0 < k_prime < k:
            raise ValueError(f"need 0 < k_prime < k, got k_prime={k_prime}, k={k}")
        if rank(generator) != k:
            raise ValueError("generator columns are not linearly independent")
        self.generator = generator
        self.k_prime = int(k_prime)

    @classmethod
    def random(cls, field: PrimeField, n: int, k: int, k_prime: int, rng: np.random.Generator) -> RandomizedEncoder:
        """Uniformly random full-rank ``n x k`` generator (by rejection)."""
        if not 0 < k <= n:
            raise ValueError(f"need 0 < k <= n, got n={n}, k={k}")
        while True:
            G = Matrix(field, rng.integers(0, field.p, size=(n, k)))
            if rank(G) == k:
                return cls(G, k_prime)

    @cached_property
    def code(self) -> LinearCode:
        return LinearCode.from_generator(self.generator)

    @property
    def field(self) -> PrimeField:
        return self.generator.field

    @property
    def n(self) -> int:
        return self.generator.rows

    @property
    def k(self) -> int:
        return self.generator.cols

    @property
    def randomness_length(self) -> int:
        return self.k - self.k_prime

    @property
    def message_block(self) -> Matrix:
        return self.generator.take_cols(range(self.k_prime))

    @property
    def randomness_block(self) -> Matrix:
        return self.generator.take_cols(range(self.k_prime, self.k))

    @cached_property
    def css(self):
        """The CSS pair of this encoder (see :func:`zkcss.equiv.zk_to_css`)."""
        from .equiv import zk_to_css

        return zk_to_css(self).css

    def __repr__(self):
        return f"RandomizedEncoder(n={self.n}, k={self.k}, k_prime={self.k_prime}, {self.field})"

    def __eq__(self, other):
        if not isinstance(other, RandomizedEncoder):
            return NotImplemented
        return self.k_prime == other.k_prime and self.generator == other.generator

    def __hash__(self):
        return hash((self.k_prime, self.generator))


@dataclass(frozen=True)
class RestrictionDistribution:
    """Exact law of ``Enc(m)`` restricted to ``index_set``.

    ``counts`` maps each restricted word to the number of randomness vectors
    producing it; the counts sum to ``total = p^(k - k_prime)``.
    """

    index_set: tuple[int, ...]
    counts: dict
    total: int

    def probability(self, word) -> Fraction:
        return Fraction(self.counts.get(tuple(int(x) for x in word), 0), self.total)

    @property
    def support(self) -> set:
        return set(self.counts)

    def is_uniform(self, p: int) -> bool:
        size = p ** len(self.index_set)
        if len(self.counts) != size:
            return False
        return all(c * size == self.total for c in self.counts.values())


def _check_t(E: RandomizedEncoder, t: int) -> int:
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    return min(int(t), E.n)


def _split(E: RandomizedEncoder, v, length: int, name: str) -> np.ndarray:
    v = np.asarray(v, dtype=np.int64).reshape(-1)
    if v.shape[0] != length:
        raise ValueError(f"{name} has length {v.shape[0]}, expected {length}")
    return v % E.field.p


def encode(E: RandomizedEncoder, m, r) -> np.ndarray:
    m = _split(E, m, E.k_prime, "message")
    r = _split(E, r, E.randomness_length, "randomness")
    return E.generator @ np.concatenate([m, r])


def restriction_distribution(E: RandomizedEncoder, m, I, *, budget: int = DEFAULT_BUDGET) -> RestrictionDistribution:
    p = E.field.p
    m = _split(E, m, E.k_prime, "message")
    I = tuple(sorted(int(i) for i in I))
    if any(not 0 <= i < E.n for i in I):
        raise ValueError(f"index set {I} is not inside [0, {E.n})")
    if p**E.randomness_length > budget:
        raise BudgetExceededError(
            f"{p}^{E.randomness_length} randomness vectors exceed the budget of {budget}; "
            "use is_t_zk_support or is_t_zk_algebraic instead"
        )
    G = E.generator.array[list(I), :].reshape(len(I), E.k)
    base = G[:, : E.k_prime] @ m
    counts: dict[tuple, int] = {}
    for _, rs in vector_chunks(p, E.randomness_length):
        words = (rs @ G[:, E.k_prime :].T + base) % p
        keys, freq = np.unique(words, axis=0, return_counts=True)
        for key, c in zip(map(tuple, keys.tolist()), freq.tolist()):
            counts[key] = counts.get(key, 0) + c
    return RestrictionDistribution(I, counts, p**E.randomness_length)


# -- definitional oracle -----------------------------------------------------


def _oracle_budget(E: RandomizedEncoder, t: int, budget: int):
    cost = math.comb(E.n, t) * E.field.p**E.k
    if cost > budget:
        raise BudgetExceededError(
            f"exhaustive ZK check costs {cost} restricted encodings, beyond the budget of {budget}"
        )


def _subset_batches(n: int, t: int, size: int = 256):
    combos = itertools.combinations(range(n), t)
    while True:
        batch = list(itertools.islice(combos, size))
        if not batch:
            return
        yield batch


def find_leaking_set(
    E: RandomizedEncoder, t: int, *, all_pairs: bool = False, budget: int = DEFAULT_BUDGET
) -> tuple[int, ...] | None:
    """First index set of size ``t`` on which two messages have different laws.

    Every message's restricted distribution is tabulated exactly from the
    full list of ``p^k`` encodings. By default each message is compared with
    the zero message; ``all_pairs=True`` compares every pair instead.
    """
    t = _check_t(E, t)
    if t == 0:
        return None
    _oracle_budget(E, t, budget)
    p, n = E.field.p, E.n
    M, R = p**E.k_prime, p**E.randomness_length
    words = np.vstack([z @ E.generator.array.T % p for _, z in vector_chunks(p, E.k)])
    use_keys = t * math.log2(p) < 62
    for batch in _subset_batches(n, t):
        if use_keys:
            W = np.zeros((n, len(batch)), dtype=np.int64)
            for s, I in enumerate(batch):
                W[list(I), s] = p ** np.arange(t, dtype=np.int64)
            keys = np.sort((words @ W).reshape(M, R, len(batch)), axis=1)
            if all_pairs:
                ok = np.ones(len(batch), dtype=bool)
                for a, b in itertools.combinations(range(M), 2):
                    ok &= (keys[a] == keys[b]).all(axis=0)
            else:
                ok = (keys == keys[:1]).all(axis=(0, 1))
            bad = np.flatnonzero(~ok)
            if bad.size:
                return batch[int(bad[0])]
        else:
            for I in batch:
                sub = words[:, list(I)].reshape(M, R, t)
                laws = [sorted(map(tuple, block.tolist())) for block in sub]
                pairs = itertools.combinations(range(M), 2) if all_pairs else ((0, b) for b in range(1, M))
                if any(laws[a] != laws[b] for a, b in pairs):
                    return I
    return None


def is_t_zk_oracle(E: RandomizedEncoder, t: int, *, all_pairs: bool = False, budget: int = DEFAULT_BUDGET) -> bool:
    """Check ``t``-ZK straight from the definition, by exhaustive enumeration."""
    return find_leaking_set(E, t, all_pairs=all_pairs, budget=budget) is None


# -- support criterion -------------------------------------------------------


def support_contains_zero(E: RandomizedEncoder, m, I) -> bool:
    """Whether some randomness makes the encoding of ``m`` vanish on ``I``.

    Solves ``B_I r = -A_I m`` where ``A_I`` and ``B_I`` are the message and
    randomness blocks of ``G`` restricted to rows ``I``.
    """
    p = E.field.p
    m = _split(E, m, E.k_prime, "message")
    I = sorted(int(i) for i in I)
    if not I:
        return True
    A = E.message_block.take_rows(I)
    B = E.randomness_block.take_rows(I)
    return solve(B, (-(A @ m)) % p) is not None


def find_unsupported_set(E: RandomizedEncoder, t: int) -> tuple[int, ...] | None:
    """First size-``t`` set on which some unit message cannot encode to zero.

    The messages whose encodings can vanish on ``I`` form a subspace, so
    unit messages suffice; all of them are solved in one elimination.
    """
    t = _check_t(E, t)
    if t == 0:
        return None
    A, B = E.message_block.array, E.randomness_block.array
    for I in itertools.combinations(range(E.n), t):
        rows = list(I)
        ok = solvable_columns(Matrix(E.field, B[rows]), Matrix(E.field, -A[rows]))
        if not ok.all():
            return I
    return None


def is_t_zk_support(E: RandomizedEncoder, t: int) -> bool:
    return find_unsupported_set(E, t) is None


# -- algebraic criterion -----------------------------------------------------


def is_t_zk_algebraic(E: RandomizedEncoder, t: int, *, budget: int = DEFAULT_BUDGET) -> bool:
    """``t``-ZK holds exactly when the Z-distance of the encoder's CSS pair exceeds ``t``.

    Raises :class:`BudgetExceededError` only when the distance search is cut
    short before it can certify a bound above ``t``.
    """
    t = _check_t(E, t)
    from .css import distance_z

    try:
        return distance_z(E.css, budget=budget) > t
    except BudgetExceededError as exc:
        if exc.lower_bound is not None and exc.lower_bound > t:
            return True
        raise


def zk_witness(E: RandomizedEncoder, t: int, *, budget: int = DEFAULT_BUDGET):
    """A vector of weight at most ``t`` in ``C_Z`` but not in ``C_X``'s dual, or ``None``.

    Its support is a set of at most ``t`` coordinates whose combination
    reveals part of the message.
    """
    from .code import low_weight_witness

    t = _check_t(E, t)
    Q = E.css
    return low_weight_witness(Q.cz, Q.cx.dual(), t, budget=budget)


# -- uniform ZK and the stronger row condition --------------------------------


def is_uniform_t_zk(E: RandomizedEncoder, t: int, *, method: str = "auto", budget: int = DEFAULT_BUDGET) -> bool:
    """Whether every size-``t`` restriction of every encoding is exactly uniform.

    ``method="enumerate"`` tabulates the restricted distributions;
    ``method="rank"`` checks that the randomness block restricted to each
    index set has full row rank; ``"auto"`` enumerates when affordable.
    """
    t = _check_t(E, t)
    if t == 0:
        return True
    if method == "auto":
        try:
            _oracle_budget(E, t, budget)
            method = "enumerate"
        except BudgetExceededError:
            method = "rank"
    if method == "rank":
        return _randomness_rows_independent(E, t)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    _oracle_budget(E, t, budget)
    p, n = E.field.p, E.n
    M, R = p**E.k_prime, p**E.randomness_length
    size = p**t
    if R % size:
        return False
    expected = np.repeat(np.arange(size, dtype=np.int64), R // size)
    words = np.vstack([z @ E.generator.array.T % p for _, z in vector_chunks(p, E.k)])
    for batch in _subset_batches(n, t):
        W = np.zeros((n, len(batch)), dtype=np.int64)
        for s, I in enumerate(batch):
            W[list(I), s] = p ** np.arange(t, dtype=np.int64)
        keys = np.sort((words @ W).reshape(M, R, len(batch)), axis=1)
        if not (keys == expected[None, :, None]).all():
            return False
    return True


def _randomness_rows_independent(E: RandomizedEncoder, t: int) -> bool:
    B = E.randomness_block.array
    p = E.field.p
    if t > E.randomness_length:
        return False
    return all(_rank_array(B[list(I)], p) == t for I in itertools.combinations(range(E.n), t))


def stronger_row_condition(E: RandomizedEncoder, t: int) -> bool:
    """No nonzero combination of at most ``t`` rows of ``G`` vanishes on the randomness block.

    Equivalently, every ``t`` rows of the randomness block are independent.
    This is sufficient for ``t``-ZK but not necessary.
    """
    t = _check_t(E, t)
    if t == 0:
        return True
    return _randomness_rows_independent(E, t)


# -- decoding ----------------------------------------------------------------


def decode(E: RandomizedEncoder, w, *, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Message part of the ``z`` whose encoding ``G z`` is closest to ``w``.

    Ties go to the lexicographically smallest ``z``.
    """
    p = E.field.p
    w = _split(E, w, E.n, "received word")
    if p**E.k > budget:
        raise BudgetExceededError(f"decoding enumerates {p}^{E.k} vectors, beyond the budget of {budget}")
    best_d, best_z = E.n + 1, None
    for _, zs in vector_chunks(p, E.k):
        d = np.count_nonzero((zs @ E.generator.array.T % p) != w, axis=1)
        i = int(np.argmin(d))
        if d[i] < best_d:
            best_d, best_z = int(d[i]), zs[i]
    return best_z[: E.k_prime].copy()


def is_decodable_from(E: RandomizedEncoder, e: int, *, budget: int = DEFAULT_BUDGET) -> bool:
    """Decodability from ``e`` errors, decided as ``d_X > 2e`` on the encoder's CSS pair."""
    if e < 0:
        raise ValueError(f"e must be non-negative, got {e}")
    from .css import distance_x

    return distance_x(E.css, budget=budget) > 2 * e


def message_separation(E: RandomizedEncoder, *, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum distance between encodings of two distinct messages.

    Computed over all pairs ``(m, r), (m', r')`` with ``m != m'``; no
    linearity shortcut is taken.
    """
    p, k = E.field.p, E.k
    N = p**k
    # pair comparisons are cheap vectorized ops, hence the looser cap
    if N * N > budget * 64:
        raise BudgetExceededError(f"pairwise comparison of {N} encodings exceeds the budget")
    small = np.uint8 if p < 256 else np.uint16
    words = np.vstack([z @ E.generator.array.T % p for _, z in vector_chunks(p, k)]).astype(small)
    msg = np.arange(N) // p**E.randomness_length
    best = E.n + 1
    step = max(1, (1 << 23) // max(1, N * E.n))
    for start in range(0, N, step):
        block = words[start : start + step]
        d = (block[:, None, :] != words[None, :, :]).sum(axis=2, dtype=np.int16)
        d[msg[start : start + step, None] == msg[None, :]] = E.n + 1
        best = min(best, int(d.min()))
        if best == 0:
            break
    return best


def error_patterns(p: int, n: int, e: int):
    """Every vector of GF(p)^n with weight at most ``e``."""
    yield np.zeros(n, dtype=np.int64)
    for w in range(1, e + 1):
        for support in itertools.combinations(range(n), w):
            for values in itertools.product(range(1, p), repeat=w):
                y = np.zeros(n, dtype=np.int64)
                y[list(support)] = values
                yield y


def ball_size(p: int, n: int, e: int) -> int:
    return sum(math.comb(n, w) * (p - 1) ** w for w in range(min(e, n) + 1))


def is_decodable_oracle(
    E: RandomizedEncoder, e: int, *, method: str = "pairwise", budget: int = DEFAULT_BUDGET
) -> bool:
    """Decodability from ``e`` errors checked without the CSS reduction.

    ``method="pairwise"`` asks that encodings of distinct messages lie more
    than ``2e`` apart (then the radius-``e`` balls are disjoint and nearest
    decoding succeeds). ``method="decoder"`` runs :func:`decode` on
    ``Enc(m, r) + y`` for every ``m``, ``r`` and every ``y`` of weight at
    most ``e``.
    """
    if e < 0:
        raise ValueError(f"e must be non-negative, got {e}")
    if method == "pairwise":
        return message_separation(E, budget=budget) > 2 * e
    if method != "decoder":
        raise ValueError(f"unknown method {method!r}")
    p, n, k = E.field.p, E.n, E.k
    if p**k * ball_size(p, n, e) > budget:
        raise BudgetExceededError("exhaustive decoder check exceeds the budget")
    zs = np.vstack([z for _, z in vector_chunks(p, k)])
    words = zs @ E.generator.array.T % p
    received = np.vstack([(words + y) % p for y in error_patterns(p, n, e)])
    sent = np.tile(zs[:, : E.k_prime], (len(received) // len(words), 1))
    step = max(1, (1 << 22) // max(1, len(words) * n))
    for start in range(0, len(received), step):
        block = received[start : start + step]
        d = (block[:, None, :] != words[None, :, :]).sum(axis=2)
        guess = zs[np.argmin(d, axis=1), : E.k_prime]
        if (guess != sent[start : start + step]).any():
            return False
    return True


# -- thresholds --------------------------------------------------------------


def max_zk_threshold(E: RandomizedEncoder, *, method: str = "algebraic", budget: int = DEFAULT_BUDGET) -> int:
    """Largest ``t`` in ``[0, n]`` for which the encoder is ``t``-ZK."""
    if method == "algebraic":
        from .css import distance_z

        return min(distance_z(E.css, budget=budget) - 1, E.n)
    deciders = {
        "oracle": lambda t: is_t_zk_oracle(E, t, budget=budget),
        "support": lambda t: is_t_zk_support(E, t),
    }
    if method not in deciders:
        raise ValueError(f"unknown method {method!r}")
    t = 0
    while t < E.n and deciders[method](t + 1):
        t += 1
    return t


def max_decoding_radius(E: RandomizedEncoder, *, method: str = "algebraic", budget: int = DEFAULT_BUDGET) -> int:
    """Largest ``e`` for which the encoder is decodable from ``e`` errors."""
    if method == "algebraic":
        from .css import distance_x

        return (distance_x(E.css, budget=budget) - 1) // 2
    if method == "pairwise":
        return (message_separation(E, budget=budget) - 1) // 2
    raise ValueError(f"unknown method {method!r}")
