"""Classical linear codes over GF(p)."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import BudgetExceededError, DegenerateCodeError
from .field import PrimeField
from .matrix import (
    Matrix,
    _rank_array,
    image_basis,
    kernel_basis,
    row_basis,
    vector_chunks,
)

DEFAULT_BUDGET = 1 << 22
# codeword enumeration is preferred below this many codewords
ENUMERATION_THRESHOLD = 1 << 16
# cap on support subsets examined by the increasing-weight search
SUBSET_BUDGET = 1 << 16


def hamming_weight(v) -> int:
    return int(np.count_nonzero(np.asarray(v)))


def hamming_distance(u, v) -> int:
    u, v = np.asarray(u), np.asarray(v)
    if u.shape != v.shape:
        raise ValueError(f"length mismatch: {u.shape} vs {v.shape}")
    return int(np.count_nonzero(u != v))


class LinearCode:
    """A subspace of GF(p)^n, held as a generator/parity-check pair.

    Use :meth:`from_generator` or :meth:`from_parity_check` rather than the
    constructor. ``generator`` is ``n x k`` with independent columns and
    ``parity_check`` is ``(n - k) x n`` with independent rows. ``reduced``
    records that the input matrix was rank-deficient and was cut down to an
    independent subset of its columns (or rows).
    """

    def __init__(self, generator: Matrix, parity_check: Matrix, *, reduced: bool = False):
        if generator.field != parity_check.field:
            raise ValueError("generator and parity check live over different fields")
        if parity_check.cols != generator.rows:
            raise ValueError("parity check width does not match block length")
        if generator.cols + parity_check.rows != generator.rows:
            raise ValueError("dimensions of generator and parity check do not add up to n")
        if not (parity_check @ generator).is_zero():
            raise ValueError("parity check does not annihilate the generator")
        self.generator = generator
        self.parity_check = parity_check
        self.reduced = reduced

    @classmethod
    def from_generator(cls, G: Matrix) -> LinearCode:
        basis = image_basis(G)
        H = kernel_basis(basis.T).T
        return cls(basis, H, reduced=basis.cols != G.cols)

    @classmethod
    def from_parity_check(cls, H: Matrix) -> LinearCode:
        checks = image_basis(H.T).T
        G = kernel_basis(checks)
        return cls(G, checks, reduced=checks.rows != H.rows)

    @classmethod
    def full_space(cls, field: PrimeField, n: int) -> LinearCode:
        return cls.from_generator(Matrix.identity(field, n))

    @classmethod
    def zero_code(cls, field: PrimeField, n: int) -> LinearCode:
        return cls.from_parity_check(Matrix.identity(field, n))

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
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    @cached_property
    def canonical_generator(self) -> Matrix:
        """Transpose of the RREF row basis; identical for equal codes."""
        return row_basis(self.generator.T).T

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over {self.field})"

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (self.n,):
            raise ValueError(f"expected a vector of length {self.n}, got shape {v.shape}")
        return not (self.parity_check @ v).any()

    def contains_code(self, other: LinearCode) -> bool:
        """Whether ``other`` is a subspace of this code."""
        if other.n != self.n or other.field != self.field:
            return False
        return (self.parity_check @ other.generator).is_zero()

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.k == other.k and self.contains_code(other) and other.contains_code(self)

    def __hash__(self):
        return hash(self.canonical_generator)

    def encode(self, message) -> np.ndarray:
        message = np.asarray(message, dtype=np.int64)
        if message.shape != (self.k,):
            raise ValueError(f"expected a message of length {self.k}, got shape {message.shape}")
        return self.generator @ message

    def codewords(self, budget: int = DEFAULT_BUDGET) -> np.ndarray:
        """All codewords as rows, ordered lexicographically by message."""
        _check_enumeration(self.field.p, self.k, budget)
        blocks = [m @ self.generator.array.T % self.field.p for _, m in vector_chunks(self.field.p, self.k)]
        return np.vstack(blocks)

    def dual(self) -> LinearCode:
        return LinearCode(self.parity_check.T, self.generator.T)


def from_generator(G: Matrix) -> LinearCode:
    return LinearCode.from_generator(G)


def from_parity_check(H: Matrix) -> LinearCode:
    return LinearCode.from_parity_check(H)


def dual(C: LinearCode) -> LinearCode:
    return C.dual()


def span_code(field: PrimeField, n: int, vectors) -> LinearCode:
    """The code spanned by the given length-``n`` vectors."""
    return LinearCode.from_generator(Matrix.from_columns(field, list(vectors), length=n))


def _check_enumeration(p: int, k: int, budget: int):
    if p**k > budget:
        raise BudgetExceededError(f"enumerating {p}^{k} vectors exceeds the budget of {budget}")


# -- distance ----------------------------------------------------------------


def min_weight(C: LinearCode, *, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum Hamming weight of a nonzero codeword (the code's distance)."""
    if C.k == 0:
        raise DegenerateCodeError("the zero code has no nonzero codewords")
    return min_weight_excluding(C, None, budget=budget)


def min_weight_excluding(C: LinearCode, S: LinearCode | None = None, *, budget: int = DEFAULT_BUDGET) -> int:
    """Smallest weight of a codeword of ``C`` outside the subcode ``S``.

    Small codes are enumerated outright. Larger ones are searched by
    increasing weight over supports: a vector of weight ``w`` exists in
    ``C \\ S`` exactly when some support ``I`` of size ``w`` has
    ``dim(C restricted to I) > dim(S restricted to I)``. If both routes exceed
    the budget, :class:`BudgetExceededError` is raised and its
    ``lower_bound`` is a certified lower bound on the answer.
    """
    return _weight_search(C, S, None, budget)[0]


def low_weight_witness(C: LinearCode, S: LinearCode | None, max_weight: int, *, budget: int = DEFAULT_BUDGET):
    """A vector of ``C \\ S`` of weight at most ``max_weight``, or ``None``."""
    try:
        w, vec = _weight_search(C, S, max_weight, budget)
    except DegenerateCodeError:
        return None
    return vec if w <= max_weight else None


def _weight_search(C: LinearCode, S: LinearCode | None, max_weight: int | None, budget: int):
    if S is None:
        S = LinearCode.zero_code(C.field, C.n)
    if S.n != C.n or S.field != C.field:
        raise ValueError("subcode must share block length and field")
    if not C.contains_code(S):
        raise ValueError("the excluded set is not a subcode of C")
    if S.k == C.k:
        raise DegenerateCodeError("C equals the excluded subcode; nothing to minimize over")
    p, k = C.field.p, C.k
    if p**k <= ENUMERATION_THRESHOLD:
        return _enumerate_excluding(C, S)
    try:
        return _support_search(C, S, max_weight, min(SUBSET_BUDGET, budget))
    except BudgetExceededError as exc:
        if p**k <= budget:
            return _enumerate_excluding(C, S)
        raise BudgetExceededError(
            f"distance search over {p}^{k} codewords exceeds the budget of {budget}",
            lower_bound=exc.lower_bound,
        ) from None


def _enumerate_excluding(C: LinearCode, S: LinearCode):
    p = C.field.p
    best_w, best_vec = C.n + 1, None
    G = C.generator.array.T
    Hs = S.parity_check.array.T
    for _, msgs in vector_chunks(p, C.k):
        words = msgs @ G % p
        outside = (words @ Hs % p).any(axis=1)
        if not outside.any():
            continue
        weights = np.where(outside, np.count_nonzero(words, axis=1), C.n + 1)
        i = int(np.argmin(weights))
        if weights[i] < best_w:
            best_w, best_vec = int(weights[i]), words[i]
    return best_w, best_vec


def _support_search(C: LinearCode, S: LinearCode, max_weight: int | None, subset_budget: int):
    p, n = C.field.p, C.n
    Hc, Hs = C.parity_check.array, S.parity_check.array
    top = n if max_weight is None else min(n, max_weight)
    examined = 0
    for w in range(1, top + 1):
        count = math.comb(n, w)
        if examined + count > subset_budget:
            raise BudgetExceededError("support search budget exhausted", lower_bound=w)
        examined += count
        for I in itertools.combinations(range(n), w):
            cols = list(I)
            if _rank_array(Hs[:, cols], p) > _rank_array(Hc[:, cols], p):
                return w, _witness_on_support(C, S, cols)
    return n + 1, None


def _witness_on_support(C: LinearCode, S: LinearCode, cols):
    sub = kernel_basis(Matrix(C.field, C.parity_check.array[:, cols], shape=(C.parity_check.rows, len(cols))))
    for j in range(sub.cols):
        v = np.zeros(C.n, dtype=np.int64)
        v[cols] = sub.column(j)
        if not S.contains(v):
            return v
    raise AssertionError("support search found no witness")  # unreachable by the rank test


# -- decoding ----------------------------------------------------------------


def nearest_codeword(C: LinearCode, w, *, budget: int = DEFAULT_BUDGET) -> tuple[np.ndarray, int]:
    """Closest codeword to ``w`` and its distance.

    Ties go to the codeword with the lexicographically smallest message
    under ``C.generator``.
    """
    p = C.field.p
    w = np.asarray(w, dtype=np.int64) % p
    if w.shape != (C.n,):
        raise ValueError(f"expected a word of length {C.n}, got shape {w.shape}")
    _check_enumeration(p, C.k, budget)
    best_d, best_c = C.n + 1, None
    G = C.generator.array.T
    for _, msgs in vector_chunks(p, C.k):
        words = msgs @ G % p
        d = np.count_nonzero(words != w, axis=1)
        i = int(np.argmin(d))
        if d[i] < best_d:
            best_d, best_c = int(d[i]), words[i]
    return best_c, best_d


def distance_to_code(C: LinearCode, w, *, budget: int = DEFAULT_BUDGET) -> int:
    return nearest_codeword(C, w, budget=budget)[1]


def weight_distribution(C: LinearCode, *, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Number of codewords of each weight ``0..n``."""
    _check_enumeration(C.field.p, C.k, budget)
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for _, msgs in vector_chunks(C.field.p, C.k):
        words = msgs @ C.generator.array.T % C.field.p
        counts += np.bincount(np.count_nonzero(words, axis=1), minlength=C.n + 1)
    return counts.tolist()


__all__ = [
    "DEFAULT_BUDGET",
    "LinearCode",
    "distance_to_code",
    "dual",
    "from_generator",
    "from_parity_check",
    "hamming_distance",
    "hamming_weight",
    "low_weight_witness",
    "min_weight",
    "min_weight_excluding",
    "nearest_codeword",
    "span_code",
    "weight_distribution",
]

