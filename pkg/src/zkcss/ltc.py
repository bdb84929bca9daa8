"""Local testers and exact soundness measurement.

A tester is a finite weighted list of checks. Each check queries a few
coordinates of the word and accepts or rejects based on the values read.
Rejection probabilities are exact fractions, computed by running every
check, so completeness and the soundness bound
``reject(w) >= 1/4 * dist(w, C) / n`` can be verified exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .code import DEFAULT_BUDGET, LinearCode
from .errors import BudgetExceededError
from .field import PrimeField
from .matrix import Matrix, all_vectors, vector_chunks

SOUNDNESS_CONSTANT = Fraction(1, 4)
EXHAUSTIVE_LIMIT = 1 << 16


@dataclass(frozen=True)
class Check:
    """Query ``positions`` and accept iff ``predicate(values)`` holds.

    ``coefficients`` is set for linear checks (accept iff the weighted sum
    of the queried values is zero); such checks are vectorized.
    """

    positions: tuple[int, ...]
    predicate: Callable[[tuple[int, ...]], bool] | None = None
    coefficients: tuple[int, ...] | None = None
    weight: int = 1

    def accepts(self, w, p: int) -> bool:
        values = tuple(int(w[i]) for i in self.positions)
        if self.coefficients is not None:
            return sum(c * v for c, v in zip(self.coefficients, values)) % p == 0
        return bool(self.predicate(values))


@dataclass
class LocalTester:
    code: LinearCode
    checks: list[Check]
    query_budget: int
    name: str = "tester"
    vacuous: bool = False

    def __post_init__(self):
        for c in self.checks:
            if len(c.positions) > self.query_budget:
                raise ValueError(f"check on {c.positions} exceeds the query budget {self.query_budget}")
        self.vacuous = not any(len(c.positions) for c in self.checks)
        if self.code.field.p**self.code.k <= EXHAUSTIVE_LIMIT:
            words = self.code.codewords()
            rej = _rejection_counts(self, words)
            if rej.any():
                bad = words[int(np.flatnonzero(rej)[0])]
                raise ValueError(f"tester rejects codeword {bad.tolist()}")

    @property
    def is_linear(self) -> bool:
        return all(c.coefficients is not None for c in self.checks)

    @property
    def total_weight(self) -> int:
        return sum(c.weight for c in self.checks)

    @property
    def n(self) -> int:
        return self.code.n


def _rejection_counts(T: LocalTester, words: np.ndarray) -> np.ndarray:
    """Total weight of rejecting checks, for each row of ``words``."""
    p = T.code.field.p
    words = np.atleast_2d(words)
    out = np.zeros(len(words), dtype=np.int64)
    linear = [c for c in T.checks if c.coefficients is not None]
    if linear:
        A = np.zeros((T.n, len(linear)), dtype=np.int64)
        for j, c in enumerate(linear):
            for pos, coef in zip(c.positions, c.coefficients):
                A[pos, j] = (A[pos, j] + coef) % p
        weights = np.array([c.weight for c in linear], dtype=np.int64)
        out += ((words @ A % p) != 0) @ weights
    for c in T.checks:
        if c.coefficients is None:
            out += np.array([0 if c.accepts(w, p) else c.weight for w in words], dtype=np.int64)
    return out


def parity_sampler_tester(C: LinearCode, H_rows: Matrix) -> LocalTester:
    """Pick a row ``h`` of ``H_rows`` uniformly and accept iff ``<h, w> = 0``.

    Every row must lie in the dual code. The query budget is the largest
    row weight. A zero matrix gives a tester that accepts everything; it is
    flagged as ``vacuous``.
    """
    if H_rows.cols != C.n:
        raise ValueError(f"check rows have length {H_rows.cols}, code length is {C.n}")
    dual = C.dual()
    checks = []
    for i in range(H_rows.rows):
        h = H_rows.row(i)
        if not dual.contains(h):
            raise ValueError(f"row {i} = {h.tolist()} is not in the dual code")
        support = tuple(int(j) for j in np.flatnonzero(h))
        checks.append(Check(support, coefficients=tuple(int(h[j]) for j in support)))
    q = max((len(c.positions) for c in checks), default=0)
    return LocalTester(C, checks, q, name="parity-sampler")


def hadamard_code(message_len: int) -> LinearCode:
    """Binary Hadamard code: the truth tables of all linear forms on GF(2)^m.

    Coordinate ``x`` (an integer in ``[0, 2^m)``) holds ``<a, bits(x)>``,
    where bit ``j`` of ``x`` is ``(x >> j) & 1``.
    """
    F = PrimeField(2)
    n = 1 << message_len
    G = np.array([[(x >> j) & 1 for j in range(message_len)] for x in range(n)], dtype=np.int64)
    return LinearCode.from_generator(Matrix(F, G, shape=(n, message_len)))


def blr_hadamard_tester(message_len: int) -> LocalTester:
    """Linearity test on the Hadamard code: accept iff ``w(x) + w(y) = w(x + y)``.

    One check per ordered pair ``(x, y)``, all of equal weight.
    """
    if not 1 <= message_len <= 4:
        raise ValueError(f"message_len must be in [1, 4], got {message_len}")
    C = hadamard_code(message_len)
    n = C.n
    # repeated positions (x = y, or x or y zero) are summed like any other
    # query, so the check still reads w(x) + w(y) + w(x ^ y) over GF(2)
    checks = [Check((x, y, x ^ y), coefficients=(1, 1, 1)) for x in range(n) for y in range(n)]
    return LocalTester(C, checks, 3, name=f"blr-hadamard-{message_len}")


def exact_rejection_probability(T: LocalTester, w) -> Fraction:
    w = np.asarray(w, dtype=np.int64) % T.code.field.p
    if w.shape != (T.n,):
        raise ValueError(f"expected a word of length {T.n}, got shape {w.shape}")
    if not T.checks:
        return Fraction(0)
    return Fraction(int(_rejection_counts(T, w[None, :])[0]), T.total_weight)


def run_tester(T: LocalTester, w, rng: np.random.Generator) -> bool:
    """One randomized run: sample a check by weight, query, decide. True means accept."""
    if not T.checks:
        return True
    weights = np.array([c.weight for c in T.checks], dtype=float)
    check = T.checks[int(rng.choice(len(T.checks), p=weights / weights.sum()))]
    return check.accepts(np.asarray(w), T.code.field.p)


@dataclass(frozen=True)
class SoundnessRecord:
    word: tuple[int, ...]
    distance: int
    rejection: Fraction
    bound: Fraction

    @property
    def passed(self) -> bool:
        return self.rejection >= self.bound


@dataclass
class SoundnessReport:
    tester: str
    n: int
    records: list[SoundnessRecord]
    mode: str = "exhaustive"
    samples: int | None = None
    seed: int | None = None
    constant: Fraction = SOUNDNESS_CONSTANT

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def min_margin(self) -> Fraction | None:
        """Smallest ``rejection - bound`` over all words."""
        if not self.records:
            return None
        return min(r.rejection - r.bound for r in self.records)

    @property
    def best_constant(self) -> Fraction | None:
        """Largest ``c`` with ``rejection >= c * distance / n`` on every swept word off the code."""
        ratios = [r.rejection * self.n / r.distance for r in self.records if r.distance > 0]
        return min(ratios) if ratios else None

    def to_lines(self) -> str:
        lines = []
        for r in self.records:
            lines.append(
                json.dumps(
                    {
                        "word": list(r.word),
                        "distance": r.distance,
                        "reject_num": r.rejection.numerator,
                        "reject_den": r.rejection.denominator,
                        "bound_num": r.bound.numerator,
                        "bound_den": r.bound.denominator,
                        "pass": r.passed,
                    }
                )
            )
        best = self.best_constant
        margin = self.min_margin
        summary = {
            "summary": {
                "tester": self.tester,
                "mode": self.mode,
                "samples": self.samples,
                "seed": self.seed,
                "words": len(self.records),
                "all_pass": self.all_passed,
                "constant": str(self.constant),
                "best_constant": None if best is None else str(best),
                "min_margin": None if margin is None else str(margin),
            }
        }
        lines.append(json.dumps(summary))
        return "\n".join(lines) + "\n"


def _distances(C: LinearCode, words: np.ndarray, budget: int) -> np.ndarray:
    p = C.field.p
    if p**C.k > budget:
        raise BudgetExceededError(f"distance to the code needs {p}^{C.k} codewords, beyond the budget")
    best = np.full(len(words), C.n + 1, dtype=np.int64)
    G = C.generator.array.T
    for _, msgs in vector_chunks(p, C.k, chunk=1 << 10):
        cw = msgs @ G % p
        d = (words[:, None, :] != cw[None, :, :]).sum(axis=2).min(axis=1)
        best = np.minimum(best, d)
    return best


def soundness_sweep(
    T: LocalTester,
    words: Iterable[Sequence[int]] | None = None,
    *,
    samples: int | None = None,
    seed: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> SoundnessReport:
    """Exact rejection probability and soundness bound for each word.

    With ``words=None`` and no ``samples``, every word of GF(p)^n is swept;
    this needs ``p^n <= 2^16``. With ``samples``, that many uniform words
    are drawn from ``numpy.random.default_rng(seed)``. Records are sorted by
    word.
    """
    p, n = T.code.field.p, T.n
    mode = "given"
    if words is None:
        if samples is None:
            if p**n > EXHAUSTIVE_LIMIT:
                raise BudgetExceededError(
                    f"exhaustive sweep over {p}^{n} words exceeds {EXHAUSTIVE_LIMIT}; pass samples= and seed="
                )
            arr = all_vectors(p, n)
            mode = "exhaustive"
        else:
            rng = np.random.default_rng(seed)
            arr = rng.integers(0, p, size=(samples, n))
            mode = "sampled"
    else:
        arr = np.array([list(w) for w in words], dtype=np.int64).reshape(-1, n) % p
    if len(arr):
        order = np.lexsort(arr.T[::-1])
        arr = arr[order]
    rej = _rejection_counts(T, arr) if T.checks else np.zeros(len(arr), dtype=np.int64)
    dist = _distances(T.code, arr, budget) if len(arr) else np.zeros(0, dtype=np.int64)
    total = max(T.total_weight, 1)
    records = [
        SoundnessRecord(
            tuple(int(x) for x in w),
            int(d),
            Fraction(int(r), total),
            SOUNDNESS_CONSTANT * Fraction(int(d), n),
        )
        for w, d, r in zip(arr, dist, rej)
    ]
    return SoundnessReport(T.name, n, records, mode=mode, samples=samples, seed=seed)
