from __future__ import annotations

import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from zkcss import BudgetExceededError, LinearCode, Matrix, PrimeField
from zkcss.ltc import (
    Check,
    LocalTester,
    blr_hadamard_tester,
    exact_rejection_probability,
    hadamard_code,
    parity_sampler_tester,
    run_tester,
    soundness_sweep,
)

F2, F3 = PrimeField(2), PrimeField(3)


def rep3():
    return LinearCode.from_generator(Matrix(F2, [[1], [1], [1]]))


def even3():
    return LinearCode.from_parity_check(Matrix(F2, [[1, 1, 1]]))


def brute_blr_rejection(w) -> Fraction:
    n = len(w)
    bad = sum(1 for x in range(n) for y in range(n) if (w[x] + w[y] + w[x ^ y]) % 2)
    return Fraction(bad, n * n)


def test_parity_sampler_examples():
    T = parity_sampler_tester(rep3(), Matrix(F2, [[1, 1, 0], [0, 1, 1]]))
    assert T.query_budget == 2 and T.is_linear
    assert exact_rejection_probability(T, [1, 0, 0]) == Fraction(1, 2)
    assert exact_rejection_probability(T, [1, 1, 1]) == 0
    V = parity_sampler_tester(rep3(), Matrix.zeros(F2, 2, 3))
    assert V.vacuous and exact_rejection_probability(V, [1, 0, 0]) == 0
    with pytest.raises(ValueError):
        parity_sampler_tester(rep3(), Matrix(F2, [[1, 0, 0]]))


def test_query_budget_and_completeness_guards():
    with pytest.raises(ValueError):
        LocalTester(rep3(), [Check((0, 1, 2), coefficients=(1, 1, 0))], 2)
    with pytest.raises(ValueError, match="rejects codeword"):
        LocalTester(rep3(), [Check((0,), predicate=lambda v: v[0] == 0)], 1)


def test_predicate_checks():
    T = LocalTester(rep3(), [Check((0, 1), predicate=lambda v: v[0] == v[1]), Check((1, 2), predicate=lambda v: v[0] == v[1], weight=3)], 2)
    assert not T.is_linear and T.total_weight == 4
    assert exact_rejection_probability(T, [0, 0, 1]) == Fraction(3, 4)
    assert exact_rejection_probability(T, [1, 0, 0]) == Fraction(1, 4)


def test_hadamard_code():
    C = hadamard_code(3)
    assert (C.n, C.k) == (8, 3)
    from zkcss import min_weight

    assert min_weight(C) == 4


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_blr_completeness(m):
    T = blr_hadamard_tester(m)
    assert T.query_budget == 3 and len(T.checks) == 4**m
    for c in T.code.codewords():
        assert exact_rejection_probability(T, c) == 0


def test_blr_flipped_bit():
    T = blr_hadamard_tester(3)
    w = T.code.codewords()[5].copy()
    w[6] ^= 1
    r = exact_rejection_probability(T, w)
    assert r == brute_blr_rejection(w.tolist())
    assert r >= Fraction(1, 32)


def test_blr_range():
    with pytest.raises(ValueError):
        blr_hadamard_tester(0)
    with pytest.raises(ValueError):
        blr_hadamard_tester(5)


def test_blr_exhaustive_sweep():
    T = blr_hadamard_tester(3)
    report = soundness_sweep(T)
    assert report.mode == "exhaustive" and len(report.records) == 256
    C = {tuple(int(x) for x in c) for c in T.code.codewords()}
    for rec in report.records:
        assert rec.rejection == brute_blr_rejection(rec.word)
        assert rec.distance == oracles.distance_to(C, rec.word)
    assert report.all_passed
    # frozen from the brute-force run above
    assert report.best_constant == Fraction(3, 2)
    assert report.min_margin == 0


def test_sweep_of_codewords_only():
    T = blr_hadamard_tester(2)
    report = soundness_sweep(T, T.code.codewords())
    assert report.mode == "given"
    assert all(r.rejection == 0 and r.bound == 0 and r.passed for r in report.records)
    assert report.best_constant is None


def test_even_weight_sweep():
    C = even3()
    T = parity_sampler_tester(C, C.dual().generator.T)
    report = soundness_sweep(T)
    assert [r.word for r in report.records] == sorted(r.word for r in report.records)
    odd = [r for r in report.records if sum(r.word) % 2]
    assert all(r.rejection == 1 and r.distance == 1 for r in odd)
    assert report.all_passed


def test_sampled_sweep_is_reproducible():
    T = blr_hadamard_tester(4)
    a = soundness_sweep(T, samples=50, seed=11)
    b = soundness_sweep(T, samples=50, seed=11)
    assert a.to_lines() == b.to_lines() and a.mode == "sampled"
    with pytest.raises(BudgetExceededError):
        soundness_sweep(parity_sampler_tester(LinearCode.full_space(F3, 11), Matrix.zeros(F3, 1, 11)))


def test_report_lines_are_json():
    T = parity_sampler_tester(rep3(), Matrix(F2, [[1, 1, 0], [0, 1, 1]]))
    lines = soundness_sweep(T).to_lines().splitlines()
    assert len(lines) == 9
    first = json.loads(lines[0])
    assert set(first) == {"word", "distance", "reject_num", "reject_den", "bound_num", "bound_den", "pass"}
    summary = json.loads(lines[-1])["summary"]
    assert summary["all_pass"] is True and summary["constant"] == "1/4"


def test_run_tester_frequency():
    T = parity_sampler_tester(rep3(), Matrix(F2, [[1, 1, 0], [0, 1, 1]]))
    rng = np.random.default_rng(0)
    accepts = sum(run_tester(T, [1, 0, 0], rng) for _ in range(4000))
    assert abs(accepts / 4000 - 0.5) < 0.05
    assert all(run_tester(T, [1, 1, 1], rng) for _ in range(100))


@given(st.integers(0, 255), st.integers(0, 7))
def test_linear_tester_shift_invariance(word, msg):
    T = blr_hadamard_tester(3)
    w = np.array([(word >> i) & 1 for i in range(8)])
    c = T.code.codewords()[msg]
    assert exact_rejection_probability(T, w) == exact_rejection_probability(T, (w + c) % 2)
