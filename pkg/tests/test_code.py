from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

import oracles
from zkcss import (
    BudgetExceededError,
    DegenerateCodeError,
    LinearCode,
    Matrix,
    PrimeField,
    dual,
    min_weight,
    min_weight_excluding,
    nearest_codeword,
    rank,
)
from zkcss.code import _support_search, hamming_distance, hamming_weight, low_weight_witness, span_code, weight_distribution

F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)
HAMMING_H = [[1, 0, 1, 0, 1, 0, 1], [0, 1, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]]


def words(C: LinearCode) -> frozenset:
    return frozenset(tuple(int(x) for x in w) for w in C.codewords())


def rep3():
    return LinearCode.from_generator(Matrix(F2, [[1], [1], [1]]))


def even3():
    return LinearCode.from_parity_check(Matrix(F2, [[1, 1, 1]]))


def hamming():
    return LinearCode.from_parity_check(Matrix(F2, HAMMING_H))


@st.composite
def codes(draw, max_n=7, primes=(2, 3, 5)):
    p = draw(st.sampled_from(primes))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, n))
    a = draw(arrays(np.int64, (n, k), elements=st.integers(0, p - 1)))
    return LinearCode.from_generator(Matrix(PrimeField(p), a, shape=(n, k)))


def test_constructor_examples():
    full = LinearCode.from_generator(Matrix.identity(F3, 4))
    assert full.k == 4 and full.parity_check.shape == (0, 4)
    assert words(even3()) == {(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)}
    assert words(rep3()) == {(0, 0, 0), (1, 1, 1)}
    assert rep3().rate == pytest.approx(1 / 3)


def test_rank_deficient_input_is_flagged():
    C = LinearCode.from_generator(Matrix(F2, [[1, 1], [1, 1], [1, 1]]))
    assert C.reduced and C.k == 1 and C == rep3()
    assert not rep3().reduced
    D = LinearCode.from_parity_check(Matrix(F2, [[1, 1, 1], [1, 1, 1]]))
    assert D.reduced and D == even3()


def test_constructor_validation():
    with pytest.raises(ValueError):
        LinearCode(Matrix(F2, [[1], [1], [1]]), Matrix(F2, [[1, 0, 0], [0, 1, 1]]))


def test_dual_examples():
    assert dual(LinearCode.full_space(F5, 3)) == LinearCode.zero_code(F5, 3)
    assert dual(rep3()) == even3()
    assert dual(even3()) == rep3()


def test_min_weight_examples():
    assert min_weight(rep3()) == 3
    assert min_weight(even3()) == 2
    assert min_weight(hamming()) == 3
    with pytest.raises(DegenerateCodeError):
        min_weight(LinearCode.zero_code(F2, 3))


def test_min_weight_excluding_examples():
    S = span_code(F2, 3, [[0, 1, 1]])
    assert min_weight_excluding(even3(), S) == 2
    H = hamming()
    assert dual(H).k == 3 and H.contains_code(dual(H))
    assert min_weight_excluding(H, dual(H)) == 3
    assert min_weight_excluding(H, LinearCode.zero_code(F2, 7)) == min_weight(H)
    with pytest.raises(DegenerateCodeError):
        min_weight_excluding(H, H)
    with pytest.raises(ValueError):
        min_weight_excluding(even3(), rep3())


def test_nearest_codeword_examples():
    c, d = nearest_codeword(rep3(), [1, 1, 0])
    assert c.tolist() == [1, 1, 1] and d == 1
    c, d = nearest_codeword(even3(), [1, 0, 0])
    assert c.tolist() == [0, 0, 0] and d == 1
    c, d = nearest_codeword(hamming(), [1, 1, 1, 0, 0, 0, 0])
    assert d == 0 and c.tolist() == [1, 1, 1, 0, 0, 0, 0]


def test_weights():
    assert hamming_weight([0, 3, 0, 1]) == 2
    assert hamming_distance([1, 2, 3], [1, 0, 4]) == 2
    assert weight_distribution(hamming()) == [1, 0, 0, 7, 7, 0, 0, 1]


def test_budget_is_enforced_with_lower_bound():
    rng = np.random.default_rng(3)
    C = LinearCode.from_generator(Matrix(F5, rng.integers(0, 5, size=(24, 12))))
    with pytest.raises(BudgetExceededError) as info:
        min_weight(C, budget=1000)
    assert info.value.lower_bound is not None and info.value.lower_bound >= 1


def test_support_search_on_larger_code():
    # outside the enumeration threshold the search goes by supports
    rng = np.random.default_rng(7)
    G = Matrix(F2, rng.integers(0, 2, size=(20, 17)))
    C = LinearCode.from_generator(G)
    w = min_weight(C)
    assert w == _support_search(C, LinearCode.zero_code(F2, 20), None, 1 << 20)[0]
    v = low_weight_witness(C, None, w)
    assert C.contains(v) and hamming_weight(v) == w
    assert low_weight_witness(C, None, w - 1) is None


@given(codes())
def test_code_invariants(C):
    p = C.field.p
    assert (C.parity_check @ C.generator).is_zero()
    assert C.generator.cols == C.k and C.parity_check.rows == C.n - C.k
    D = C.dual()
    assert D.k == C.n - C.k
    assert (C.generator.T @ D.generator).is_zero()
    assert D.dual() == C
    S = words(C)
    assert S == oracles.column_span(p, C.generator.array)
    assert words(D) == oracles.dual(p, C.n, S)


@given(codes())
def test_min_weight_matches_enumeration(C):
    if C.k == 0:
        return
    S = words(C)
    assert min_weight(C) == oracles.min_weight_excluding(S, {(0,) * C.n})


@given(codes(max_n=6), st.data())
def test_min_weight_excluding_matches_enumeration(C, data):
    if C.k == 0:
        return
    p = C.field.p
    j = data.draw(st.integers(0, C.k - 1))
    coeffs = data.draw(arrays(np.int64, (C.k, j), elements=st.integers(0, p - 1)))
    S = LinearCode.from_generator(C.generator @ Matrix(C.field, coeffs, shape=(C.k, j)))
    if S.k == C.k:
        return
    expected = oracles.min_weight_excluding(words(C), words(S))
    assert min_weight_excluding(C, S) == expected
    assert _support_search(C, S, None, 1 << 20)[0] == expected


@given(codes(max_n=6), st.data())
def test_nearest_codeword_and_unique_decoding(C, data):
    if C.k == 0:
        return
    p = C.field.p
    w = data.draw(arrays(np.int64, (C.n,), elements=st.integers(0, p - 1)))
    c, d = nearest_codeword(C, w)
    assert C.contains(c) and d == oracles.distance_to(words(C), tuple(w)) == hamming_distance(c, w)
    # errors below half the distance are corrected
    dmin = min_weight(C)
    m = data.draw(arrays(np.int64, (C.k,), elements=st.integers(0, p - 1)))
    cw = C.encode(m)
    e = np.zeros(C.n, dtype=np.int64)
    pos = data.draw(st.lists(st.integers(0, C.n - 1), max_size=(dmin - 1) // 2, unique=True))
    for i in pos:
        e[i] = data.draw(st.integers(1, p - 1))
    assert nearest_codeword(C, (cw + e) % p)[0].tolist() == cw.tolist()


@given(codes())
def test_equality_and_hash_are_subspace_level(C):
    p = C.field.p
    rng = np.random.default_rng(0)
    # a different generator for the same code
    while True:
        T = Matrix(C.field, rng.integers(0, p, size=(C.k, C.k)), shape=(C.k, C.k))
        if rank(T) == C.k:
            break
    C2 = LinearCode.from_generator(C.generator @ T)
    assert C2 == C and hash(C2) == hash(C)
