from __future__ import annotations

import threading
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from instances import random_encoder
from zkcss import (
    CssCode,
    DegenerateCodeError,
    LinearCode,
    Matrix,
    OrthogonalityError,
    PrimeField,
    css_rate,
    distance,
    distance_x,
    distance_z,
    gallery,
    new_css,
)
from zkcss.css import GALLERY_NAMES, gallery_entry, gallery_text

F2, F3 = PrimeField(2), PrimeField(3)
HAMMING_H = [[1, 0, 1, 0, 1, 0, 1], [0, 1, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]]

# frozen from the brute-force enumeration in test_gallery_matches_enumeration
GALLERY_EXPECTED = {
    "steane": (2, 7, Fraction(1, 7), 3, 3),
    "shamir5": (5, 4, Fraction(1, 4), 3, 2),
    "threebit": (2, 3, Fraction(1, 3), 1, 2),
    "shor9": (2, 9, Fraction(1, 9), 3, 3),
}


def hamming():
    return LinearCode.from_parity_check(Matrix(F2, HAMMING_H))


def words(C):
    return frozenset(tuple(int(x) for x in w) for w in C.codewords())


def brute_distances(Q: CssCode) -> tuple[int, int]:
    p, n = Q.field.p, Q.n
    X, Z = words(Q.cx), words(Q.cz)
    return (
        oracles.min_weight_excluding(X, oracles.dual(p, n, Z)),
        oracles.min_weight_excluding(Z, oracles.dual(p, n, X)),
    )


def test_full_space_pair():
    full = LinearCode.full_space(F3, 4)
    Q = new_css(full, full)
    assert css_rate(Q) == 1
    assert distance(Q) == 1


def test_steane():
    Q = new_css(hamming(), hamming())
    assert css_rate(Q) == Fraction(1, 7)
    assert distance_x(Q) == distance_z(Q) == distance(Q) == 3


def test_repetition_pair_is_rejected_with_witness():
    rep = LinearCode.from_generator(Matrix(F2, [[1], [1], [1]]))
    with pytest.raises(OrthogonalityError) as info:
        new_css(rep, rep)
    a, b = info.value.witness
    assert rep.dual().contains(a) and rep.dual().contains(b)
    assert int(a @ b) % 2 == 1


def test_shape_mismatch():
    with pytest.raises(ValueError):
        new_css(LinearCode.full_space(F2, 3), LinearCode.full_space(F2, 4))
    with pytest.raises(ValueError):
        new_css(LinearCode.full_space(F2, 3), LinearCode.full_space(F3, 3))


def test_even_weight_example_distances():
    # C_X = even-weight code, C_Z = ker of (0,1,1); enumeration gives d_X = 2, d_Z = 1
    even = LinearCode.from_parity_check(Matrix(F2, [[1, 1, 1]]))
    cz = LinearCode.from_parity_check(Matrix(F2, [[0, 1, 1]]))
    Q = new_css(even, cz)
    assert (distance_x(Q), distance_z(Q)) == brute_distances(Q) == (2, 1)


def test_degenerate_pair():
    C = LinearCode.from_parity_check(Matrix(F2, [[1, 1, 1]]))
    Q = new_css(C, C.dual())
    assert Q.is_degenerate() and css_rate(Q) == 0
    with pytest.raises(DegenerateCodeError):
        distance_x(Q)
    with pytest.raises(DegenerateCodeError):
        distance(Q)


def test_gallery_contents():
    G = gallery()
    assert tuple(G) == GALLERY_NAMES
    for name, (p, n, rate, dx, dz) in GALLERY_EXPECTED.items():
        Q = G[name]
        assert (Q.field.p, Q.n, css_rate(Q), distance_x(Q), distance_z(Q)) == (p, n, rate, dx, dz)
    assert gallery_entry("steane") == new_css(hamming(), hamming())
    with pytest.raises(KeyError):
        gallery_text("nope")


@pytest.mark.parametrize("name", GALLERY_NAMES)
def test_gallery_matches_enumeration(name):
    Q = gallery_entry(name)
    assert (distance_x(Q), distance_z(Q)) == brute_distances(Q)
    assert brute_distances(Q) == GALLERY_EXPECTED[name][3:]


def test_distance_cache_under_threads():
    Q = new_css(hamming(), hamming())
    out = []
    threads = [threading.Thread(target=lambda: out.append(distance_x(Q))) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert out == [3] * 8


@given(st.sampled_from([2, 3, 5]), st.integers(0, 2**32 - 1))
def test_random_pairs(p, seed):
    # pairs produced from random encoders cover every admissible shape
    Q = random_encoder(p, np.random.default_rng(seed), max_n=6, max_k=4).css
    assert Q.cx.contains_code(Q.cz.dual()) and Q.cz.contains_code(Q.cx.dual())
    assert css_rate(Q) == Fraction(Q.cz.k - (Q.n - Q.cx.k), Q.n)
    dx, dz = brute_distances(Q)
    assert (distance_x(Q), distance_z(Q)) == (dx, dz)
    S = Q.swapped()
    assert (distance_x(S), distance_z(S)) == (dz, dx)
