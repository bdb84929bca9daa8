from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from instances import random_encoder
from zkcss import (
    DegenerateCodeError,
    LinearCode,
    Matrix,
    PrimeField,
    RandomizedEncoder,
    css_to_zk,
    distance_x,
    distance_z,
    roundtrip_check,
    roundtrip_check_css,
    zk_to_css,
)
from zkcss.css import gallery_entry
from zkcss.zkenc import is_decodable_oracle, is_t_zk_oracle, max_decoding_radius, max_zk_threshold

F2, F5 = PrimeField(2), PrimeField(5)


def three_bit():
    return RandomizedEncoder(Matrix(F2, [[1, 1], [0, 1], [1, 1]]), 1)


def shamir():
    return RandomizedEncoder(Matrix(F5, [[1, 1], [1, 2], [1, 3], [1, 4]]), 1)


def words(C):
    return {tuple(int(x) for x in w) for w in C.codewords()}


def test_three_bit_to_css():
    res = zk_to_css(three_bit())
    Q = res.css
    assert res.randomness_columns == (1,)
    assert words(Q.cx) == {(0, 0, 0), (1, 0, 1), (1, 1, 1), (0, 1, 0)}
    assert Q.cz == LinearCode.from_parity_check(Matrix(F2, [[1, 1, 1]]))
    assert (distance_x(Q), distance_z(Q)) == (1, 2)


def test_shamir_to_css():
    Q = zk_to_css(shamir()).css
    assert Q.cx.k == 2 and Q.cz.dual() == LinearCode.from_generator(Matrix(F5, [[1], [2], [3], [4]]))
    assert (distance_x(Q), distance_z(Q)) == (3, 2)


def test_last_column_rule():
    E = RandomizedEncoder(Matrix(F5, [[1, 0, 2], [0, 1, 3], [4, 4, 1], [1, 2, 0]]), 2)
    Q = zk_to_css(E).css
    assert Q.cz.dual() == LinearCode.from_generator(E.generator.take_cols([2]))


def test_steane_to_encoder():
    res = css_to_zk(gallery_entry("steane"))
    E = res.encoder
    assert (E.n, E.k, E.k_prime) == (7, 4, 1)
    assert res.randomness_columns == (1, 2, 3)
    assert LinearCode.from_generator(res.generator.take_cols([1, 2, 3])) == gallery_entry("steane").cz.dual()
    assert is_t_zk_oracle(E, 2) and not is_t_zk_oracle(E, 3)
    assert is_decodable_oracle(E, 1) and not is_decodable_oracle(E, 2)


def test_shamir_css_round_trip_encoder():
    E = css_to_zk(gallery_entry("shamir5")).encoder
    assert max_zk_threshold(E, method="oracle") == 1
    assert max_decoding_radius(E, method="pairwise") == 1


def test_small_z_distance_gives_zero_zk():
    Q = zk_to_css(three_bit()).css.swapped()
    assert distance_z(Q) == 1
    E = css_to_zk(Q).encoder
    assert is_t_zk_oracle(E, 0) and not is_t_zk_oracle(E, 1)


def test_degenerate_css_is_rejected():
    C = LinearCode.from_parity_check(Matrix(F2, [[1, 1, 1]]))
    from zkcss import new_css

    with pytest.raises(DegenerateCodeError, match="k_prime >= 1"):
        css_to_zk(new_css(C, C.dual()))


def test_round_trip_reports():
    for E in (three_bit(), shamir()):
        for method in ("algebraic", "oracle"):
            report = roundtrip_check(E, method=method)
            assert report.ok, str(report)
            assert [name for name, *_ in report.checks] == ["code", "k_prime", "max t-ZK", "max decodable e"]
    report = roundtrip_check_css(gallery_entry("steane"))
    assert report.ok and ("d_X", 3, 3, True) in report.checks


def test_canonical_completion_is_a_fixed_point():
    E = css_to_zk(gallery_entry("steane")).encoder
    again = css_to_zk(zk_to_css(E).css).encoder
    assert again.generator == E.generator


@given(st.sampled_from([2, 3, 5]), st.integers(0, 2**32 - 1))
def test_round_trips(p, seed):
    E = random_encoder(p, np.random.default_rng(seed), max_n=7, max_k=4)
    res = zk_to_css(E)
    assert res.css.cx == E.code
    back = css_to_zk(res.css)
    assert back.encoder.k_prime == E.k_prime
    B = back.generator.take_cols(back.randomness_columns)
    assert LinearCode.from_generator(B) == res.css.cz.dual()
    assert roundtrip_check(E).ok
    assert roundtrip_check_css(res.css).ok
