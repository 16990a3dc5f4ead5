import pytest
from hypothesis import given, strategies as st

from nihospec.codes import (
    codeword,
    codeword_weight,
    weight_distribution,
    weight_from_walsh,
    weights_from_walsh_distribution,
)
from nihospec.field import build_field
from nihospec.walsh import walsh_distribution, walsh_value
from oracles import codeword_weight_brute, oracle_for


def test_f9_distribution(F9):
    wd = weight_distribution(F9, 5)
    assert wd.weights == {0: 1, 2: 8, 4: 24, 6: 32, 8: 16}
    assert wd.length == 8
    assert wd.distinct_codewords == 81 and wd.dimension == 4


def test_f16_nonzero_weights(F16):
    wd = weight_distribution(F16, 7)
    assert wd.nonzero_weights() == [4, 6, 8, 10]
    assert wd.length == 15


def test_f64_distribution(F64):
    assert weight_distribution(F64, 15).weights == {0: 1, 24: 588, 28: 504, 32: 1827, 36: 1176}


def test_simple_weights(F9, F16):
    assert codeword_weight(F9, 5, 0, 0) == 0
    for f, d in ((F9, 5), (F16, 7)):
        for v in range(1, f.order):
            assert codeword_weight(f, d, 0, v) == f.order // f.p * (f.p - 1)
    u = next(u for u in range(1, 9) for v in range(9) if walsh_value(F9, 5, u, F9.neg(v)).to_int() == 6)
    v = next(v for v in range(9) if walsh_value(F9, 5, u, F9.neg(v)).to_int() == 6)
    assert codeword_weight(F9, 5, u, v) == 2


@pytest.mark.parametrize("pm,d", [((2, 2), 7), ((3, 1), 5), ((3, 1), 3)])
def test_weights_match_oracle(pm, d):
    f = build_field(*pm)
    P = oracle_for(f)
    for u in range(0, f.order, 2):
        for v in range(0, f.order, 3):
            assert codeword_weight(f, d, u, v) == codeword_weight_brute(P, f.psi, d, u, v)


@pytest.mark.parametrize("pm,d", [((2, 2), 7), ((2, 2), 3), ((3, 1), 5), ((2, 3), 15), ((3, 2), 17), ((5, 1), 9)])
def test_two_paths_agree(pm, d):
    f = build_field(*pm)
    assert weight_distribution(f, d).weights == weights_from_walsh_distribution(f, walsh_distribution(f, d))


def test_walsh_path_absent_for_non_rational(F9):
    assert weights_from_walsh_distribution(F9, walsh_distribution(F9, 2)) is None


def test_degenerate_exponent_reports_distinct_words(F16):
    # d = 2 gives Tr(u x^2) = Tr(u^8 x): the map (u, v) -> codeword has a kernel
    wd = weight_distribution(F16, 2)
    assert wd.distinct_codewords == 16 and wd.dimension == 4
    assert wd.weights[0] == 16


@pytest.mark.parametrize("pm,d", [((2, 2), 7), ((3, 1), 5), ((5, 1), 7)])
def test_total_weight_identity(pm, d):
    f = build_field(*pm)
    wd = weight_distribution(f, d)
    total = sum(w * k for w, k in wd.weights.items())
    assert total == f.group_order * f.order**2 * (f.p - 1) // f.p


@given(st.integers(0, 63), st.integers(0, 63))
def test_weight_formula_hypothesis(u, v):
    f = build_field(2, 3)
    W = walsh_value(f, 15, u, f.neg(v)).to_int()
    assert codeword_weight(f, 15, u, v) == weight_from_walsh(f, W)
    assert len(codeword(f, 15, u, v)) == 63
