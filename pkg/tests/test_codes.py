import numpy as np
import pytest

from spreadcodes.codes import (
    LinearFunctionError,
    WeightDistribution,
    build_code,
    closed_form_distribution,
    codeword,
    codeword_index,
    distribution_from_spectrum,
    weight_distribution,
    weight_from_walsh,
)
from spreadcodes.gf3 import TritVec, index_vec
from spreadcodes.spread_functions import (
    characteristic_function,
    tabulate_linear,
    ternary_function,
)
from spreadcodes.subspaces import full_spread
from spreadcodes.walsh import walsh_spectrum

FROZEN_N4 = {
    ("char", 2): {0: 1, 16: 2, 52: 128, 54: 80, 61: 32},
    ("ternary", 2): {0: 1, 32: 2, 50: 96, 54: 80, 59: 64},
}


def test_code_parameters(code_n2_s1, code_n4_char):
    assert (code_n2_s1.length, code_n2_s1.dimension) == (8, 3)
    assert (code_n4_char.length, code_n4_char.dimension) == (80, 5)
    assert code_n4_char.generator.shape == (5, 80)


def test_generator_layout(code_n4_char):
    g = code_n4_char.generator
    f = code_n4_char.f
    assert np.array_equal(g[0], f.table[1:])
    # row 1+k tabulates coordinate k of x over the nonzero x, in index order
    for k in range(4):
        for j in (0, 3, 79):
            assert g[1 + k, j] == index_vec(j + 1, 4).array[k]


def test_linear_functions_rejected():
    with pytest.raises(LinearFunctionError):
        build_code(tabulate_linear(TritVec((1, 2, 0, 1))))


def test_codeword_anchor(char_n2_s1):
    c = codeword(char_n2_s1, 2, TritVec((1, 2)))
    assert len(c) == 8
    assert c.weight == 8
    assert codeword(char_n2_s1, 0, TritVec.zeros(2)).weight == 0
    assert codeword_index(2, 5, 2) == 23


def test_codeword_is_alpha_f_plus_linear(char_n2_s1):
    w = TritVec((2, 1))
    c = codeword(char_n2_s1, 1, w)
    for j in range(8):
        x = index_vec(j + 1, 2)
        expect = (char_n2_s1(x) + (x.array @ w.array)) % 3
        assert c.array[j] == expect


def test_weight_from_walsh():
    assert weight_from_walsh(1, 114, 4) == 16
    assert weight_from_walsh(2, -15, 4) == 59
    assert weight_from_walsh(1, 2 * 3**4, 4) == 0
    with pytest.raises(ValueError):
        weight_from_walsh(1, 113, 4)  # not divisible
    with pytest.raises(ValueError):
        weight_from_walsh(0, 114, 4)
    with pytest.raises(ValueError):
        weight_from_walsh(1, -500, 4)  # weight past the length


@pytest.mark.parametrize("family", ["char", "ternary"])
def test_frozen_distributions_n4(family):
    spread = full_spread(2)
    if family == "char":
        f = characteristic_function(spread, (0, 1))
    else:
        f = ternary_function(spread, (0, 1, 2, 3))
    code = build_code(f)
    dist = weight_distribution(code)
    assert dist == FROZEN_N4[family, 2]
    assert dist == distribution_from_spectrum(walsh_spectrum(f), 4)
    assert dist == closed_form_distribution(family, 4, 2)


def test_headline_distribution_n6(headline_n6):
    _, code, dist = headline_n6["char"]
    assert (code.length, code.dimension) == (728, 7)
    assert dist == {0: 1, 52: 2, 484: 1352, 486: 728, 511: 104}
    _, code, dist = headline_n6["ternary"]
    assert dist.counts == closed_form_distribution("ternary", 6, 1).counts


@pytest.mark.parametrize("n", [2, 4])
@pytest.mark.parametrize("family", ["char", "ternary"])
def test_closed_distribution_matches_enumeration(n, family):
    t = n // 2
    spread = full_spread(t)
    smax = 3**t + 1 if family == "char" else (3**t + 1) // 2
    for s in range(1, smax + 1):
        if family == "char":
            f = characteristic_function(spread, tuple(range(s)))
        else:
            f = ternary_function(spread, tuple(range(2 * s)))
        assert weight_distribution(build_code(f)) == closed_form_distribution(
            family, n, s
        )


def test_distribution_helpers():
    d = WeightDistribution({0: 1, 16: 2, 52: 128, 54: 80, 61: 32})
    assert d.total() == 243
    assert d.total_weight() == 12960
    assert (d.wt_min, d.wt_max) == (16, 61)
    assert d == {61: 32, 54: 80, 52: 128, 16: 2, 0: 1}
    assert d != {0: 1}
    with pytest.raises(ValueError):
        WeightDistribution({0: 1}).wt_min


def test_distribution_identities(code_n2_s1):
    d = weight_distribution(code_n2_s1)
    assert d.total() == 27
    assert d.total_weight() == 8 * 2 * 9
    assert d.counts[0] == 1


def test_distinct_codewords(code_n2_s1):
    f = code_n2_s1.f
    words = {
        codeword(f, alpha, index_vec(wi, 2)).array.tobytes()
        for alpha in (0, 1, 2)
        for wi in range(9)
    }
    assert len(words) == 27
    assert code_n2_s1.rank == 3
