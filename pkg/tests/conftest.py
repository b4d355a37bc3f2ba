import pytest

from spreadcodes import (
    build_code,
    characteristic_function,
    full_spread,
    ternary_function,
    walsh_spectrum,
    weight_distribution,
)


def family_function(family, n, s):
    spread = full_spread(n // 2)
    if family == "char":
        return characteristic_function(spread, tuple(range(s)))
    return ternary_function(spread, tuple(range(2 * s)))


@pytest.fixture(scope="session")
def spread_t1():
    return full_spread(1)


@pytest.fixture(scope="session")
def spread_t2():
    return full_spread(2)


@pytest.fixture(scope="session")
def char_n2_s1(spread_t1):
    # indices (1,) so the chosen member is span{(1,1)}
    return characteristic_function(spread_t1, (1,))


@pytest.fixture(scope="session")
def char_n4_s2():
    return family_function("char", 4, 2)


@pytest.fixture(scope="session")
def ternary_n4_s2():
    return family_function("ternary", 4, 2)


@pytest.fixture(scope="session")
def code_n2_s1(char_n2_s1):
    return build_code(char_n2_s1)


@pytest.fixture(scope="session")
def code_n4_char(char_n4_s2):
    return build_code(char_n4_s2)


@pytest.fixture(scope="session")
def spectrum_n4_char(char_n4_s2):
    return walsh_spectrum(char_n4_s2)


# the n=6 artifacts are the expensive ones; build each once per run
@pytest.fixture(scope="session")
def headline_n6():
    out = {}
    for family, s in (("char", 2), ("ternary", 1)):
        f = family_function(family, 6, s)
        code = build_code(f)
        out[family] = (f, code, weight_distribution(code))
    return out
