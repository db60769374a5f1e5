from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commgrowth import heisenberg as hz
from commgrowth import pgl2
from commgrowth.dirichlet import (
    TRIVIAL,
    ExplicitSupport,
    RationalInU,
    TruncatedDirichletSeries as S,
    asymptotic_ratio_probe,
    euler_product,
    expand_local_factor,
    partial_sums,
    series_mul,
)

coeff = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


@st.composite
def series(draw, limit=None):
    N = limit or draw(st.integers(1, 40))
    vals = draw(st.lists(coeff, min_size=N, max_size=N))
    return S.from_sequence(vals)


def test_identity_is_neutral():
    B = S.from_sequence([2, Fraction(1, 3), 0, 5, 7, -1])
    assert series_mul(S.identity(6), B) == B
    assert B * S.identity(6) == B


def test_single_term_convolution():
    A = S(6, {1: 1, 2: 3})
    B = S(6, {1: 1, 3: 8})
    assert (A * B)[6] == 24


def test_heisenberg_two_primes():
    N = 36
    prod = expand_local_factor(hz.local_factor(2), N) * expand_local_factor(hz.local_factor(3), N)
    assert prod[36] == 12 * 72


def test_limits_must_match():
    with pytest.raises(ValueError):
        series_mul(S.identity(4), S.identity(5))


def test_rejects_out_of_range_index():
    with pytest.raises(ValueError):
        S(3, {4: 1})
    with pytest.raises(ValueError):
        S(0, {})


def test_rational_factor_expansion():
    s = expand_local_factor(RationalInU((1, -1), (1, -4), 2), 8)
    assert [s[n] for n in (1, 2, 4, 8)] == [1, 3, 12, 48]
    assert s.support() == [1, 2, 4, 8]


def test_constant_factor_gives_delta():
    for p in (2, 3, 7):
        assert expand_local_factor(RationalInU((1,), (1,), p), 30) == S.identity(30)


def test_explicit_support_expansion():
    s = expand_local_factor(ExplicitSupport([(3, 3), (6, 6), (12, 12)]), 12)
    assert s.coeffs == {1: 1, 3: 3, 6: 6, 12: 12}


def test_expand_errors():
    with pytest.raises(ValueError):
        expand_local_factor(RationalInU((1,), (2, -1), 2), 8)
    with pytest.raises(ValueError):
        expand_local_factor(RationalInU((1,), (1, -1), 6), 8)
    with pytest.raises(ValueError):
        expand_local_factor(ExplicitSupport([(4, 1), (2, 1)]), 8)


def test_callable_support_stops_at_limit():
    def terms():
        k = 1
        while True:
            yield 2**k, 1
            k += 1

    assert expand_local_factor(ExplicitSupport(terms), 20).support() == [1, 2, 4, 8, 16]


def test_euler_product_of_trivial_factors():
    assert euler_product(lambda p: TRIVIAL, 50) == S.identity(50)


def test_euler_product_requires_every_prime():
    with pytest.raises(ValueError, match="no local factor"):
        euler_product([(2, hz.local_factor(2))], 10)
    full = euler_product([(2, hz.local_factor(2)), (3, None), (5, TRIVIAL), (7, TRIVIAL)], 10)
    assert full[4] == 12 and full[3] == 0


def test_euler_product_matches_multiplicative_formula():
    N = 100
    s = euler_product(hz.local_factor, N)
    from sympy import factorint

    for n in range(1, N + 1):
        expect = 1
        for p, k in factorint(n).items():
            expect *= p ** (2 * k) - p ** (2 * k - 2)
        assert s[n] == expect


def test_pgl2_product_at_twelve():
    # supports 3, 6, 12 at p=2; 4, 12 at p=3; 12 at p=11
    s = euler_product(lambda p: pgl2.local_factor_pgl2(pgl2.LocalPlace(p), 12), 12)
    assert s[12] == 3 * 4 + 12 + 12 + 12


def test_partial_sums():
    assert partial_sums(S.identity(5)) == [1] * 5
    assert partial_sums(hz.global_series(4))[-1] == 1 + 3 + 8 + 12


def test_probe_delta_is_flat():
    r = asymptotic_ratio_probe(S.identity(64), 0)
    assert all(v == 1.0 for _, v in r.checkpoints)
    assert r.checkpoints[-1][0] == 64 and r.checkpoints[0][0] == 1
    assert r.band_range == (32, 64)


def test_probe_rejects_negative_alpha():
    with pytest.raises(ValueError):
        asymptotic_ratio_probe(S.identity(4), -1)


def test_csv_and_json_round_trip():
    s = S(6, {1: 1, 2: Fraction(-3, 7), 6: 5})
    assert S.from_csv(s.to_csv()) == s
    assert S.from_json(s.to_json()) == s
    assert s.to_csv().splitlines()[:3] == ["n,c_n", "1,1", "2,-3/7"]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 30).flatmap(lambda N: st.tuples(series(N), series(N), series(N))))
def test_convolution_is_commutative_and_associative(abc):
    a, b, c = abc
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(series(), st.integers(1, 40))
def test_truncation_commutes_with_product(a, m):
    m = min(m, a.limit)
    assert (a * a).truncate(m) == a.truncate(m) * a.truncate(m)
