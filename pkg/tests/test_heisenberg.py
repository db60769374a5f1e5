from fractions import Fraction as F

import pytest

from commgrowth import heisenberg as hz
from commgrowth.dirichlet import expand_local_factor


def rep(p, a, b):
    return hz.PadicCosetRep(p, F(a), F(b))


def test_index_examples():
    assert hz.heisenberg_index(rep(2, 0, 0)) == 1
    assert hz.heisenberg_index(rep(2, F(1, 2), F(1, 4))) == 4
    assert hz.heisenberg_index(rep(3, 0, F(1, 3))) == 3


def test_rep_is_reduced_mod_one():
    r = rep(2, F(5, 2), F(-1, 4))
    assert (r.a, r.b) == (F(1, 2), F(3, 4))
    assert r.exponents == (1, 2) and r.depth == 2


def test_rep_validation():
    with pytest.raises(ValueError):
        rep(6, F(1, 2), 0)
    with pytest.raises(ValueError):
        rep(2, F(1, 3), 0)


def test_oracle_examples():
    assert hz.heisenberg_index_oracle(rep(5, 0, 0), K=2) == 1
    assert hz.heisenberg_index_oracle(rep(2, F(1, 2), F(1, 4)), K=3) == 4
    assert hz.heisenberg_index_oracle(rep(3, F(1, 3), 0), K=2) == 3


def test_oracle_depth_too_small():
    with pytest.raises(ValueError):
        hz.heisenberg_index_oracle(rep(2, F(1, 8), 0), K=2)


@pytest.mark.parametrize("K", [3, 4, 5])
def test_oracle_stable_in_depth(K):
    r = rep(2, F(3, 8), F(1, 2))
    assert hz.heisenberg_index_oracle(r, K) == hz.heisenberg_index(r) == 8


def test_index_symmetric_in_swap():
    for r in hz.coset_reps(3, 2):
        assert hz.heisenberg_index(r) == hz.heisenberg_index(hz.PadicCosetRep(3, r.b, r.a))


def test_local_count_examples():
    assert hz.local_count(2, 0) == 1
    assert hz.local_count(2, 1) == 3
    assert hz.local_count(5, 2) == 600
    with pytest.raises(ValueError):
        hz.local_count(4, 1)


def test_local_factor_expansions():
    s = expand_local_factor(hz.local_factor(2), 8)
    assert (s[2], s[4], s[8]) == (3, 12, 48)
    s = expand_local_factor(hz.local_factor(3), 9)
    assert (s[3], s[9]) == (8, 72)


def test_global_series_small():
    assert hz.global_series(1).coeffs == {1: 1}
    assert hz.global_series(10).as_list() == [1, 3, 8, 12, 24, 24, 48, 48, 72, 72]


def test_global_matches_mobius_oracle():
    assert hz.global_series(2000) == hz.mobius_oracle_series(2000)
