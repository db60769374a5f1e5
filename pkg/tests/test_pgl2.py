import itertools

import pytest

from commgrowth import pgl2
from commgrowth.dirichlet import TruncatedDirichletSeries as S, expand_local_factor
from commgrowth.errors import SizeCapExceeded


def test_cartan_index_examples():
    assert pgl2.cartan_index(2, 0) == 1
    assert pgl2.cartan_index(2, 1) == 3
    assert pgl2.cartan_index(3, 3) == 36


@pytest.mark.parametrize("p,n,expect", [(2, 1, 3), (3, 1, 4), (2, 2, 6)])
def test_oracle_examples(p, n, expect):
    assert pgl2.cartan_index_oracle(p, n) == expect


def test_group_orders():
    assert pgl2.pgl2_order(2, 1) == 6
    assert pgl2.pgl2_order(3, 1) == 24
    assert pgl2.pgl2_order(2, 2) == 48


def _scalar_orbits(p, n):
    # independent count: invertible matrices mod p^n, grouped by unit scalars
    M = p**n
    units = [u for u in range(M) if u % p]
    seen, total, upper = set(), 0, 0
    for a, b, c, d in itertools.product(range(M), repeat=4):
        if (a * d - b * c) % p == 0:
            continue
        key = min(tuple((u * x) % M for x in (a, b, c, d)) for u in units)
        if key in seen:
            continue
        seen.add(key)
        total += 1
        upper += c == 0
    return total, upper


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (3, 1), (5, 1)])
def test_canonical_forms_match_scalar_orbits(p, n):
    total, upper = _scalar_orbits(p, n)
    assert total == pgl2.pgl2_order(p, n)
    assert total // upper == pgl2.cartan_index_oracle(p, n)


def test_oracle_cap():
    with pytest.raises(SizeCapExceeded):
        pgl2.cartan_index_oracle(7, 4)
    with pytest.raises(ValueError):
        pgl2.cartan_index_oracle(4, 1)


def test_coset_count_and_tree():
    assert pgl2.coset_count(2, 1) == 3
    assert pgl2.coset_count(2, 4) == 24
    assert pgl2.regular_tree_sphere(3, 3) == 36


def test_local_factors():
    nonsplit = pgl2.local_factor_pgl2(pgl2.LocalPlace(7, split=False), 50)
    assert expand_local_factor(nonsplit, 50) == S.identity(50)
    f = expand_local_factor(pgl2.local_factor_pgl2(pgl2.LocalPlace(2), 12), 12)
    assert f.coeffs == {1: 1, 3: 3, 6: 6, 12: 12}
    f = expand_local_factor(pgl2.local_factor_pgl2(pgl2.LocalPlace(5), 12), 12)
    assert f.coeffs == {1: 1, 6: 6}


def test_global_series_small():
    assert pgl2.global_series_pgl2((), 2) == S.identity(2)
    s = pgl2.global_series_pgl2({2}, 6)
    assert (s[3], s[4], s[6]) == (0, 4, 6)


def test_global_series_unramified_six():
    # index 6 collects q=2 at depth 2 and q=5 at depth 1, both with coefficient 6
    s = pgl2.global_series_pgl2((), 6)
    assert s.as_list() == [1, 0, 3, 4, 0, 12]


def test_ramified_set_must_be_primes():
    with pytest.raises(ValueError):
        pgl2.global_series_pgl2({4}, 10)
