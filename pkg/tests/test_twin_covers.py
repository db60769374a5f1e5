import random

import pytest

from commgrowth import twin_covers as tc
from commgrowth.errors import BudgetExceeded

Y2 = tc.DartMultigraph.bouquet(2)
THETA = tc.DartMultigraph.from_edges(2, [(0, 1), (0, 1), (0, 1)])


def relabel(t: tc.TwinCover, rng: random.Random) -> tc.TwinCover:
    """The same twin cover with vertices and darts renamed."""
    X = t.X
    vp = list(range(X.num_vertices))
    dp = list(range(X.num_darts))
    rng.shuffle(vp)
    rng.shuffle(dp)
    vertex = [0] * X.num_darts
    partner = [0] * X.num_darts
    for d in range(X.num_darts):
        vertex[dp[d]] = vp[X.dart_vertex[d]]
        partner[dp[d]] = dp[X.dart_involution[d]]
    X2 = tc.DartMultigraph(X.num_vertices, tuple(vertex), tuple(partner))

    def move(f):
        vm = [0] * X.num_vertices
        dm = [0] * X.num_darts
        for v in range(X.num_vertices):
            vm[vp[v]] = f.vertex_map[v]
        for d in range(X.num_darts):
            dm[dp[d]] = f.dart_map[d]
        return tc.CoveringMap(X2, f.target, tuple(vm), tuple(dm))

    return tc.TwinCover(X2, vp[t.x0], move(t.f1), move(t.f2), t.y0)


def test_graph_basics():
    assert Y2.num_vertices == 1 and Y2.num_darts == 4 and Y2.betti_number() == 2
    assert not Y2.is_simple()
    assert tc.DartMultigraph.cycle(4).is_simple()
    assert THETA.betti_number() == 2 and THETA.max_degree() == 3
    with pytest.raises(ValueError):
        tc.DartMultigraph(1, (0, 0), (0, 1))


def test_text_round_trip():
    g, base = tc.DartMultigraph.from_text(THETA.to_text(base=1))
    assert g == THETA and base == 1
    with pytest.raises(ValueError):
        tc.DartMultigraph.from_text("vertices 1\n")


def test_is_covering_examples():
    assert tc.is_covering(tc.CoveringMap.identity(Y2))
    X, _, f = tc.cover_from_monodromy(Y2, 0, [(1, 0), (1, 0)])
    assert tc.is_covering(f)
    # a loop collapsed onto the vertex: the star loses two darts
    Y1 = tc.DartMultigraph.bouquet(1)
    squash = tc.CoveringMap(Y2, Y1, (0,), (0, 1, 0, 1))
    assert not tc.is_covering(squash)


def test_pointed_cover_counts():
    assert len(tc.enumerate_pointed_covers(Y2, 0, 1)) == 1
    assert len(tc.enumerate_pointed_covers(Y2, 0, 2)) == 3
    assert len(tc.enumerate_pointed_covers(Y2, 0, 3)) == 13


def test_theta_graph_has_rank_two_fundamental_group():
    for m in range(1, 5):
        assert len(tc.enumerate_pointed_covers(THETA, 0, m)) == tc.hall_count(2, m)


def test_hall_counts():
    assert [tc.hall_count(1, m) for m in range(1, 6)] == [1] * 5
    assert tc.hall_count(2, 2) == 3
    assert tc.hall_count(2, 4) == 71
    for k, m in [(2, 3), (3, 3), (2, 4)]:
        assert tc.transitive_tuple_count_oracle(k, m) == tc.hall_count(k, m)


def test_second_covers():
    autos = tc.enumerate_second_covers(Y2, Y2)
    assert len(autos) == 8
    for pc in tc.enumerate_pointed_covers(Y2, 0, 2):
        maps = tc.enumerate_second_covers(pc.X, Y2)
        assert maps and all(tc.is_covering(f) for f in maps)
    # degree 3 vertices cannot cover a degree 4 vertex
    assert tc.enumerate_second_covers(THETA, Y2) == []


def test_automorphism_bound():
    C4 = tc.DartMultigraph.cycle(4)
    assert tc.automorphism_count(C4) == 8 <= tc.aut_bound(C4, 2) == 32
    for pc in tc.enumerate_pointed_covers(Y2, 0, 2):
        assert tc.automorphism_count(pc.X, level="vertex") <= tc.aut_bound(pc.X, 4) == 8
    with pytest.raises(ValueError):
        tc.aut_bound(C4, 1)


def test_every_twin_cover_is_valid():
    for m in (1, 2, 3):
        for pc in tc.enumerate_pointed_covers(Y2, 0, m):
            for t in tc.twin_covers_over(pc, Y2, 0):
                assert t.is_valid() and t.degree == m


def test_twin_iso_both_outcomes():
    ident = tc.CoveringMap.identity(Y2)
    autos = tc.enumerate_second_covers(Y2, Y2)
    t = tc.TwinCover(Y2, 0, ident, ident, 0)
    assert tc.twin_iso(t, t)
    other = tc.TwinCover(Y2, 0, ident, next(a for a in autos if a != ident), 0)
    assert not tc.twin_iso(t, other)

    rng = random.Random(3)
    pc = tc.enumerate_pointed_covers(Y2, 0, 3)[5]
    for t in tc.twin_covers_over(pc, Y2, 0)[:10]:
        assert tc.twin_iso(t, relabel(t, rng))
        assert tc.twin_iso(relabel(t, rng), t)


def test_twin_iso_different_degrees():
    ident = tc.CoveringMap.identity(Y2)
    t1 = tc.TwinCover(Y2, 0, ident, ident, 0)
    pc = tc.enumerate_pointed_covers(Y2, 0, 2)[0]
    t2 = tc.twin_covers_over(pc, Y2, 0)[0]
    assert not tc.twin_iso(t1, t2)


def test_twin_iso_is_transitive_on_samples():
    rng = random.Random(11)
    pc = tc.enumerate_pointed_covers(Y2, 0, 3)[2]
    twins = tc.twin_covers_over(pc, Y2, 0)
    for t in rng.sample(twins, 6):
        a, b = relabel(t, rng), relabel(t, rng)
        assert tc.twin_iso(a, b) and tc.twin_iso(t, a) and tc.twin_iso(t, b)


def test_minimality():
    ident = tc.CoveringMap.identity(Y2)
    assert tc.is_minimal(tc.TwinCover(Y2, 0, ident, ident, 0))
    for pc in tc.enumerate_pointed_covers(Y2, 0, 3):
        assert all(tc.is_minimal(t) for t in tc.twin_covers_over(pc, Y2, 0))


def test_doubled_cover_is_not_minimal():
    # Klein-four monodromy: the sheets {0,1} and {2,3} form a block system,
    # so with f2 = f1 the cover factors through a degree-2 twin cover
    X, x0, f = tc.cover_from_monodromy(Y2, 0, [(1, 0, 3, 2), (2, 3, 0, 1)])
    t = tc.TwinCover(X, x0, f, f, 0)
    assert t.is_valid() and t.degree == 4
    assert not tc.is_minimal(t)
    X2, x2, f2 = tc.cover_from_monodromy(Y2, 0, [(1, 0), (0, 1)])
    assert tc.find_morphism(t, tc.TwinCover(X2, x2, f2, f2, 0)) is not None


def test_counts_degree_one_is_automorphism_count():
    assert tc.count_comm_classes(Y2, 0, 1)[0].minimal_classes == 8
    assert tc.count_comm_classes(THETA, 0, 1)[0].minimal_classes == tc.automorphism_count(THETA)


def test_prime_degrees_unaffected_by_minimality():
    a = tc.count_comm_classes(THETA, 0, 3)
    b = tc.count_comm_classes(THETA, 0, 3, minimality=False)
    assert [r.minimal_classes for r in a] == [r.minimal_classes for r in b]


def test_fast_path_matches_bruteforce_small():
    assert tc.count_comm_classes(Y2, 0, 3) == tc.count_comm_classes_bruteforce(Y2, 0, 3)
    assert tc.count_comm_classes(THETA, 0, 2) == tc.count_comm_classes_bruteforce(THETA, 0, 2)


def test_budget_and_preconditions():
    with pytest.raises(BudgetExceeded) as exc:
        tc.count_comm_classes(Y2, 0, 3, max_degree=2)
    assert [r.degree for r in exc.value.partial] == [1, 2]
    with pytest.raises(ValueError):
        tc.count_comm_classes(tc.DartMultigraph.cycle(3), 0, 1)
    big = tc.DartMultigraph.from_edges(3, [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)])
    with pytest.raises(BudgetExceeded):
        tc.count_comm_classes(big, 0, 1)
