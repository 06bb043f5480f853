import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexcolor.exact import enumerate_maximal_paths
from convexcolor.thrackles import (ThracklePath, common_edge,
                                   conflict_triples, decompose, from_cycle,
                                   is_maximal_thrackle, is_thrackle, path_cycle_labels,
                                   path_from_thrackle, random_disjoint_cycle_pair,
                                   random_family, random_maximal_thrackle, random_path,
                                   split_vertex, thrackle_from_path, wedge_apex)

STAR5 = frozenset({(1, 2), (1, 3), (1, 4), (1, 5), (2, 5)})


def test_is_thrackle_examples():
    assert is_thrackle(5, {(1, 2), (1, 3), (1, 4)})          # common endpoint star
    assert not is_thrackle(5, {(1, 3), (4, 5)})              # disjoint pair
    assert is_thrackle(4, {(1, 3), (2, 4), (1, 2)})          # pairwise check


def test_is_maximal_examples():
    assert is_maximal_thrackle(5, STAR5)
    assert not is_maximal_thrackle(5, {(1, 2), (1, 3), (1, 4), (1, 5)})   # can add (2,5)
    with pytest.raises(ValueError):
        is_maximal_thrackle(5, {(1, 3), (4, 5)})             # not a thrackle at all


@pytest.mark.parametrize("n", range(3, 8))
def test_maximality_agrees_with_cardinality(n):
    # every staircase-derived thrackle is maximal and has exactly n edges;
    # dropping any edge makes it non-maximal
    for path in enumerate_maximal_paths(n):
        edges = frozenset(path.cells)
        assert len(edges) == n
        assert is_maximal_thrackle(n, edges)
        sub = set(sorted(edges)[1:])
        if is_thrackle(n, sub):
            assert not is_maximal_thrackle(n, sub)


def test_random_n10_paths_are_maximal_by_extension_check():
    rng = random.Random(8)
    for _ in range(25):
        path = random_path(10, rng)
        assert is_maximal_thrackle(10, frozenset(path.cells))


def test_decompose_star():
    thr = decompose(5, STAR5)
    assert thr.cycle == (1, 2, 5)
    assert thr.pendant_apex == {3: 1, 4: 1}
    assert thr.cycle_edges == frozenset({(1, 2), (2, 5), (1, 5)})


def test_decompose_triangle():
    thr = decompose(3, {(1, 2), (2, 3), (1, 3)})
    assert thr.cycle == (1, 2, 3) and thr.pendant_apex == {}


def test_decompose_rejects_non_maximal():
    with pytest.raises(ValueError):
        decompose(5, {(1, 2), (1, 3), (1, 4), (1, 5)})
    with pytest.raises(ValueError):
        decompose(5, {(1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (3, 5)})


@pytest.mark.parametrize("n", range(3, 8))
def test_cycle_is_the_set_of_path_turning_points(n):
    for path in enumerate_maximal_paths(n):
        thr = thrackle_from_path(path)
        assert frozenset(thr.cycle) == path_cycle_labels(path)


def test_wedge_apex_examples():
    star = decompose(5, STAR5)
    assert wedge_apex(star, 3) == 1
    thr6 = from_cycle(6, (1, 2, 5))
    # derived: the apex must be the unique neighbour of 6 in the edge set
    (nbr,) = [v for v in range(1, 6) if (v, 6) in thr6.edges]
    assert wedge_apex(thr6, 6) == nbr
    with pytest.raises(ValueError):
        wedge_apex(star, 1)   # on the cycle


@pytest.mark.parametrize("n", range(3, 9))
def test_pendants_live_in_their_apex_wedge(n):
    for path in enumerate_maximal_paths(n):
        thr = thrackle_from_path(path)
        for u, apex in thr.pendant_apex.items():
            assert wedge_apex(thr, u) == apex
            assert (min(u, apex), max(u, apex)) in thr.edges


def test_path_validation():
    with pytest.raises(ValueError):
        ThracklePath(n=5, cells=((2, 3), (2, 4)))            # must start at row 1
    with pytest.raises(ValueError):
        ThracklePath(n=5, cells=((1, 3), (1, 4)))            # must end at (r, n)
    with pytest.raises(ValueError):
        ThracklePath(n=5, cells=((1, 3), (2, 4), (3, 5)))    # diagonal step
    p = ThracklePath(n=3, cells=((1, 2), (1, 3), (2, 3)))
    assert p.r == 2


def test_path_thrackle_roundtrip_trivial():
    p = ThracklePath(n=3, cells=((1, 2), (1, 3), (2, 3)))
    thr = thrackle_from_path(p)
    assert thr.edges == frozenset(p.cells)
    assert path_from_thrackle(thr) == p


@pytest.mark.parametrize("n", range(3, 9))
def test_path_thrackle_roundtrip_exhaustive(n):
    for path in enumerate_maximal_paths(n):
        assert path_from_thrackle(thrackle_from_path(path)) == path


def test_common_edge_star_example():
    t1 = from_cycle(6, (6, 1, 2))   # star at 1 closed by (2, 6)
    t2 = from_cycle(6, (3, 4, 5))   # star at 4 closed by (3, 5)
    assert t1.edges == frozenset({(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 6)})
    assert common_edge(t1, t2) == (1, 4)
    assert t1.edges & t2.edges == {(1, 4)}


def test_common_edge_requires_disjoint_cycles():
    t = from_cycle(6, (1, 2, 3))
    with pytest.raises(ValueError):
        common_edge(t, t)


def test_common_edge_random_pairs():
    rng = random.Random(2024)
    for _ in range(300):
        n = rng.randint(6, 20)
        t1, t2 = random_disjoint_cycle_pair(n, rng)
        e = common_edge(t1, t2)
        assert e in (t1.edges & t2.edges)        # brute-force intersection oracle
        in1 = (e[0] in t1.cycle_set, e[1] in t1.cycle_set)
        in2 = (e[0] in t2.cycle_set, e[1] in t2.cycle_set)
        assert sorted([in1.count(True), in2.count(True)]) == [1, 1]
        # argument order only changes the walk's start; both answers qualify
        assert common_edge(t2, t1) in (t1.edges & t2.edges)


def test_conflict_triples_examples():
    t1 = from_cycle(8, (8, 1, 2))
    t2 = from_cycle(8, (4, 5, 6))
    assert conflict_triples([t1, t2]) == set()
    tri = from_cycle(3, (1, 2, 3))
    assert conflict_triples([tri, tri]) == {(1, 0, 1), (2, 0, 1), (3, 0, 1)}


def test_conflict_triples_matches_direct_loop():
    rng = random.Random(11)
    for _ in range(50):
        fam = random_family(rng.randint(4, 12), rng.randint(2, 5), rng)
        expected = {
            (v, i, j)
            for i in range(len(fam))
            for j in range(i + 1, len(fam))
            for v in set(fam[i].cycle) & set(fam[j].cycle)
        }
        assert conflict_triples(fam) == expected


def test_split_vertex_two_triangles():
    fam = [from_cycle(5, (1, 2, 3)), from_cycle(5, (3, 4, 5))]
    assert conflict_triples(fam) == {(3, 0, 1)}
    fam2 = split_vertex(fam, 3, 0, 1)
    assert all(t.n == 6 for t in fam2)
    assert sum(len(t.edges) for t in fam2) == sum(len(t.edges) for t in fam) + 2
    assert conflict_triples(fam2) == set()
    for t in fam2:
        assert is_thrackle(6, t.edges)


def test_split_vertex_rejects_non_conflict():
    fam = [from_cycle(6, (1, 2, 3)), from_cycle(6, (4, 5, 6))]
    assert conflict_triples(fam) == set()
    with pytest.raises(ValueError):
        split_vertex(fam, 1, 0, 1)


def test_iterated_splitting_terminates():
    rng = random.Random(5)
    for _ in range(20):
        fam = random_family(rng.randint(5, 10), 3, rng)
        budget = len(conflict_triples(fam))
        steps = 0
        while True:
            conflicts = conflict_triples(fam)
            if not conflicts:
                break
            v, i, j = min(conflicts)
            fam = split_vertex(fam, v, i, j)
            steps += 1
            assert steps <= budget
        assert steps <= budget


def crossing_fan(m: int) -> frozenset:
    return frozenset((i, i + m // 2) for i in range(1, m // 2 + 1))


def all_perfect_matchings(points):
    if not points:
        yield frozenset()
        return
    first, rest = points[0], points[1:]
    for idx, partner in enumerate(rest):
        pair = (first, partner)
        others = rest[:idx] + rest[idx + 1:]
        for matching in all_perfect_matchings(others):
            yield matching | {pair}


@pytest.mark.parametrize("m", [2, 4, 6, 8, 10])
def test_unique_matching_thrackle_is_the_crossing_fan(m):
    fan = crossing_fan(m)
    found = [mt for mt in all_perfect_matchings(tuple(range(1, m + 1)))
             if is_thrackle(m, mt)]
    assert found == [fan]


def test_sampler_is_deterministic_given_seed():
    a = random_maximal_thrackle(12, random.Random(99))
    b = random_maximal_thrackle(12, random.Random(99))
    assert a == b and a.cycle == b.cycle


def test_random_path_is_valid_and_varied():
    rng = random.Random(3)
    seen_r = set()
    for _ in range(200):
        p = random_path(9, rng)
        assert len(p.cells) == 9
        seen_r.add(p.r)
    assert seen_r == set(range(2, 9))


@given(st.integers(3, 20), st.integers(0, 2**32 - 1))
@settings(max_examples=100)
def test_random_thrackle_structure(n, seed):
    thr = random_maximal_thrackle(n, random.Random(seed))
    assert len(thr.edges) == n
    assert len(thr.cycle) % 2 == 1 and len(thr.cycle) >= 3
    assert set(thr.pendant_apex) | set(thr.cycle) == set(range(1, n + 1))


def test_from_cycle_prescribes_the_cycle():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randint(5, 24)
        m = rng.choice(range(3, n + 1, 2))
        labels = rng.sample(range(1, n + 1), m)
        thr = from_cycle(n, labels)
        assert thr.cycle_set == frozenset(labels)
        assert len(thr.edges) == n
        assert is_maximal_thrackle(n, thr.edges)
