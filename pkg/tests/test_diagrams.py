import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcalg.diagrams import (Matching, cobordism_components,
                             enumerate_matchings, glue, surgery_sequence)

CATALAN = [1, 1, 2, 5, 14, 42, 132]


def all_pairings(points):
    """Every perfect matching on `points`, planar or not (brute-force oracle)."""
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for k, other in enumerate(rest):
        for sub in all_pairings(rest[:k] + rest[k + 1:]):
            yield ((first, other),) + sub


def brute_force_matchings(n):
    out = set()
    for arcs in all_pairings(tuple(range(1, 2 * n + 1))):
        arcs = tuple(sorted(tuple(sorted(a)) for a in arcs))
        if all(not (i < k < j < l) for (i, j), (k, l) in itertools.combinations(arcs, 2)):
            out.add(arcs)
    return sorted(out)


@pytest.mark.parametrize("n", range(7))
def test_enumeration_matches_catalan(n):
    ms = enumerate_matchings(n)
    assert len(ms) == CATALAN[n]
    assert len(set(ms)) == len(ms)
    assert [m.arcs for m in ms] == sorted(m.arcs for m in ms)


@pytest.mark.parametrize("n", range(6))
def test_enumeration_matches_brute_force(n):
    assert [m.arcs for m in enumerate_matchings(n)] == brute_force_matchings(n)


def test_n1_single_matching():
    assert [m.arcs for m in enumerate_matchings(1)] == [((1, 2),)]


def test_n2_figure_matchings():
    assert [m.arcs for m in enumerate_matchings(2)] == \
        [((1, 2), (3, 4)), ((1, 4), (2, 3))]


def test_matching_rejects_crossing_arcs():
    with pytest.raises(ValueError):
        Matching(2, ((1, 3), (2, 4)))


def test_matching_rejects_non_matching():
    with pytest.raises(ValueError):
        Matching(2, ((1, 2), (3, 3)))
    with pytest.raises(ValueError):
        Matching(2, ((1, 2), (2, 3)))


def test_matching_json_round_trip():
    for m in enumerate_matchings(3):
        assert Matching.from_json(m.to_json()) == m


def test_glue_identity_pairs():
    a = Matching(2, ((1, 2), (3, 4)))
    d = glue(a, a)
    assert [sorted(c) for c in d.circles] == [[1, 2], [3, 4]]
    assert d.marked == 0


def test_glue_mixed_pair_single_circle():
    a = Matching(2, ((1, 2), (3, 4)))
    b = Matching(2, ((1, 4), (2, 3)))
    assert len(glue(a, b).circles) == 1


def test_glue_n3_single_circle():
    a = Matching(3, ((1, 2), (3, 4), (5, 6)))
    b = Matching(3, ((1, 6), (2, 3), (4, 5)))
    assert len(glue(a, b).circles) == 1


def test_glue_size_mismatch():
    with pytest.raises(ValueError, match="size mismatch"):
        glue(Matching(1, ((1, 2),)), Matching(2, ((1, 2), (3, 4))))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_glue_reflection_symmetry(n):
    for a, b in itertools.product(enumerate_matchings(n), repeat=2):
        assert len(glue(a, b).circles) == len(glue(b, a).circles)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_glue_self_gives_n_circles(n):
    for a in enumerate_matchings(n):
        d = glue(a, a)
        assert len(d.circles) == n
        for circ in d.circles:
            arcs_inside = [arc for arc in a.arcs if set(arc) <= circ]
            assert len(arcs_inside) == 1 and set(arcs_inside[0]) == set(circ)


def test_surgery_sequence_sites():
    ms = enumerate_matchings(2)
    sites = surgery_sequence(ms[0], ms[0], ms[0])
    assert [s.points for s in sites] == [(1, 2), (3, 4)]
    sites = surgery_sequence(ms[0], ms[1], ms[0])
    assert [s.points for s in sites] == [(1, 4), (2, 3)]
    for b in enumerate_matchings(3):
        a = enumerate_matchings(3)[0]
        assert len(surgery_sequence(a, b, a)) == 3


def test_cobordism_stats_merge_and_split_shapes():
    ms = enumerate_matchings(2)
    stats = cobordism_components(ms[0], ms[0], ms[0])
    assert all(s.genus == 0 for s in stats)
    # a!b + b!a through nested middle: one circle merges then splits.
    stats = cobordism_components(ms[0], ms[1], ms[0])
    assert sorted((s.circles_in, s.circles_out, s.saddles) for s in stats) == [(2, 2, 2)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cobordism_genus_matches_replayed_surgeries(n):
    """Static component genus agrees with a dynamic merge/split count."""
    from arcalg.diagrams import connected_components

    for a, b, c in itertools.product(enumerate_matchings(n), repeat=3):
        stats = cobordism_components(a, b, c)
        merges = {id(s): 0 for s in stats}
        by_point = {}
        for s in stats:
            for comp in s.incoming:
                for pt in comp:
                    by_point[pt] = s

        n2 = 2 * n
        points = [(0, p) for p in range(1, n2 + 1)] + [(1, p) for p in range(1, n2 + 1)]
        edges = {}
        for i, j in a.arcs:
            edges[("a", i, j)] = ((0, i), (0, j))
        for i, j in b.arcs:
            edges[("bu", i, j)] = ((0, i), (0, j))
            edges[("bw", i, j)] = ((1, i), (1, j))
        for i, j in c.arcs:
            edges[("c", i, j)] = ((1, i), (1, j))
        comps = connected_components(points, edges.values())
        merge_count = {}
        for i, j in b.arcs:
            del edges[("bu", i, j)], edges[("bw", i, j)]
            edges[("v", i, i)] = ((0, i), (1, i))
            edges[("v", j, j)] = ((0, j), (1, j))
            new_comps = connected_components(points, edges.values())
            stat = by_point[(0, i)]
            key = id(stat)
            if len(new_comps) < len(comps):
                merge_count[key] = merge_count.get(key, 0) + 1
            comps = new_comps

        for s in stats:
            m = merge_count.get(id(s), 0)
            assert s.genus == m - (s.circles_in - 1)
            assert s.genus >= 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cobordism_outgoing_circles_match_glue(n):
    for a, b, c in itertools.product(enumerate_matchings(n), repeat=3):
        stats = cobordism_components(a, b, c)
        outgoing = sorted(tuple(sorted(p for side, p in circ if side == 0))
                          for s in stats for circ in s.outgoing)
        assert outgoing == sorted(tuple(sorted(c)) for c in glue(a, c).circles)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=5), st.randoms())
def test_random_pair_glue_circle_bound(n, rng):
    ms = enumerate_matchings(n)
    a, b = rng.choice(ms), rng.choice(ms)
    k = len(glue(a, b).circles)
    if n == 0:
        assert k == 0
    else:
        assert 1 <= k <= n
