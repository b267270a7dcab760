import pytest

from clusterchar.clustercat.arcs import ArcCategory
from clusterchar.errors import HypothesisViolated, MalformedInput, NotAFrieze
from clusterchar.frieze import (
    bounded_search,
    enumerate_friezes,
    frieze_entries,
    friezes_from_clusters,
    is_frieze,
    lift_frieze,
    make_frieze,
    parse_frieze,
    quiddity,
    triangulations,
)
from conftest import module_category
from oracles import catalan


def fan_quiver(n):
    return ArcCategory(n).module.quiver


def test_a2_all_ones():
    f = make_frieze(fan_quiver(2), (1, 1))
    assert sorted(f.values.values()) == [1, 1, 2, 2, 3]


def test_a2_one_two_is_a_frieze():
    assert is_frieze(fan_quiver(2), (1, 2))


def test_a2_two_two_is_not():
    with pytest.raises(NotAFrieze):
        make_frieze(fan_quiver(2), (2, 2))
    assert not is_frieze(fan_quiver(2), (2, 2))


def test_nonpositive_and_wrong_length():
    with pytest.raises(NotAFrieze):
        make_frieze(fan_quiver(2), (0, 1))
    with pytest.raises(MalformedInput):
        make_frieze(fan_quiver(2), (1,))


@pytest.mark.parametrize("N", [3, 4, 5, 6, 7, 8])
def test_triangulation_count(N):
    ts = triangulations(N)
    assert len(ts) == len(set(ts)) == catalan(N - 2)
    assert all(len(t) == N - 3 for t in ts)


def test_quiddity_sums_and_frieze_symmetry():
    for t in triangulations(7):
        a = quiddity(7, t)
        assert sum(a) == 3 * 7 - 6
        m = frieze_entries(7, t)
        for i in range(1, 8):
            for j in range(1, 8):
                assert m[(i, j)] == m[(j, i)]
        assert all(m[arc] == 1 for arc in t)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_frieze_counts_are_catalan(n):
    q = fan_quiver(n)
    friezes = enumerate_friezes(q)
    assert len(friezes) == catalan(n + 1)
    assert {f.initial for f in friezes} == {f.initial for f in friezes_from_clusters(q)}


def test_bounded_search_finds_a_subset():
    q = fan_quiver(3)
    found = {f.initial for f in bounded_search(q, 4)}
    every = {f.initial for f in enumerate_friezes(q)}
    assert found <= every
    assert every - found == {f for f in every if max(f) > 4}
    assert {f.initial for f in bounded_search(fan_quiver(2), 3)} == {f.initial for f in enumerate_friezes(fan_quiver(2))}


def test_d4_friezes_from_clusters():
    q = module_category("D", 4).quiver
    friezes = friezes_from_clusters(q)
    assert len(friezes) == 50
    assert all(is_frieze(q, f.initial) for f in friezes)
    # one frieze of D4 sends no cluster to 1
    extra = {f.initial for f in bounded_search(q, 4)} - {f.initial for f in friezes}
    assert extra == {(2, 3, 2, 2)}


def test_enumeration_needs_fan_quiver():
    with pytest.raises(HypothesisViolated):
        enumerate_friezes(module_category("D", 4).quiver)


def test_lift_a1_to_a2():
    q = fan_quiver(2)
    f_prime = make_frieze(q.remove_vertex(1), (1,))
    report = lift_frieze(q, 1, f_prime)
    assert report.passed
    assert report.frieze.initial == (1, 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_every_frieze_lifts(n):
    q = fan_quiver(n)
    all_friezes = enumerate_friezes(q)
    for vertex in (0, n - 1):
        for g in enumerate_friezes(q.remove_vertex(vertex)) if vertex else friezes_from_clusters(q.remove_vertex(vertex)):
            report = lift_frieze(q, vertex, g, all_friezes)
            assert report.passed
            assert report.frieze.initial[vertex] == 1


def test_lift_rejects_wrong_quiver():
    q = fan_quiver(3)
    with pytest.raises(HypothesisViolated):
        lift_frieze(q, 0, make_frieze(fan_quiver(1), (1,)))


def test_parse_frieze_round_trip():
    q = fan_quiver(2)
    f = make_frieze(q, (2, 3))
    q2, values = parse_frieze(f.format())
    assert q2.B == q.B and values == [2, 3]
    with pytest.raises(MalformedInput):
        parse_frieze(q.format())
    with pytest.raises(MalformedInput):
        parse_frieze(q.format() + "1 x\n")
