import pytest
from hypothesis import given, settings

from kaccrystal.classes.errors import NotDominant, PreconditionViolated, SizeCapExceeded
from kaccrystal.classes.kac import DUAL, KacElement, apply_kac, kac_signature
from kaccrystal.classes.odd_roots import PREC, PREC1, PREC2, OddRootSet, apply_odd_root_set, sort_roots
from kaccrystal.classes.tableau import B_MINUS, B_PLUS, Tableau
from kaccrystal.classes.weights import Rank, Root
from kaccrystal.classes.word_crystal import E, F
from kaccrystal.data.examples import (OPERATOR_F0_S, OPERATOR_F2_V, OPERATOR_F_MINUS_2_S, OPERATOR_RANK, OPERATOR_S,
                                      OPERATOR_U, operator_element, operator_lambda)
from kaccrystal.tests.test_utils import get_crystal, odd_root_sets


def test_root_orders():
    s = OddRootSet.from_roots(3, 3, OPERATOR_S)
    assert sort_roots(s, PREC) == [(2, 1), (2, 2), (1, 3)]
    assert sort_roots(s, PREC1) == [(1, 3), (2, 2), (2, 1)]
    assert sort_roots(s, PREC2) == [(1, 3), (2, 1), (2, 2)]
    single = OddRootSet.from_roots(3, 3, [(2, 2)])
    assert all(sort_roots(single, order) == [(2, 2)] for order in (PREC, PREC1, PREC2))


def test_odd_root_set_matrix():
    s = OddRootSet.from_roots(2, 3, [(1, 3), (2, 1)])
    assert s.matrix() == [[0, 0, 1], [1, 0, 0]]
    assert OddRootSet.from_matrix(s.matrix()) == s
    assert len(s) == 2
    with pytest.raises(ValueError):
        OddRootSet.from_roots(2, 3, [(3, 1)])


def test_zero_color_on_root_sets():
    s = OddRootSet.from_roots(3, 3, OPERATOR_S)
    assert apply_odd_root_set(0, E, s) is None
    assert apply_odd_root_set(0, F, s) == s.add((1, 1))


@given(odd_root_sets(2, 3))
def test_root_set_operators_are_mutually_inverse(s):
    for k in range(-1, 3):
        t = apply_odd_root_set(k, F, s)
        if t is not None:
            assert apply_odd_root_set(k, E, t) == s
            assert len(t) == len(s) + (1 if k == 0 else 0)


def test_operator_example():
    m, n = OPERATOR_RANK
    x = operator_element()
    assert apply_kac(0, E, x) is None
    assert apply_kac(0, F, x) == KacElement(OddRootSet.from_roots(m, n, OPERATOR_F0_S), x.t_plus, x.t_minus)
    assert apply_kac(-2, F, x) == KacElement(OddRootSet.from_roots(m, n, OPERATOR_F_MINUS_2_S), x.t_plus, x.t_minus)
    assert apply_kac(2, F, x) == KacElement(x.s, x.t_plus, Tableau.straight(B_MINUS, OPERATOR_F2_V))


def test_operator_example_is_a_vertex():
    crystal = get_crystal("3,3", "4,3,2|3,1,0")
    assert crystal.lam == operator_lambda()
    x = operator_element()
    assert x.t_plus.shape == crystal.plus.shape
    assert x.t_minus.shape == crystal.minus.shape
    for k in crystal.colors:
        data = kac_signature(x, k)
        if data.f is not None:
            assert crystal.weight(data.f) == crystal.weight(x) - Root.simple(crystal.rank, k)
            assert crystal.e(k, data.f) == x


def test_highest_weight_element():
    crystal = get_crystal("3,3", "4,3,2|3,1,0")
    h = crystal.highest_weight_element
    assert h.t_plus.rows == Tableau.straight(B_PLUS, [[-3] * 4, [-2] * 3, [-1] * 2]).rows
    assert crystal.weight(h) == crystal.lam
    assert all(crystal.e(k, h) is None for k in crystal.colors)


@pytest.mark.parametrize("rank_text, lam_text, vertices, edges", [
    ("1,1", "0|0", 2, 1),
    ("2,1", "0,0|0", 4, None),
    ("2,1", "1,0|0", 8, None),
    ("2,2", "0,0|0,0", 16, None),
])
def test_small_graphs(rank_text, lam_text, vertices, edges):
    g = get_crystal(rank_text, lam_text).generate_graph()
    assert g.number_of_nodes() == vertices
    if edges is not None:
        assert g.number_of_edges() == edges
    assert len(g.components()) == 1


def test_one_one_graph():
    g = get_crystal("1,1", "0|0").generate_graph()
    assert g.colored_edges() == [(0, 0, 1)]
    assert g.element(0).s.bits == 0
    assert (1, 1) in g.element(1).s


@pytest.mark.parametrize("rank_text, lam_text", [
    ("1,1", "2|-1"),
    ("2,1", "-1,-2|1"),
    ("1,2", "1|2,-1"),
    ("2,2", "1,0|1,0"),
])
def test_vertex_count(rank_text, lam_text):
    crystal = get_crystal(rank_text, lam_text)
    g = crystal.generate_graph()
    assert g.number_of_nodes() == crystal.cardinality() == len(crystal.elements())
    assert set(g.elements()) == set(crystal.elements())


def test_threads_give_the_same_graph():
    crystal = get_crystal("2,2", "1,0|1,0")
    serial = crystal.generate_graph()
    parallel = crystal.generate_graph(threads=4)
    assert serial.elements() == parallel.elements()
    assert serial.colored_edges() == parallel.colored_edges()


def test_cap():
    crystal = get_crystal("2,2", "0,0|0,0")
    with pytest.raises(SizeCapExceeded) as info:
        crystal.generate_graph(cap=10)
    assert info.value.cardinality == 16


def test_not_dominant():
    with pytest.raises(NotDominant):
        get_crystal("2,1", "0,1|0")


def test_dual_model():
    crystal = get_crystal("1,1", "-1|1", model=DUAL)
    assert crystal.ell == 2
    assert crystal.plus.shape.inner == (1,)
    g = crystal.generate_graph()
    assert g.number_of_nodes() == crystal.cardinality() == 2
    with pytest.raises(PreconditionViolated):
        get_crystal("1,1", "1|1", model=DUAL)


def test_element_dict():
    x = operator_element()
    data = x.to_dict()
    assert data['S'] == [[0, 0, 1], [1, 1, 0], [0, 0, 0]]
    assert data['Tplus']['rows'][0] == ["b3", "b3", "b3", "b2"]
    assert KacElement.from_dict(data) == x


@settings(max_examples=30)
@given(odd_root_sets(3, 3))
def test_kac_operators_are_mutually_inverse(s):
    x = KacElement(s, Tableau.straight(B_PLUS, OPERATOR_U), operator_element().t_minus)
    rank = Rank(3, 3)
    for k in rank.colors:
        y = apply_kac(k, F, x)
        if y is not None:
            assert apply_kac(k, E, y) == x
        z = apply_kac(k, E, x)
        if z is not None:
            assert apply_kac(k, F, z) == x
