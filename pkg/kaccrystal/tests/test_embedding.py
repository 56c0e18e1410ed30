import pytest

from kaccrystal.classes.embedding import (complement_dual, complement_plus, pi_bar, reassemble, shift_kac_iso,
                                          sigma_iso, split_hook, transport_iso, xi)
from kaccrystal.classes.errors import MalformedHookTableau, MultipleSources, NotIsomorphic
from kaccrystal.classes.kac import FactorCrystal, KacCrystal, KacElement
from kaccrystal.classes.odd_roots import OddRootSet
from kaccrystal.classes.shapes import SkewShape, partitions_in_box, partitions_inside
from kaccrystal.classes.tableau import B, B_MINUS, B_PLUS, Tableau, enumerate_sst
from kaccrystal.classes.verify import check_compatibility, check_reading_independence, hook_sweep
from kaccrystal.classes.weights import Rank, Weight, delta_plus, hook_bijection
from kaccrystal.data.examples import (EMBED_ETA, EMBED_T_BELOW, EMBED_T_MINUS, EMBED_T_PLUS, embed_image,
                                      embed_lambda, embed_sigma, embed_tableau)
from kaccrystal.tests.test_utils import get_instance


def test_split_hook_example():
    rank = Rank(3, 3)
    parts = split_hook(rank, embed_tableau())
    assert parts.t_plus_top == Tableau.straight(B_PLUS, EMBED_T_PLUS)
    assert parts.t_minus_top == Tableau(B_MINUS, SkewShape((4, 3, 2), EMBED_ETA), EMBED_T_MINUS)
    assert parts.t_below == Tableau.straight(B_MINUS, EMBED_T_BELOW)
    assert parts.eta == EMBED_ETA
    assert reassemble(parts) == embed_tableau()


def test_split_all_barred():
    rank = Rank(2, 2)
    parts = split_hook(rank, Tableau.straight(B, [[-2, -1], [-1]]))
    assert len(parts.t_minus_top) == 0
    assert len(parts.t_below) == 0


def test_split_rejects_barred_below():
    rank = Rank(1, 2)
    with pytest.raises(MalformedHookTableau):
        split_hook(rank, Tableau.straight(B, [[-1], [-1]]))
    with pytest.raises(MalformedHookTableau):
        split_hook(rank, Tableau.straight(B, [[1], [-1]]))


def test_sigma_example():
    rank = Rank(3, 3)
    t_plus = Tableau.straight(B_PLUS, EMBED_T_PLUS)
    assert complement_plus(t_plus, 4, 3) == embed_sigma()
    assert sigma_iso(rank, EMBED_ETA, 4)(t_plus) == embed_sigma()
    assert complement_dual(embed_sigma(), 3) == t_plus


@pytest.mark.parametrize("m, ell", [(2, 2), (2, 3), (3, 2)])
def test_complement_is_the_transport(m, ell):
    rank = Rank(m, 1)
    for eta in partitions_in_box(m, ell):
        iso = sigma_iso(rank, eta, ell)
        assert iso.shift == -ell * delta_plus(rank)
        for t in enumerate_sst(SkewShape.straight(eta), B_PLUS, m, 1):
            u = complement_plus(t, ell, m)
            assert iso(t) == u
            assert iso.inverse()(u) == t
            assert complement_dual(u, m) == t


def test_transport_identity():
    rank = Rank(2, 1)
    g = FactorCrystal(rank, B_PLUS, SkewShape.straight((2, 1))).graph()
    iso = transport_iso(g, g)
    assert all(v == w for v, w in iso.vertex_map.items())
    assert iso.shift == Weight.zero(rank)
    assert len(iso) == g.number_of_nodes()


def test_transport_failures():
    rank = Rank(2, 1)
    src = FactorCrystal(rank, B_PLUS, SkewShape.straight((1,))).graph()
    dst = FactorCrystal(rank, B_PLUS, SkewShape.straight((2,))).graph()
    with pytest.raises(NotIsomorphic):
        transport_iso(src, dst)
    both = FactorCrystal(rank, B_PLUS, SkewShape.straight((1,)), colors=()).graph()
    with pytest.raises(MultipleSources):
        transport_iso(both, src)


def test_xi_example():
    rank = Rank(3, 3)
    lam = embed_lambda()
    b = xi(rank, lam, embed_tableau())
    assert b == embed_image()
    assert KacCrystal(rank, lam).weight(b) == embed_tableau().weight(rank)
    assert pi_bar(rank, lam, b) == embed_tableau()


def test_xi_single_box():
    rank = Rank(3, 3)
    t = Tableau.straight(B, [[-3]])
    lam = hook_bijection(rank, (1,))
    b = xi(rank, lam, t)
    assert b.s == OddRootSet(3, 3)
    assert b.t_plus == Tableau.straight(B_PLUS, [[-3]])
    assert len(b.t_minus) == 0
    assert b == KacCrystal(rank, lam).highest_weight_element


def test_xi_highest_weight():
    rank = Rank(2, 2)
    lam = hook_bijection(rank, (3, 2, 2, 1))
    t = Tableau.straight(B, [[-2, -2, -2], [-1, -1], [1, 2], [1]])
    assert xi(rank, lam, t) == KacCrystal(rank, lam).highest_weight_element


def test_xi_rejects_wrong_shape():
    rank = Rank(3, 3)
    with pytest.raises(MalformedHookTableau):
        xi(rank, embed_lambda(), Tableau.straight(B, [[-3]]))


def test_pi_bar_out_of_image():
    rank = Rank(1, 1)
    lam = hook_bijection(rank, (2,))
    wrong = KacElement(OddRootSet(1, 1), Tableau.straight(B_PLUS, [[-1]]), Tableau.empty(B_MINUS))
    assert pi_bar(rank, lam, wrong) is None


def test_single_box_image():
    rank = Rank(2, 3)
    report = check_compatibility(rank, hook_bijection(rank, (1,)))
    check = report.checks[0]
    assert check.passed, check.witness
    assert check.counts['image'] == 5
    assert check.counts['pi_bar_image'] == 5


def test_compatibility_in_the_box():
    rank = Rank(2, 2)
    instances = hook_sweep(rank, (3, 3, 2, 2))
    assert len(instances) == len(partitions_inside((3, 3, 2, 2)))
    for rank, lam in instances:
        report = check_compatibility(rank, lam)
        check = report.checks[0]
        assert check.passed, (str(lam), check.witness)
        assert check.counts['image'] == check.counts['sst']


def test_reading_independence_in_the_box():
    for rank, lam in hook_sweep(Rank(2, 2), (3, 3, 2, 2)):
        assert check_reading_independence(rank, lam).passed


@pytest.mark.parametrize("rank_text, lam_text, k", [("1,1", "0|0", 1), ("2,1", "1,0|0", 2), ("2,2", "0,0|1,0", -1)])
def test_shift_iso(rank_text, lam_text, k):
    rank, lam = get_instance(rank_text, lam_text)
    iso = shift_kac_iso(rank, lam, k)
    source = KacCrystal(rank, lam)
    target = KacCrystal(rank, lam + iso.shift)
    for x in source.elements():
        y = iso(x)
        assert target.weight(y) == source.weight(x) + iso.shift
        for c in rank.colors:
            fx = source.f(c, x)
            assert (fx is None) == (target.f(c, y) is None)
            if fx is not None:
                assert iso(fx) == target.f(c, y)
