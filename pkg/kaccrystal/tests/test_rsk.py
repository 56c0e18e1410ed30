import pytest

from kaccrystal.classes.errors import PreconditionViolated
from kaccrystal.classes.kac import DUAL, KacCrystal, KacElement, default_ell
from kaccrystal.classes.odd_roots import OddRootSet
from kaccrystal.classes.rsk import (DOT, MINUS, PLUS, KappaCrystal, KappaElement, apply_kappa, kappa_window, rho,
                                    rho_inv, sigma_signs)
from kaccrystal.classes.shapes import SkewShape
from kaccrystal.classes.tableau import B_DUAL, B_MINUS, Tableau, validate
from kaccrystal.classes.verify import check_rho_commutation
from kaccrystal.classes.word_crystal import E, F
from kaccrystal.tests.test_utils import get_instance


def _one_one():
    rank, lam = get_instance("1,1", "-1|1")
    u = Tableau.from_cells(B_DUAL, SkewShape.rectangle(2, 1, (1,)), {(0, 1): 1})
    v = Tableau.straight(B_MINUS, [[1]])
    empty = KacElement(OddRootSet(1, 1), u, v)
    full = KacElement(OddRootSet.from_roots(1, 1, [(1, 1)]), u, v)
    return rank, lam, empty, full


def test_default_ell():
    rank, lam = get_instance("2,2", "-1,-2|2,1")
    assert default_ell(rank, lam) == 4
    assert kappa_window(rank, lam) == (4, (3, 2), (2, 1))


def test_empty_set_inserts_nothing():
    rank, lam, empty, _ = _one_one()
    kappa = rho(rank, lam, empty)
    assert kappa.p == empty.t_plus
    assert len(kappa.q) == 0
    assert kappa.v == empty.t_minus
    assert kappa.eta == (1,)
    assert rho_inv(rank, lam, kappa) == empty


def test_single_root():
    rank, lam, _, full = _one_one()
    kappa = rho(rank, lam, full)
    assert kappa.p.rows == ((1, 1),)
    assert kappa.q.cells() == {(0, 0): 1}
    assert kappa.eta == ()
    assert rho_inv(rank, lam, kappa) == full


def test_zero_color_on_kappa():
    rank, lam, empty, full = _one_one()
    low, high = rho(rank, lam, empty), rho(rank, lam, full)
    assert sigma_signs(high) == [DOT, MINUS]
    assert sigma_signs(low) == [DOT, PLUS]
    assert apply_kappa(0, E, high) == low
    assert apply_kappa(0, F, low) == high
    assert apply_kappa(0, E, low) is None
    assert apply_kappa(0, F, high) is None


@pytest.mark.parametrize("rank_text, lam_text", [("1,1", "-1|1"), ("2,2", "-1,-2|2,1")])
@pytest.mark.parametrize("extra", [0, 1])
def test_rho_commutes(rank_text, lam_text, extra):
    rank, lam = get_instance(rank_text, lam_text)
    report = check_rho_commutation(rank, lam, default_ell(rank, lam) + extra)
    check = report.checks[0]
    assert check.passed, check.witness
    assert check.counts['domain'] == check.counts['kappa'] == check.counts['image']


def test_rho_is_a_bijection():
    rank, lam = get_instance("2,2", "-1,-2|2,1")
    domain = KacCrystal(rank, lam, model=DUAL)
    target = KappaCrystal(rank, lam)
    images = [rho(rank, lam, x) for x in domain.elements()]
    assert set(images) == set(target.elements())
    assert len(set(images)) == len(images)
    for kappa in images:
        assert validate(kappa.p) and validate(kappa.q) and validate(kappa.v)


def test_window():
    rank, lam = get_instance("1,1", "0|1")
    with pytest.raises(PreconditionViolated):
        kappa_window(rank, lam)
    assert kappa_window(rank, lam, strict=False) == (1, (1,), (1,))
    rank, lam = get_instance("1,1", "-1|1")
    with pytest.raises(PreconditionViolated):
        kappa_window(rank, lam, ell=1)


def test_narrow_rectangle_warns():
    rank, lam = get_instance("2,2", "-1,-2|2,1")
    with pytest.warns(UserWarning):
        kappa_window(rank, lam, ell=3)


def test_wrong_factor_shape():
    rank, lam, empty, _ = _one_one()
    with pytest.raises(PreconditionViolated):
        rho(rank, lam, empty, ell=3)


def test_kappa_dict():
    rank, lam, _, full = _one_one()
    kappa = rho(rank, lam, full)
    data = kappa.to_dict()
    assert data['ell'] == 2
    assert data['mu'] == [1]
    assert data['eta'] == []
    assert KappaElement.from_dict(data) == kappa


@pytest.mark.parametrize("rank_text, lam_text", [("1,1", "-1|1"), ("2,1", "-1,-1|1"), ("2,2", "-1,-2|2,1")])
def test_zero_color_acts_where_sigma_says(rank_text, lam_text):
    rank, lam = get_instance(rank_text, lam_text)
    for kappa in KappaCrystal(rank, lam).elements():
        first = next((sign for sign in sigma_signs(kappa) if sign != DOT), DOT)
        assert (apply_kappa(0, F, kappa) is not None) == (first == PLUS)
        assert (apply_kappa(0, E, kappa) is not None) == (first == MINUS)
