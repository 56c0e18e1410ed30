import pytest

from kaccrystal.classes.kac import KacCrystal
from kaccrystal.classes.rsk import rho
from kaccrystal.classes.verify import (AXIOMS, CHARACTER, CONNECTED, DEFAULT_CHECKS, bijection_witness, check_axioms,
                                       check_character, check_connected, check_rho_commutation, check_shift, default_sweep,
                                       reversed_edge_graph, sweep, verify_instance)
from kaccrystal.classes.weights import Rank
from kaccrystal.data.examples import fake_element
from kaccrystal.tests.test_rsk import _one_one
from kaccrystal.tests.test_utils import get_crystal, get_instance


def test_axioms_pass():
    g = get_crystal("1,1", "0|0").generate_graph()
    report = check_axioms(g)
    assert report.passed
    assert report.checks[0].counts == {'vertices': 2, 'edges': 1}


def test_reversed_edge_fails():
    g = get_crystal("1,1", "0|0").generate_graph()
    bad = reversed_edge_graph(g, (0, 0, 1))
    report = check_axioms(bad)
    assert not report.passed
    assert report.checks[0].witness == [1, 0, 0]


def test_reversed_edge_fails_without_crystal():
    g = get_crystal("2,1", "1,0|0").generate_graph()
    edge = g.colored_edges()[0]
    bad = reversed_edge_graph(g, edge)
    bad.graph['crystal'] = None
    assert not check_axioms(bad).passed


def test_connected():
    report = check_connected(get_crystal("2,2", "0,0|0,0").generate_graph())
    counts = report.checks[0].counts
    assert report.passed
    assert counts['components'] == 1
    assert counts['vertices'] == 16


def test_fake_highest_weight():
    crystal = get_crystal("1,2", "0|1,0")
    g = crystal.generate_graph()
    fake = g.vertex(fake_element())
    assert all(crystal.e(k, fake_element()) is None for k in crystal.colors)
    assert g.weight(fake) != crystal.lam
    report = check_connected(g)
    counts = report.checks[0].counts
    assert report.passed
    assert counts['fake'] >= 1
    assert fake in counts['fake_vertices']
    assert counts['highest_weight'] == counts['fake'] + 1


def test_character():
    rank, lam = get_instance("1,1", "0|0")
    report = check_character(get_crystal("1,1", "0|0").generate_graph(), rank, lam)
    assert report.passed
    assert report.checks[0].counts == {'vertices': 2, 'expected': 2}


def test_character_catches_a_missing_vertex():
    g = get_crystal("2,1", "1,0|0").generate_graph()
    g.remove_node(max(g.nodes))
    report = check_character(g)
    assert not report.passed
    assert report.checks[0].witness['found'] == report.checks[0].witness['expected'] - 1


@pytest.mark.parametrize("rank_text, lam_text", [("1,1", "-1|1"), ("2,2", "-1,-2|2,1")])
def test_corrupted_sigma_rule_fails(rank_text, lam_text):
    rank, lam = get_instance(rank_text, lam_text)
    report = check_rho_commutation(rank, lam, corrupt=True)
    check = report.checks[0]
    assert not check.passed
    assert check.witness['color'] == 0
    assert report.flags['corrupt']


@pytest.mark.parametrize("rank_text, lam_text, k", [("1,1", "0|0", 1), ("2,1", "1,0|0", -1), ("1,2", "0|1,0", 2)])
def test_shift(rank_text, lam_text, k):
    rank, lam = get_instance(rank_text, lam_text)
    report = check_shift(rank, lam, k)
    assert report.passed
    assert report.flags == {'k': k}


def test_verify_instance():
    rank, lam = get_instance("2,1", "1,0|0")
    report = verify_instance(rank, lam)
    assert report.passed
    assert [check.name for check in report.checks] == [AXIOMS, CONNECTED, CHARACTER, 'compat']


def test_verify_instance_in_the_rho_window():
    rank, lam = get_instance("1,1", "-1|1")
    report = verify_instance(rank, lam)
    assert report.passed
    assert 'rho' in [check.name for check in report.checks]


def test_verify_instance_corrupt():
    rank, lam = get_instance("1,1", "-1|1")
    report = verify_instance(rank, lam, corrupt=True)
    assert not report.passed
    failed = {check.name for check in report.checks if not check.passed}
    assert AXIOMS in failed
    assert 'rho' in failed


def test_report_dict():
    rank, lam = get_instance("1,1", "0|0")
    data = verify_instance(rank, lam, (AXIOMS,)).to_dict()
    assert data == {
        'instance': {'rank': [1, 1], 'lambda': "0|0", 'flags': {}},
        'checks': [{'name': AXIOMS, 'pass': True, 'witness': None, 'counts': {'vertices': 2, 'edges': 1}, 'ms': 0}],
    }


def test_default_sweep():
    instances = default_sweep(ranks=((1, 1),))
    assert len(instances) == 49
    assert all(lam.is_dominant() for _, lam in instances)
    assert all(-2 <= x <= 4 for _, lam in instances for x in lam.coords)
    assert len(default_sweep()) == len(set(default_sweep()))


def test_small_sweep():
    instances = default_sweep(ranks=((1, 1), (2, 1), (1, 2)), low=-1, high=1)
    reports = sweep(instances, DEFAULT_CHECKS, threads=2, seed=7)
    assert [(report.rank, report.lam) for report in reports] == instances
    failed = [(str(r.lam), c.name, c.witness) for r in reports for c in r.checks if not c.passed]
    assert failed == []


def test_sweep_skips_over_the_cap():
    rank = Rank(2, 2)
    instances = default_sweep(ranks=((2, 2),), low=0, high=0)
    assert KacCrystal(*instances[0]).cardinality() == 16
    with pytest.warns(UserWarning):
        assert sweep(instances, (AXIOMS,), cap=4) == []
    assert len(sweep(instances, (AXIOMS,), cap=16)) == 1
    assert instances[0][0] == rank


def test_backends_agree():
    pytest.importorskip("igraph")
    g = get_crystal("2,2", "1,0|1,0").generate_graph()
    assert g.components("igraph") == g.components("networkx")
    assert g.sources("igraph") == g.sources("networkx")
    assert check_connected(g, "igraph").checks[0].counts == check_connected(g).checks[0].counts


def test_unknown_backend():
    g = get_crystal("1,1", "0|0").generate_graph()
    with pytest.raises(ValueError):
        g.components("graphtool")


def test_bijection_witness():
    rank, lam, empty, full = _one_one()
    low, high = rho(rank, lam, empty), rho(rank, lam, full)
    assert bijection_witness({empty: low, full: high}, [low, high]) is None
    assert bijection_witness({empty: low, full: low}) == {
        'collision': [empty.to_dict(), full.to_dict()], 'image': low.to_dict(),
    }
    assert bijection_witness({empty: low}, [low, high]) == {'missing': high.to_dict()}
    assert bijection_witness({empty: low, full: high}, [low]) == {'outside': full.to_dict()}
