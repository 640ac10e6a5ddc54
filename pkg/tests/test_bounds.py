from fractions import Fraction

import pytest

from trajspace import bounds


@pytest.mark.parametrize("genus,volume", [(0, 0), (1, 0), (2, 4), (3, 8), (4, 12)])
def test_surface_simplicial_volume(genus, volume):
    assert bounds.surface_simplicial_volume(genus) == volume


def test_volume_rejects_negative_genus():
    with pytest.raises(ValueError):
        bounds.surface_simplicial_volume(-1)


@pytest.mark.parametrize("q,deg2", [(0, 0), (1, 0), (2, 1), (4, 1)])
def test_hdelta_ranks(q, deg2):
    hd = bounds.hdelta_ranks_surface(q)
    assert hd["DX"]["1"] == 0
    assert hd["X"]["1"] == 0 and hd["X"]["2"] == 0
    assert hd["DX"]["2"] == deg2


def test_check_all_annulus3(annulus3):
    rep = bounds.check_all(annulus3.scene, annulus3.graph, annulus3.complexity,
                           annulus3.double.betti_numbers())
    assert rep.genus_DX == 4
    assert rep.simplicial_volume_DX == 12
    assert rep.rho1_ratio == Fraction(1, 2)
    assert rep.all_pass


def test_check_all_fig1(fig1):
    rep = bounds.check_all(fig1.scene, fig1.graph, fig1.complexity,
                           fig1.double.betti_numbers())
    assert rep.rho1_ratio == Fraction(1)
    assert rep.all_pass


def test_check_all_disk_vacuous(disk):
    rep = bounds.check_all(disk.scene, disk.graph, disk.complexity,
                           disk.double.betti_numbers())
    assert rep.simplicial_volume_DX == 0
    assert rep.rho1_ratio is None
    assert rep.all_pass


def test_all_fixture_checks_pass(any_generic):
    rep = bounds.check_all(any_generic.scene, any_generic.graph,
                           any_generic.complexity, any_generic.double.betti_numbers())
    assert rep.all_pass, rep.to_dict()


def test_corpus_best_ratio_at_most_half():
    from conftest import GENERIC_FIXTURES, analyzed
    ratios = []
    for name in GENERIC_FIXTURES:
        a = analyzed(name)
        rep = bounds.check_all(a.scene, a.graph, a.complexity, a.double.betti_numbers())
        if rep.rho1_ratio is not None:
            ratios.append(rep.rho1_ratio)
    assert min(ratios) <= Fraction(1, 2)

def test_vertexless_annulus_bounds_pass():
    from conftest import analyzed
    a = analyzed("annulus0.json")
    rep = bounds.check_all(a.scene, a.graph, a.complexity, a.double.betti_numbers())
    assert rep.genus_DX == 1
    assert rep.all_pass, rep.to_dict()
