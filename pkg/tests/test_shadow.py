import pytest

from divshadow.doubling import double
from divshadow.fixtures import chebyshev, circle, divide_from_curves
from divshadow.shadow import (build_polyhedron, calibrate, corner_type, corners,
                              format_half, formula_gleam, gleam_recipe, internal_regions)

FIXTURES = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)]


@pytest.mark.parametrize("p,q", FIXTURES)
def test_recipe_matches_formula_region_by_region(p, q):
    od = double(chebyshev(p, q))
    recipe = gleam_recipe(od)
    assert recipe == {r: formula_gleam(od, r) for r in internal_regions(od)}


@pytest.mark.parametrize("p,q", FIXTURES)
def test_both_conventions_pass_because_ii_and_oo_balance(p, q):
    od = double(chebyshev(p, q))
    assert calibrate(od) == ["A", "B"]
    for r in internal_regions(od):
        types = [corner_type(od, x) for x in corners(od, r)]
        assert types.count("ii") == types.count("oo")


@pytest.mark.parametrize("p,q", FIXTURES)
def test_gleam_integrality(p, q):
    sp = build_polyhedron(double(chebyshev(p, q)))
    for r in sp.internal:
        # gl - gl2/2 is an integer: doubled gleam and Z2 gleam share parity
        assert (sp.gleam[r] - sp.z2(r)) % 2 == 0


def test_trefoil_gleams():
    sp = build_polyhedron(double(chebyshev(2, 3)))
    values = sorted(format_half(g) for g in sp.gleam.values())
    assert values == ["-1", "-1", "0", "0", "1/2", "1/2"]


def test_annulus_region_gleam():
    od = double(divide_from_curves([circle()]))
    sp = build_polyhedron(od)
    prov = od.provenance()
    assert {prov[r]: g for r, g in sp.gleam.items()} == {"annulus": 0, "region": -2}
    assert gleam_recipe(od) == sp.gleam


def test_format_half():
    assert format_half(3) == "3/2"
    assert format_half(-4) == "-2"
    assert format_half(-1) == "-1/2"
