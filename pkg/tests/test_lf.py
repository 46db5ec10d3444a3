from dataclasses import replace

import pytest
from conftest import torus_result

from divshadow.doubling import double
from divshadow.fixtures import chebyshev, circle, divide_from_curves
from divshadow.lf import NoLFStructure, collapse, find_lf, internal_after_collapse
from divshadow.pipeline import run
from divshadow.shadow import build_polyhedron


def test_trefoil_structure():
    lf = torus_result(2, 3).lf
    assert lf.classes == ["max", "saddle"]
    assert all(lf.certificate[k] for k in ("i", "ii", "iii", "iv", "v"))
    report = lf.report()
    assert report[0].startswith("D1 ") and "class=max" in report[0]
    assert report[-1] == "condition (v) pass"


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (3, 5)])
def test_collapse_is_idempotent_and_removes_exactly_the_outside(p, q):
    sp = build_polyhedron(double(chebyshev(p, q)))
    xp = collapse(sp)
    assert collapse(xp) == xp
    od = sp.od
    assert xp.removed == {r for r in range(len(od.regions())) if od.is_outside(r)}


@pytest.mark.parametrize("p,q", [(2, 5), (3, 4), (3, 5)])
def test_classes_are_sorted_and_count_matches(p, q):
    lf = torus_result(p, q).lf
    rank = {"max": 0, "saddle": 1, "min": 2}
    assert [rank[c] for c in lf.classes] == sorted(rank[c] for c in lf.classes)
    d = chebyshev(p, q)
    inside = len(d.crossings())  # equal for these curves
    assert lf.n == len(d.crossings()) + inside


@pytest.mark.parametrize("delta", [1, -1])
def test_corrupted_gleam_names_region(delta):
    xp = collapse(build_polyhedron(double(chebyshev(3, 5))))
    prov = xp.od.provenance()
    tri = min(r for r in internal_after_collapse(xp) if prov[r] == "triangle")
    bad = dict(xp.gleam)
    bad[tri] += delta  # half a unit, gleams are doubled
    with pytest.raises(NoLFStructure) as err:
        find_lf(replace(xp, gleam=bad))
    assert err.value.condition == "iv"
    assert f"region {tri}" in str(err.value)


def test_bare_circle_annulus():
    res = run(divide_from_curves([circle()]))
    rs = res.lf.surface
    assert (rs.chi, rs.n_boundary, rs.b1) == (0, 2, 1)
    assert res.monodromy.charpoly == (-1, 1)


def test_regions_touching_collapsed_ones_are_not_checked():
    # trefoil: every triangle and end bigon borders an outside region
    xp = collapse(build_polyhedron(double(chebyshev(2, 3))))
    lf = find_lf(xp)
    assert internal_after_collapse(xp) == set(lf.disks)
    assert lf.certificate["iv_report"].computed == {}


def test_bridge_edge():
    # one chord crossing two parallel chords: the middle edge has the
    # outside on both sides, so its triangles become boundary regions
    import math

    from divshadow.fixtures import Curve

    h = math.sqrt(1 - 0.09)
    d = divide_from_curves([Curve(((-1.0, 0.0), (1.0, 0.0))),
                            Curve(((-0.3, -h), (-0.3, h))), Curve(((0.3, -h), (0.3, h)))])
    res = run(d)
    assert res.lf.classes == ["saddle", "saddle"]
    assert res.monodromy.form == ((0, 0), (0, 0))
    assert res.lf.surface.n_boundary == 3
