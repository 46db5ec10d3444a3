import pytest

from divshadow.fibration import h1_basis
from divshadow.surface import NonOrientableSurface, NotASurface, RibbonSurface


def annulus():
    """A square with its left and right sides glued straight."""
    edges = {"a": ("p", "p"), "c": ("s", "s"), "x": ("p", "s")}
    cells = [[("a", 1), ("x", 1), ("c", -1), ("x", -1)]]
    return RibbonSurface(edges, cells, ["ann"])


def test_annulus():
    rs = annulus()
    assert rs.chi == 0
    assert rs.n_boundary == 2
    assert rs.b1 == 1
    assert h1_basis(rs).rank == 1


def square():
    edges = {"a": ("p", "q"), "b": ("q", "r"), "c": ("s", "r"), "d": ("p", "s")}
    return RibbonSurface(edges, [[("a", 1), ("b", 1), ("c", -1), ("d", -1)]], ["sq"])


def test_disk():
    rs = square()
    assert (rs.chi, rs.n_boundary, rs.genus, rs.b1) == (1, 1, 0, 0)


def test_edge_on_three_cells():
    edges = {"a": ("p", "q"), "b": ("q", "p")}
    cells = [[("a", 1), ("b", 1)], [("a", 1), ("b", 1)], [("a", -1), ("b", -1)]]
    with pytest.raises(NotASurface):
        RibbonSurface(edges, cells, ["1", "2", "3"])


def test_moebius_band_is_rejected():
    # square p q r s with side q->r glued to side s->p: q ~ s and r ~ p
    edges = {"a": ("p", "q"), "x": ("q", "p"), "c": ("q", "p")}
    cells = [[("a", 1), ("x", 1), ("c", -1), ("x", 1)]]
    with pytest.raises(NonOrientableSurface):
        RibbonSurface(edges, cells, ["m"])
