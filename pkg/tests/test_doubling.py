import pytest

from divshadow.divide import classify_free
from divshadow.doubling import NonOrientable, NotAdmissible, double, double_free
from divshadow.fileio import load
from divshadow.fixtures import chebyshev, circle, divide_from_curves, free_divides
from divshadow.pipeline import from_oriented


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (3, 5)])
def test_knot_divides_double_to_one_strand(p, q):
    od = double(chebyshev(p, q))
    od.map.euler_check()
    assert len(od.strands()) == 1  # coprime (p, q): a knot
    # every crossing of the doubled curve is a real 4-valent crossing
    assert all(od.map.degree[v] == 4 for v in od.crossings())


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4)])
def test_crossing_count(p, q):
    d = chebyshev(p, q)
    od = double(d)
    inner = sum(1 for e, _, _ in d.edges if not d.is_endpoint_edge(e))
    # four per double point plus one per edge away from the endpoints
    assert len(od.crossings()) == 4 * len(d.crossings()) + inner


def test_bare_circle_gives_two_parallel_circles():
    od = double(divide_from_curves([circle()]))
    assert len(od.strands()) == 2
    assert not od.crossings()


def test_not_admissible_refused(fixture_path):
    with pytest.raises(NotAdmissible):
        double(load(fixture_path("two-circles.div")))


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (3, 5)])
def test_swapped_colouring_same_monodromy(p, q):
    d = chebyshev(p, q)
    a = from_oriented(double(d), d)
    b = from_oriented(double(d, swap_colors=True), d)
    assert a.monodromy.charpoly == b.monodromy.charpoly
    assert a.lf.classes.count("max") == b.lf.classes.count("min")
    assert a.lf.classes.count("min") == b.lf.classes.count("max")


def test_free_doubling_needs_the_suppressed_edge():
    _, _, d = free_divides(2)[0]
    fc = classify_free(d)
    od = double_free(d, fc)
    assert fc.e in od.suppressed
    od.map.euler_check()
    with pytest.raises(NonOrientable):
        double(d, check=False)
