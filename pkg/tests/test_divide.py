import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divshadow.divide import (DivideError, check_admissibility, classify_free,
                              is_connected, trace_regions)
from divshadow.fileio import load
from divshadow.fixtures import (chebyshev, circle, divide_from_curves, free_divide_from_word,
                                free_divides, random_disk_divide)


def euler(d):
    c = d.completed
    return len(c.map.degree) - len(c.map.twin) // 2 + sum(r.chi for r in c.regions)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3), st.integers(0, 3))
def test_random_disk_admissible_iff_connected(seed, strands, steps):
    d = random_disk_divide(random.Random(seed), strands, steps)
    assert check_admissibility(d).admissible == is_connected(d)
    assert euler(d) == 2 - d.n_boundary


def test_trefoil_regions(trefoil):
    regions = trace_regions(trefoil)
    assert [r.kind for r in regions].count("inside") == 1
    assert check_admissibility(trefoil).admissible


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (3, 5)])
def test_chebyshev_counts(p, q):
    d = chebyshev(p, q)
    delta = (p - 1) * (q - 1) // 2
    inside = sum(r.kind == "inside" for r in trace_regions(d))
    assert len(d.crossings()) == delta
    assert inside == delta


def test_two_circles_fail_connectivity(fixture_path):
    rep = check_admissibility(load(fixture_path("two-circles.div")))
    assert "connectivity" in rep.violations


def test_bare_circle_is_admissible():
    d = divide_from_curves([circle()])
    assert check_admissibility(d).admissible
    assert euler(d) == 1


def test_free_example_is_case1():
    found = free_divides(2)
    assert len(found) == 2
    for _, _, d in found:
        fc = classify_free(d)
        assert fc.case == "case1"
        assert fc.e is not None


def test_free_neither(fixture_path):
    fc = classify_free(load(fixture_path("free-neither.div")))
    assert fc.case == "neither"


def test_free_end_in_outside_region_rejected():
    with pytest.raises(DivideError):
        classify_free(free_divide_from_word((0, 0), {0: 1}))
