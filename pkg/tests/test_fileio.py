import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIXTURES

from divshadow.divide import trace_regions
from divshadow.fileio import DanglingSlot, DivideSyntaxError, DuplicateId, emit, load, parse
from divshadow.fixtures import random_disk_divide


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.div")), ids=lambda p: p.name)
def test_round_trip(path):
    d = load(path)
    assert parse(emit(d)) == d
    assert emit(parse(emit(d))) == emit(d)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_round_trip_random(seed):
    d = random_disk_divide(random.Random(seed), 2, 3)
    assert parse(emit(d)) == d


def test_trefoil_file(trefoil):
    assert len(trefoil.vertices) == 3 and len(trefoil.edges) == 3


def test_empty_surface():
    d = parse("surface planar n=1\n")
    assert not d.vertices and len(trace_regions(d)) == 1


def test_degree_three_crossing_dangles():
    text = """surface planar n=1
vertex c crossing
vertex a endpoint b=0@0
vertex b endpoint b=0@1
vertex f free
edge e0 a.0 c.0
edge e1 c.1 c.2
edge e2 b.0 f.0
"""
    with pytest.raises(DanglingSlot, match="c.3"):
        parse(text)


def test_syntax_error_has_line_number():
    with pytest.raises(DivideSyntaxError) as err:
        parse("surface planar n=1\n# fine\nvertex x wobbly\n")
    assert err.value.line == 3


def test_duplicate_id():
    with pytest.raises(DuplicateId):
        parse("surface planar n=1\nvertex a free\nvertex a free\n")


def test_comments_and_strands_ignored():
    d = parse("# header\nsurface planar n=1  # disk\nstrand s0 e0\nloop o\n")
    assert d.loops == ("o",)


def test_rational_positions():
    d = parse("surface planar n=1\nvertex a endpoint b=0@1/3\nvertex b endpoint b=0@2/3\n"
              "edge e a.0 b.0\n")
    assert "b=0@1/3" in emit(d)
