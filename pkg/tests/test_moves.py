import pytest

from divshadow.divide import classify_free
from divshadow.doubling import double, double_free
from divshadow.fixtures import chebyshev, free_divides
from divshadow.moves import NoValidDeformation, finger, free_end_bigon, uncross
from divshadow.pipeline import deformations, run_free


def _first_finger(od):
    for f in od.map.faces():
        for a in f:
            for b in f:
                if a != b and b != od.map.twin[a]:
                    return a, b
    raise AssertionError


def test_finger_then_uncross_restores_counts():
    od = double(chebyshev(2, 3))
    a, b = _first_finger(od)
    fo = finger(od, a, b)
    assert len(fo.crossings()) == len(od.crossings()) + 2
    faces = fo.map.faces()
    bigon = next(i for i, f in enumerate(faces)
                 if len(f) == 2 and {d[0][0] for d in f} == {"finger"})
    back = uncross(fo, bigon)
    assert len(back.crossings()) == len(od.crossings())
    assert len(back.map.faces()) == len(od.map.faces())
    assert len(back.strands()) == len(od.strands())


def test_uncross_needs_a_bigon():
    od = double(chebyshev(2, 3))
    tri = next(i for i, f in enumerate(od.map.faces()) if len(f) == 3)
    with pytest.raises(ValueError):
        uncross(od, tri)


def test_free_end_cap_found():
    _, _, d = free_divides(2)[0]
    od = double_free(d, classify_free(d))
    assert len(od.map.faces()[free_end_bigon(od)]) == 2


def test_catalog_order():
    _, _, d = free_divides(2)[0]
    od = double_free(d, classify_free(d))
    names = [name for name, _ in deformations(od)]
    assert names[:2] == ["as doubled", "cap retracted"]
    assert len(names) == 182


def test_free_example_verifies_as_doubled():
    _, _, d = free_divides(2)[0]
    res = run_free(d)
    assert res.od.note == ""
    assert res.lf.certificate["iv"] is True


def test_strict_refusal_when_nothing_verifies(monkeypatch):
    import divshadow.pipeline as pl

    _, _, d = free_divides(2)[0]
    monkeypatch.setattr(pl, "deformations", lambda od: iter(()))
    with pytest.raises(NoValidDeformation):
        pl.run_free(d)
    assert pl.run_free(d, strict=False).lf.certificate["iv"] is True
