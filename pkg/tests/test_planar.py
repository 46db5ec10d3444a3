import pytest

from divshadow.planar import MapError, NonPlanar, PlanarMap


def theta():
    # two degree-3 vertices joined by three edges
    twin = {}
    for k in range(3):
        twin[("a", k)], twin[("b", 2 - k)] = ("b", 2 - k), ("a", k)
    return PlanarMap({"a": 3, "b": 3}, twin)


def test_theta_has_three_faces():
    pm = theta()
    assert len(pm.faces()) == 3
    pm.euler_check()


def test_face_walk_covers_every_dart_once():
    pm = theta()
    darts = [d for f in pm.faces() for d in f]
    assert sorted(darts) == sorted(pm.darts())


def test_unpaired_slot():
    with pytest.raises(MapError):
        PlanarMap({"a": 2}, {("a", 0): ("a", 0)})


def test_toroidal_rotation_is_rejected():
    # K4 with each vertex listing its neighbours in increasing order: 2 faces
    twin = {}
    order = {v: [w for w in range(4) if w != v] for v in range(4)}
    for u, w in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]:
        a, b = (u, order[u].index(w)), (w, order[w].index(u))
        twin[a], twin[b] = b, a
    pm = PlanarMap({v: 3 for v in range(4)}, twin)
    assert len(pm.faces()) == 2
    with pytest.raises(NonPlanar):
        pm.euler_check()
