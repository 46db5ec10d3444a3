"""Local moves on oriented divides, used to deform the doubled curve of a
free divide near its free endpoint."""

from __future__ import annotations

from dataclasses import replace

from .doubling import OrientedDivide
from .planar import PlanarMap


class NoValidDeformation(ValueError):
    pass


def finger(od: OrientedDivide, a, b, label="finger") -> OrientedDivide:
    """Push the edge of dart ``a`` across the edge of dart ``b``.

    Both darts must have the same face F on their left.  The finger runs
    through F, crosses the edge of ``b`` twice and leaves a bigon beyond it,
    so F splits in two.
    """
    pm = od.map
    face_of = pm.face_of()
    if face_of[a] != face_of[b]:
        raise ValueError("darts do not bound a common face")
    ea = {a, pm.twin[a]}
    if b in ea:
        raise ValueError("cannot push an edge across itself")
    a2, b2 = pm.twin[a], pm.twin[b]
    n = sum(1 for v in pm.degree if isinstance(v, tuple) and v[0] == label)
    x1, x2 = (label, n, 1), (label, n, 2)
    degree = dict(pm.degree)
    degree[x1] = degree[x2] = 4
    twin = {d: t for d, t in pm.twin.items() if d not in (a, a2, b, b2)}

    def pair(p, q):
        twin[p], twin[q] = q, p

    # slots at both new crossings: 0 along b towards its tail side, 1 tip,
    # 2 along b towards its head side, 3 back down the finger
    pair(a, (x1, 3))
    pair((x2, 3), a2)
    pair((x1, 1), (x2, 1))
    pair(b, (x2, 0))
    pair((x2, 2), (x1, 0))
    pair((x1, 2), b2)
    new = PlanarMap(degree, twin)
    new.euler_check()

    fwd = set(od.forward)
    fwd -= {a, a2, b, b2}
    if a in od.forward:
        fwd |= {a, (x1, 1), (x2, 3)}
    else:
        fwd |= {a2, (x2, 1), (x1, 3)}
    if b in od.forward:
        fwd |= {b, (x2, 2), (x1, 2)}
    else:
        fwd |= {b2, (x1, 0), (x2, 0)}

    tags = {d: t for d, t in od.tags.items() if d in twin}
    faces = new.faces()
    ftags = []
    for i, f in enumerate(faces):
        t = frozenset().union(*(od.tags.get(d, frozenset()) for d in f if d in pm.twin))
        ftags.append(t or frozenset({(label, n)}))
    for i, f in enumerate(faces):
        for d in f:
            if d not in tags or d in (a, b, a2, b2):
                tags[d] = ftags[i]
    # a face is outside when one of its old darts was
    old_out = {d for i in od.outside for d in pm.faces()[i]}
    outside = frozenset(i for i, f in enumerate(faces)
                        if any(d in old_out and d not in (x1, x2) for d in f))
    return OrientedDivide(new, frozenset(fwd), tags, outside, od.source, od.coloring,
                          od.suppressed, (od.note + f" {label}").strip())


def uncross(od: OrientedDivide, face: int, label="uncross") -> OrientedDivide:
    """Remove a bigon face and its two corners (an inverse finger move).

    The two arcs of the bigon are pulled apart; the strands through both
    corners are rejoined directly and the faces around them merge.
    """
    pm = od.map
    walk = pm.faces()[face]
    if len(walk) != 2 or any(pm.degree[d[0]] != 4 for d in walk):
        raise ValueError("face is not a bigon between two crossings")
    d1, d2 = walk
    x1, x2 = d1[0], d2[0]
    if x1 == x2:
        raise ValueError("bigon corners coincide")

    def opp(d):
        v, k = d
        return (v, (k + 2) % 4)

    # strand of d1: enters at x1 through opp(d1), leaves x2 through opp(twin(d1))
    ends = [(pm.twin[opp(d1)], pm.twin[opp(pm.twin[d1])]),
            (pm.twin[opp(d2)], pm.twin[opp(pm.twin[d2])])]
    gone = {x1, x2}
    degree = {v: k for v, k in pm.degree.items() if v not in gone}
    twin = {d: t for d, t in pm.twin.items() if d[0] not in gone and t[0] not in gone}
    for p, q in ends:
        if p[0] in gone or q[0] in gone:
            raise ValueError("bigon strands close up through its own corners")
        twin[p], twin[q] = q, p
    new = PlanarMap(degree, twin)
    new.euler_check()
    fwd = frozenset(d for d in od.forward if d[0] not in gone)
    tags = {d: t for d, t in od.tags.items() if d[0] not in gone}
    old_out = {d for i in od.outside for d in pm.faces()[i]}
    outside = frozenset(i for i, f in enumerate(new.faces()) if any(d in old_out for d in f))
    return OrientedDivide(new, fwd, tags, outside, od.source, od.coloring,
                          od.suppressed, (od.note + f" {label}").strip())


def free_end_bigon(od: OrientedDivide) -> int:
    """Face of the half-circle closing the free endpoint."""
    d = od.source
    frees = set(d.free_endpoints())
    for i, t in enumerate(od.face_tags()):
        for tag in t:
            if tag[0] == "strip" and tag[2] is None:
                for e, a, b in d.edges:
                    if e == tag[1] and (a[0] in frees or b[0] in frees):
                        return i
    raise NoValidDeformation("no free endpoint half-circle")


def finger_moves(od: OrientedDivide, faces=None, outside=False):
    """Every single finger move inside the given faces (all faces by default)."""
    pm = od.map
    out = []
    for i, f in enumerate(pm.faces()):
        if faces is not None and i not in faces:
            continue
        if i in od.outside and not outside:
            continue
        for a in f:
            for b in f:
                if a == b or b == pm.twin[a]:
                    continue
                try:
                    out.append(((a, b), finger(od, a, b)))
                except Exception:
                    continue
    return out
