"""Doubling a divide into an oriented divide.

Every edge of the divide is replaced by two parallel copies, each crossing
of the divide by a small square of four crossings, each endpoint by a half
circle, and (unless suppressed) each edge away from the endpoints gets one
crossing between its two copies.

Faces of the doubled curve are labelled through *tags* attached to darts:
the tag of a dart describes the face on its left.

* ``("strip", edge, half)``: the thin region between the two copies of an
  edge.  ``half`` is 0 or 1 on either side of the added crossing, ``None``
  when the edge got no crossing.
* ``("region", r)``: the image of region ``r`` of the divide.
* ``("quad", c)``: the small square at crossing ``c`` of the divide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .divide import CROSSING, Divide, DivideError, FreeCase, check_admissibility
from .planar import PlanarMap

WHITE, BLACK = "white", "black"


class NotTwoColorable(DivideError):
    pass


class NotAdmissible(DivideError):
    pass


class NonOrientable(DivideError):
    pass


# -- checkerboard ----------------------------------------------------------


def region_coloring(d: Divide, strict: bool = True) -> dict:
    """Two-colour all regions so that regions across an edge differ.

    Edges with the same region on both sides impose nothing.  The inside
    region with the smallest id is white (the smallest region if there are
    no inside regions).  With ``strict`` off, conflicts (which a free
    endpoint can cause) are skipped and the greedy colouring is kept.
    """
    comp = d.completed
    m = d.map
    adj: dict = {r.id: set() for r in comp.regions}
    for x in m.darts():
        a, b = comp.region_of[x], comp.region_of[m.twin[x]]
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    inside = [r.id for r in comp.regions if r.kind == "inside"]
    order = inside + [r.id for r in comp.regions if r.kind != "inside"]
    color: dict = {}
    for start in order:
        if start in color:
            continue
        color[start] = WHITE
        stack = [start]
        while stack:
            r = stack.pop()
            for s in sorted(adj[r]):
                want = BLACK if color[r] == WHITE else WHITE
                if s not in color:
                    color[s] = want
                    stack.append(s)
                elif color[s] != want and strict:
                    raise NotTwoColorable(f"regions {r} and {s} cannot be coloured")
    return color


def checkerboard(d: Divide) -> dict:
    """Colouring of the inside regions only."""
    kinds = {r.id: r.kind for r in d.completed.regions}
    return {r: c for r, c in region_coloring(d).items() if kinds[r] == "inside"}


# -- the oriented divide ---------------------------------------------------


@dataclass(frozen=True)
class OrientedDivide:
    map: PlanarMap
    forward: frozenset  # darts pointing along the strand orientation
    tags: dict  # dart -> frozenset of tags of the face on its left
    outside: frozenset  # face indices meeting the surface boundary
    source: Optional[Divide] = None
    coloring: Optional[dict] = None
    suppressed: tuple = ()
    note: str = ""
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def crossings(self) -> list:
        return [v for v, k in self.map.degree.items() if k == 4]

    def face_tags(self) -> list:
        if "ftags" not in self._cache:
            out = []
            for f in self.map.faces():
                t = set()
                for x in f:
                    t |= self.tags.get(x, frozenset())
                out.append(frozenset(t))
            self._cache["ftags"] = out
        return self._cache["ftags"]

    def regions(self) -> list:
        """Faces grouped into regions.

        Faces of different components of the doubled curve that carry the
        same tags are one region (two parallel circles bound one annulus).
        """
        if "regions" in self._cache:
            return self._cache["regions"]
        m = self.map
        comp_of = {}
        for i, c in enumerate(m.components()):
            for v in c:
                comp_of[v] = i
        faces = m.faces()
        parent = list(range(len(faces)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        key: dict = {}
        for i, t in enumerate(self.face_tags()):
            k = "outside" if i in self.outside else t
            if not k:
                continue
            for j in key.get(k, []):
                if comp_of[faces[j][0][0]] != comp_of[faces[i][0][0]]:
                    parent[find(i)] = find(j)
            key.setdefault(k, []).append(i)
        groups: dict = {}
        for i in range(len(faces)):
            groups.setdefault(find(i), []).append(i)
        out = [tuple(g) for _, g in sorted(groups.items())]
        self._cache["regions"] = out
        return out

    def region_walks(self, r: int) -> list:
        faces = self.map.faces()
        return [faces[i] for i in self.regions()[r]]

    def region_chi(self, r: int) -> int:
        return 2 - len(self.regions()[r])

    def region_tags(self, r: int) -> frozenset:
        ft = self.face_tags()
        return frozenset().union(*(ft[i] for i in self.regions()[r]))

    def is_outside(self, r: int) -> bool:
        return any(i in self.outside for i in self.regions()[r])

    def region_of_face(self) -> dict:
        return {i: r for r, g in enumerate(self.regions()) for i in g}

    def provenance(self) -> list:
        """One provenance label per region of the doubled curve."""
        if "prov" in self._cache:
            return self._cache["prov"]
        out = []
        src = self.source
        for r in range(len(self.regions())):
            tags = self.region_tags(r)
            if self.is_outside(r):
                out.append("outside")
                continue
            kinds = {t[0] for t in tags}
            if kinds == {"strip"} and len(tags) == 1:
                (_, eid, half), = tags
                if half is not None:
                    out.append("triangle")
                elif src is not None and src.is_endpoint_edge(eid):
                    out.append("bigon")
                elif src is not None and eid in src.loops:
                    out.append("annulus")
                else:
                    out.append("strip")
            elif kinds == {"region"}:
                out.append("region")
            elif kinds == {"quad"}:
                out.append("quad")
            else:
                out.append("other")
        self._cache["prov"] = out
        return out

    def region_source(self, r: int):
        """The divide region or crossing a region descends from, if unique."""
        tags = [t for t in self.region_tags(r) if t[0] in ("region", "quad")]
        return tags[0] if len(tags) == 1 else None

    def strands(self) -> list:
        """Oriented circles as lists of forward darts."""
        m = self.map
        used, out = set(), []
        for d in m.darts():
            if d in used or d not in self.forward:
                continue
            path, x = [], d
            while x not in used:
                used.add(x)
                path.append(x)
                w, s = m.twin[x]
                k = m.degree[w]
                x = (w, (s + k // 2) % k)
            out.append(path)
        return out


def double(d: Divide, suppress=(), check=True, swap_colors=False) -> OrientedDivide:
    """``swap_colors`` exchanges black and white before orienting."""
    if check:
        rep = check_admissibility(d)
        if not rep.admissible:
            raise NotAdmissible(", ".join(rep.violations))
    return _build(d, frozenset(suppress), swap_colors)


def double_free(d: Divide, fc: FreeCase) -> OrientedDivide:
    """Doubling with the edge selections of a classified free divide.

    The free endpoint deformation is applied on top of this by
    :func:`divshadow.pipeline.run_free`.
    """
    if fc.case == "case1":
        sup = (fc.e,)
    elif fc.case == "case2":
        sup = (fc.e, fc.e2)
    else:
        raise DivideError(f"free divide is {fc.case}; no doubling rule applies")
    return _build(d, frozenset(sup))


def _build(d: Divide, suppress: frozenset, swap_colors: bool = False) -> OrientedDivide:
    comp = d.completed
    m = d.map
    edge_of = d.edge_of
    kinds = d.vertex
    eids = [e for e, _, _ in d.edges] + list(d.loops)
    first_dart = {e: a for e, a, _ in d.edges}
    for lp in d.loops:
        first_dart[lp] = (lp, 0)
    endpoint_edge = {e: d.is_endpoint_edge(e) for e, _, _ in d.edges}
    # a crossingless circle gets no crossing: its copies must stay two circles
    mid = {e for e, _, _ in d.edges if e not in suppress and not endpoint_edge[e]}

    degree: dict = {}
    for c in d.crossings():
        for k in range(4):
            degree[("g", c, k)] = 4
    for e in eids:
        if e in mid:
            degree[("m", e)] = 4

    def region(x):
        return ("region", comp.region_of[x])

    def strip(e, half):
        return ("strip", e, half)

    def half_at(x):
        e = edge_of[x]
        if e not in mid:
            return None
        return 0 if x == first_dart[e] else 1

    def port(x, side):
        v, k = x
        if v in kinds and kinds[v].kind == CROSSING:
            return (("g", v, k), 0) if side == "L" else (("g", v, (k - 1) % 4), 1)
        if v in kinds:
            return ("cap", v)
        return ("pass", v, side)

    # segments: (t1, t2, left tag going t1->t2, left tag going t2->t1)
    segs = []
    for c in d.crossings():
        for k in range(4):
            nxt = (c, (k + 1) % 4)
            segs.append(((("g", c, k), 2), (("g", c, (k + 1) % 4), 3),
                         ("quad", c), strip(edge_of[nxt], half_at(nxt))))
    for e in eids:
        a = first_dart[e]
        b = m.twin[a]
        if e in d.loops:
            # a loop is cut open at an imaginary point
            pa = {"L": ("pass", e, "N"), "R": ("pass", e, "S")}
            pb = {"R": ("pass", e, "N"), "L": ("pass", e, "S")}
        else:
            pa = {s: port(a, s) for s in "LR"}
            pb = {s: port(b, s) for s in "LR"}
        la, ra = region(a), region(b)
        if e in mid:
            mv = ("m", e)
            segs.append((pa["L"], (mv, 1), la, strip(e, 0)))
            segs.append((pa["R"], (mv, 2), strip(e, 0), ra))
            segs.append(((mv, 0), pb["R"], la, strip(e, 1)))
            segs.append(((mv, 3), pb["L"], strip(e, 1), ra))
        else:
            segs.append((pa["L"], pb["R"], la, strip(e, None)))
            segs.append((pa["R"], pb["L"], strip(e, None), ra))

    twin, tags = _link(segs, degree)
    pm = PlanarMap(degree, twin)
    pm.euler_check()
    od = OrientedDivide(pm, frozenset(), tags, frozenset(), d, None, tuple(sorted(suppress)))
    outside = frozenset(i for i, t in enumerate(od.face_tags())
                        if any(x[0] == "region" and comp.regions[x[1]].kind == "outside"
                               for x in t))
    coloring = region_coloring(d, strict=not d.free_endpoints())
    if swap_colors:
        coloring = {r: BLACK if c == WHITE else WHITE for r, c in coloring.items()}
    forward = _orient(pm, od.face_tags(), outside, d, coloring, first_dart, mid)
    return OrientedDivide(pm, forward, tags, outside, d,
                          {r: c for r, c in coloring.items()
                           if comp.regions[r].kind == "inside"},
                          tuple(sorted(suppress)))


def _link(segs, degree):
    """Join segments through virtual terminals (caps and loop cuts)."""
    ends: dict = {}
    for i, (t1, t2, _, _) in enumerate(segs):
        ends.setdefault(t1, []).append((i, 0))
        ends.setdefault(t2, []).append((i, 1))
    for t, occ in ends.items():
        if len(occ) != (2 if t[0] in ("cap", "pass") else 1):
            raise DivideError(f"doubling produced a dangling terminal {t}")
    twin, tags = {}, {}
    used = set()

    def real(t):
        return t[0] not in ("cap", "pass")

    def follow(i, side):
        """Walk from the end ``side`` of segment i; return (terminal, fwd tags, back tags)."""
        fwd, back = set(), set()
        while True:
            t1, t2, g12, g21 = segs[i]
            used.add(i)
            if side == 0:
                far, gf, gb = t2, g12, g21
            else:
                far, gf, gb = t1, g21, g12
            fwd.add(gf)
            back.add(gb)
            if real(far):
                return far, fwd, back
            (j, js), = [o for o in ends[far] if o[0] != i or o[1] != 1 - side]
            i, side = j, js

    for i, (t1, t2, _, _) in enumerate(segs):
        if i in used:
            continue
        if real(t1):
            far, fwd, back = follow(i, 0)
            twin[t1], twin[far] = far, t1
            tags[t1], tags[far] = frozenset(fwd), frozenset(back)
        elif real(t2):
            far, fwd, back = follow(i, 1)
            twin[t2], twin[far] = far, t2
            tags[t2], tags[far] = frozenset(fwd), frozenset(back)
    # closed chains without a real vertex get a marker vertex
    k = 0
    for i, seg in enumerate(segs):
        if i in used:
            continue
        z = ("z", k)
        k += 1
        degree[z] = 2
        # start on the virtual terminal t1 and walk once around
        start = seg[0]
        segs.append(((z, 0), start, seg[3], seg[2]))
        ends[start] = [o for o in ends[start] if o != (i, 0)] + [(len(segs) - 1, 1)]
        segs[i] = ((z, 1), seg[1], seg[2], seg[3])
        ends[(z, 1)] = [(i, 0)]
        far, fwd, back = follow(i, 0)
        assert far == (z, 0)
        twin[(z, 1)], twin[(z, 0)] = (z, 0), (z, 1)
        tags[(z, 1)], tags[(z, 0)] = frozenset(fwd), frozenset(back)
    return twin, tags


def _orient(pm, ftags, outside, d, coloring, first_dart, mid) -> frozenset:
    """Orient the doubled strands so that every strip is coherently bounded.

    A strip with sign +1 has the strand orientation along its boundary walk.
    Signs flip across every crossing; the anchor makes the first triangle of
    an edge bounding the smallest white region positive, with the edge
    oriented as the boundary of that white region.
    """
    faces = pm.faces()
    face_of = pm.face_of()
    is_strip = [bool(t) and all(x[0] == "strip" for x in t) for t in ftags]

    def strip_side(x):
        """(face, sign factor) of the strip bordering the edge of dart x."""
        f = face_of[x]
        if is_strip[f]:
            return f, 1
        g = face_of[pm.twin[x]]
        if is_strip[g]:
            return g, -1
        raise NonOrientable(f"edge at {x} borders no strip")

    # constraint graph between strips: (f, g, rel) meaning s_f * rel = s_g
    links: dict = {}
    for v, k in pm.degree.items():
        pairs = [((v, s), (v, s + k // 2)) for s in range(k // 2)]
        for x, y in pairs:
            fx, ex = strip_side(x)
            fy, ey = strip_side(y)
            # fwd(x) = ex * s_fx must equal -fwd(y) = -ey * s_fy
            rel = -ex * ey
            links.setdefault(fx, []).append((fy, rel))
            links.setdefault(fy, []).append((fx, rel))
    same: dict = {}
    for i, t in enumerate(ftags):
        if is_strip[i]:
            same.setdefault(t, []).append(i)
    for group in same.values():
        for f in group[1:]:
            links.setdefault(group[0], []).append((f, 1))
            links.setdefault(f, []).append((group[0], 1))
    anchor = _anchor(pm, ftags, d, coloring, first_dart, mid, is_strip)
    sign: dict = {}
    order = ([anchor] if anchor is not None else []) + [i for i in range(len(faces)) if is_strip[i]]
    for start in order:
        if start in sign:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            f = stack.pop()
            for g, rel in links.get(f, ()):
                want = sign[f] * rel
                if g not in sign:
                    sign[g] = want
                    stack.append(g)
                elif sign[g] != want:
                    raise NonOrientable(f"strips {f} and {g} cannot be oriented consistently")
    fwd = set()
    for x in pm.darts():
        f, e = strip_side(x)
        if e * sign[f] == 1:
            fwd.add(x)
    return frozenset(fwd)


def _anchor(pm, ftags, d, coloring, first_dart, mid, is_strip):
    if d is None:
        return None
    comp = d.completed
    whites = sorted(r for r, c in coloring.items()
                    if c == WHITE and comp.regions[r].kind == "inside")
    for r in whites:
        for walk in comp.regions[r].walks:
            for x in walk:
                e = d.edge_of.get(x)
                if e is None or e not in mid:
                    continue
                half = 0 if x == first_dart[e] else 1
                want = ("strip", e, half)
                for i, t in enumerate(ftags):
                    if is_strip[i] and want in t:
                        return i
    return None
