"""Divides and free divides in planar surfaces as combinatorial maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .planar import MapError, NonPlanar, PlanarMap

CROSSING, ENDPOINT, FREE = "crossing", "endpoint", "free"
DEGREE = {CROSSING: 4, ENDPOINT: 1, FREE: 1}


class DivideError(ValueError):
    pass


class NotFreeDivide(DivideError):
    pass


@dataclass(frozen=True)
class DVertex:
    id: str
    kind: str
    circle: Optional[int] = None
    pos: Optional[Fraction] = None


@dataclass(frozen=True)
class Divide:
    """A divide in the planar surface with ``n_boundary`` boundary circles.

    ``edges`` holds ``(edge_id, (v, slot), (w, slot))`` triples.  ``loops``
    names crossingless circle components, which carry no vertex.
    """

    n_boundary: int
    vertices: tuple
    edges: tuple
    loops: tuple = ()
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n_boundary < 1:
            raise DivideError("a planar surface needs at least one boundary circle")
        ids = [v.id for v in self.vertices] + list(self.loops)
        if len(set(ids)) != len(ids):
            raise DivideError("duplicate vertex id")
        for v in self.vertices:
            if v.kind not in DEGREE:
                raise DivideError(f"unknown vertex kind {v.kind!r}")
            if (v.kind == ENDPOINT) != (v.circle is not None):
                raise DivideError(f"vertex {v.id}: only boundary endpoints sit on a circle")
            if v.circle is not None and not 0 <= v.circle < self.n_boundary:
                raise DivideError(f"vertex {v.id}: no boundary circle {v.circle}")
        for c in range(self.n_boundary):
            ps = [v.pos for v in self.vertices if v.circle == c]
            if len(set(ps)) != len(ps):
                raise DivideError(f"repeated endpoint position on circle {c}")
        self.map  # validates slots

    # -- the bare map ------------------------------------------------------

    @property
    def vertex(self) -> dict:
        return {v.id: v for v in self.vertices}

    @property
    def map(self) -> PlanarMap:
        if "map" not in self._cache:
            degree = {v.id: DEGREE[v.kind] for v in self.vertices}
            twin = {}
            for _, a, b in self.edges:
                for d in (a, b):
                    if d in twin:
                        raise MapError(f"slot {d[0]}.{d[1]} used twice")
                twin[a], twin[b] = b, a
            for lp in self.loops:
                degree[lp] = 2
                twin[(lp, 0)], twin[(lp, 1)] = (lp, 1), (lp, 0)
            self._cache["map"] = PlanarMap(degree, twin)
        return self._cache["map"]

    @property
    def edge_of(self) -> dict:
        """Dart -> edge id (loops use their own id)."""
        out = {}
        for eid, a, b in self.edges:
            out[a] = out[b] = eid
        for lp in self.loops:
            out[(lp, 0)] = out[(lp, 1)] = lp
        return out

    def crossings(self) -> list:
        return [v.id for v in self.vertices if v.kind == CROSSING]

    def endpoints(self) -> list:
        return [v.id for v in self.vertices if v.kind != CROSSING]

    def free_endpoints(self) -> list:
        return [v.id for v in self.vertices if v.kind == FREE]

    def is_endpoint_edge(self, eid) -> bool:
        kinds = self.vertex
        for e, a, b in self.edges:
            if e == eid:
                return kinds[a[0]].kind != CROSSING or kinds[b[0]].kind != CROSSING
        return False

    # -- strands -----------------------------------------------------------

    def strands(self) -> list:
        """Strands as lists of darts, each dart pointing along the strand.

        Intervals start at their endpoint with the smaller file position,
        circles at their first dart in file order.
        """
        m = self.map
        used, out = set(), []

        def walk(d):
            path = []
            while d not in used:
                used.add(d)
                used.add(m.twin[d])
                path.append(d)
                w, s = m.twin[d]
                if m.degree[w] != 4:
                    if m.degree[w] == 2:  # loop marker
                        nxt = (w, 1 - s)
                    else:
                        break
                else:
                    nxt = (w, (s + 2) % 4)
                d = nxt
            return path

        for v in self.vertices:
            if v.kind != CROSSING and (v.id, 0) not in used:
                out.append(("interval", walk((v.id, 0))))
        for d in m.darts():
            if d not in used:
                out.append(("circle", walk(d)))
        return out

    # -- completed map with the boundary circles ---------------------------

    @property
    def completed(self) -> "Completed":
        if "completed" not in self._cache:
            self._cache["completed"] = _complete(self)
        return self._cache["completed"]


@dataclass(frozen=True)
class Region:
    id: int
    walks: tuple  # tuples of darts of the completed map
    kind: str  # "inside" | "outside"

    @property
    def chi(self) -> int:
        return 2 - len(self.walks)


@dataclass(frozen=True)
class Completed:
    map: PlanarMap
    boundary_darts: frozenset
    regions: tuple
    region_of: dict  # dart -> region id (for darts of surface faces)
    disconnected: bool


def _complete(d: Divide) -> Completed:
    degree = dict(d.map.degree)
    twin = dict(d.map.twin)
    bdarts = set()
    interior_side = {}  # circle -> dart with the surface on its left
    for c in range(d.n_boundary):
        ends = sorted((v for v in d.vertices if v.circle == c), key=lambda v: v.pos)
        if not ends:
            m = f"@b{c}"
            degree[m] = 2
            twin[(m, 0)], twin[(m, 1)] = (m, 1), (m, 0)
            bdarts |= {(m, 0), (m, 1)}
            interior_side[c] = (m, 1) if c == 0 else (m, 0)
            continue
        # outer circle: slot 1 -> previous (clockwise), slot 2 -> next
        # holes: slot 1 -> next, slot 2 -> previous
        nxt, prv = (2, 1) if c == 0 else (1, 2)
        k = len(ends)
        for i, v in enumerate(ends):
            degree[v.id] = 3
            w = ends[(i + 1) % k]
            a, b = (v.id, nxt), (w.id, prv)
            twin[a], twin[b] = b, a
            bdarts |= {a, b}
        interior_side[c] = (ends[0].id, nxt) if c == 0 else (ends[0].id, prv)
    cm = PlanarMap(degree, twin)
    cm.euler_check()
    faces = cm.faces()
    face_of = cm.face_of()
    surface_face = {face_of[interior_side[c]] for c in range(d.n_boundary)}
    # the complementary faces are the far sides of the boundary darts
    outside_faces = {face_of[cm.twin[interior_side[c]]] for c in range(d.n_boundary)}
    comps = cm.components()
    boundary_vertices = {x for x, _ in bdarts}
    attached = [c for c in comps if set(c) & boundary_vertices]
    loose = [c for c in comps if not set(c) & boundary_vertices]

    groups = {i: [i] for i in range(len(faces)) if i not in outside_faces}
    host = face_of[interior_side[0]]
    for comp in loose:
        cset = set(comp)
        cf = [i for i, f in enumerate(faces) if f[0][0] in cset]
        outer = max(cf, key=lambda i: (len(faces[i]), -i))
        groups[host].append(outer)
        del groups[outer]
    regions, region_of = [], {}
    for rid, (_, members) in enumerate(sorted(groups.items())):
        walks = tuple(faces[i] for i in members)
        touches = any(x in bdarts for w in walks for x in w)
        regions.append(Region(rid, walks, "outside" if touches else "inside"))
        for w in walks:
            for x in w:
                region_of[x] = rid
    return Completed(cm, frozenset(bdarts), tuple(regions), region_of,
                     len(attached) + len(loose) > 1 or len(d.map.components()) > 1)


def trace_regions(d: Divide) -> list:
    """All regions of the divide; raises ``NonPlanar`` on a bad rotation system."""
    return list(d.completed.regions)


# -- admissibility ---------------------------------------------------------


@dataclass(frozen=True)
class AdmissibilityReport:
    checks: tuple  # (name, passed, detail)

    @property
    def admissible(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def violations(self) -> list:
        return [name for name, ok, _ in self.checks if not ok]


def is_connected(d: Divide) -> bool:
    return len(d.map.components()) <= 1


def check_admissibility(d: Divide) -> AdmissibilityReport:
    comp = d.completed
    checks = []
    ncomp = len(d.map.components())
    checks.append(("connectivity", ncomp <= 1, f"{ncomp} component(s)"))

    bad_in = [r.id for r in comp.regions if r.kind == "inside" and len(r.walks) != 1]
    checks.append(("inside-regions-disks", not bad_in, f"non-disk inside regions {bad_in}"))

    bad_out = []
    for r in comp.regions:
        if r.kind != "outside" or len(r.walks) == 1:
            continue
        if len(r.walks) == 2:
            full = [all(x in comp.boundary_darts for x in w) for w in r.walks]
            none = [not any(x in comp.boundary_darts for x in w) for w in r.walks]
            if (full[0] and none[1]) or (full[1] and none[0]):
                continue
        bad_out.append(r.id)
    checks.append(("outside-regions-shape", not bad_out, f"bad outside regions {bad_out}"))

    odd = []
    for c in range(d.n_boundary):
        k = sum(1 for v in d.vertices if v.circle == c)
        if k % 2:
            odd.append(c)
    checks.append(("boundary-parity", not odd, f"odd boundary circles {odd}"))

    strand_of = {}
    strands = d.strands()
    for i, (_, path) in enumerate(strands):
        for x in path:
            strand_of[x] = strand_of[d.map.twin[x]] = i
    odd_c = []
    for i, (kind, path) in enumerate(strands):
        if kind != "circle":
            continue
        count = 0
        for c in d.crossings():
            mine = [s for s in range(4) if strand_of[(c, s)] == i]
            if len(mine) == 2:
                count += 1
        if count % 2:
            odd_c.append(i)
    checks.append(("circle-parity", not odd_c, f"odd circle components {odd_c}"))
    return AdmissibilityReport(tuple(checks))


# -- free divides ----------------------------------------------------------


@dataclass(frozen=True)
class FreeCase:
    case: str  # "case1" | "case2" | "neither" | "ambiguous"
    free_endpoint: Optional[str] = None
    c: Optional[str] = None
    c2: Optional[str] = None
    e: Optional[str] = None
    e2: Optional[str] = None
    region: Optional[int] = None
    free_region: Optional[int] = None
    detail: str = ""


def classify_free(d: Divide) -> FreeCase:
    strands = d.strands()
    frees = [v for v in d.vertices if v.kind == FREE]
    bends = [v for v in d.vertices if v.kind == ENDPOINT]
    if d.n_boundary != 1 or len(strands) != 1 or strands[0][0] != "interval" \
            or len(frees) != 1 or len(bends) != 1:
        raise NotFreeDivide("need one immersed interval with one free endpoint")
    comp = d.completed
    m = d.map
    edge_of = d.edge_of
    f = frees[0].id
    rf = comp.region_of[(f, 0)]
    if comp.regions[rf].kind != "inside":
        raise NotFreeDivide("the free endpoint is adjacent to the outside region")
    # path from the free endpoint
    path = strands[0][1]
    if path[0][0] != f:
        path = [m.twin[x] for x in reversed(path)]
    visits = [m.twin[x][0] for x in path[:-1]]
    if not visits:
        return FreeCase("neither", f, detail="no double point")
    c = visits[0]
    outside = {r.id for r in comp.regions if r.kind == "outside"}

    def sides(x):
        return {comp.region_of[x], comp.region_of[m.twin[x]]}

    if any(comp.region_of[(c, s)] in outside for s in range(4)):
        cand = sorted({edge_of[(c, s)] for s in range(4)
                       if sides((c, s)) & outside and rf in sides((c, s))})
        if len(cand) != 1:
            return FreeCase("ambiguous", f, c, free_region=rf,
                            detail=f"case 1 edge candidates {cand}")
        return FreeCase("case1", f, c, e=cand[0], free_region=rf)

    between = visits[1:]
    if len(between) == 1:
        c2 = between[0]
        e = edge_of[path[1]]
        rs = sides(path[1]) - {rf}
        if len(rs) != 1:
            return FreeCase("ambiguous", f, c, c2, e=e, free_region=rf,
                            detail="edge e is not adjacent to the free endpoint region")
        (r,) = rs
        cand = sorted({edge_of[(c2, s)] for s in range(4)
                       if r in sides((c2, s)) and sides((c2, s)) & outside})
        if len(cand) != 1:
            return FreeCase("ambiguous", f, c, c2, e=e, region=r, free_region=rf,
                            detail=f"case 2 edge candidates {cand}")
        return FreeCase("case2", f, c, c2, e, cand[0], r, rf)
    return FreeCase("neither", f, c, free_region=rf,
                    detail=f"{len(between)} double points between c and the boundary")
