"""LF-structures on shadowed polyhedra of oriented divides.

An LF-structure picks gleam -1 disks D_1..D_n in the collapsed polyhedron
whose complement is an orientable surface, ordered so that every internal
gleam is the sum of the half contributions at crossings of two disk
boundaries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from .doubling import WHITE
from .fibration import Cycle, assemble
from .shadow import ShadowedPolyhedron, corner_type, format_half
from .surface import NonOrientableSurface, NotASurface, RibbonSurface

MAX, SADDLE, MIN = "max", "saddle", "min"
CLASS_RANK = {MAX: 0, SADDLE: 1, MIN: 2}


class NoLFStructure(ValueError):
    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        self.detail = detail
        super().__init__(f"condition ({condition}) fails: {detail}" if detail else
                         f"condition ({condition}) fails")


def collapse(sp: ShadowedPolyhedron) -> ShadowedPolyhedron:
    """Remove the regions touching the boundary of the base surface.

    These are the only regions with a free edge; everything else in the
    polyhedron is glued to an annulus along each of its sides.
    """
    od = sp.od
    removed = set(sp.removed)
    for r in range(len(od.regions())):  # ascending ids
        if od.is_outside(r) and r not in removed:
            removed.add(r)
    return replace(sp, removed=frozenset(removed))


@dataclass(frozen=True)
class IVReport:
    ok: bool
    orientation: tuple  # sign per surface component
    computed: dict  # region -> doubled gleam from crossing contributions
    mismatches: tuple  # regions where the best orientation disagrees

    def lines(self, gleam: dict) -> list:
        out = []
        for r in sorted(self.computed):
            mark = "ok" if r not in self.mismatches else "MISMATCH"
            out.append(f"region {r} recomputed={format_half(self.computed[r])} "
                       f"gleam={format_half(gleam[r])} {mark}")
        return out


@dataclass
class LFStructure:
    xp: ShadowedPolyhedron
    disks: list  # region ids in order
    classes: list  # max | saddle | min per disk
    surface: RibbonSurface = None
    forward: frozenset = None  # strand orientation inducing the chosen one on the surface
    orientation: tuple = ()
    certificate: dict = field(default_factory=dict)
    _edge_walk: object = None

    @property
    def n(self) -> int:
        return len(self.disks)

    @property
    def kept(self) -> list:
        return kept_regions(self.xp, self.disks)

    def cycles(self) -> list:
        od = self.xp.od
        return [Cycle(tuple(self._edge_walk(od.region_walks(r)[0])), c, r)
                for r, c in zip(self.disks, self.classes)]

    def report(self) -> list:
        out = [f"D{i + 1} region={r} class={c} gleam={format_half(self.xp.gleam[r])}"
               for i, (r, c) in enumerate(zip(self.disks, self.classes))]
        out.append("orientation " + " ".join("+" if s > 0 else "-" for s in self.orientation))
        for k in ("i", "ii", "iii", "iv", "v"):
            out.append(f"condition ({k}) {'pass' if self.certificate.get(k) else 'fail'}")
        return out


def kept_regions(xp: ShadowedPolyhedron, disks) -> list:
    ds = set(disks)
    return [r for r in xp.internal if r not in ds and r not in xp.removed]


def internal_after_collapse(xp: ShadowedPolyhedron) -> set:
    """Regions still internal once the collapsed regions are gone.

    An arc shared with a removed region is left with two sheets, the region
    and the annulus over the arc, so the region merges into that annulus
    and reaches the link on the free side: it becomes a boundary region.
    """
    od = xp.od
    pm = od.map
    rof = od.region_of_face()
    face_of = pm.face_of()
    out = set()
    for r in xp.internal:
        if r in xp.removed:
            continue
        if all(rof[face_of[pm.twin[x]]] not in xp.removed
               for w in od.region_walks(r) for x in w):
            out.add(r)
    return out


# -- conditions --------------------------------------------------------------


def _check_v(xp, disks):
    inner = internal_after_collapse(xp)
    for r in disks:
        if r not in inner:
            raise NoLFStructure("v", f"region {r} is not internal after collapsing")
        if xp.od.region_chi(r) != 1:
            raise NoLFStructure("v", f"region {r} is not a disk")
        if xp.gleam.get(r) != -2:
            raise NoLFStructure("v", f"region {r} has gleam {format_half(xp.gleam.get(r, 0))}")


def _check_ii(xp, disks):
    od = xp.od
    rof = od.region_of_face()
    face_of = od.map.face_of()
    ds = set(disks)
    for x in od.map.darts():
        a, b = rof[face_of[x]], rof[face_of[od.map.twin[x]]]
        if a in ds and b in ds:
            raise NoLFStructure("ii", f"regions {a} and {b} share an arc")


def _surface(xp, disks, forward):
    try:
        return assemble(xp.od, kept_regions(xp, disks), forward)
    except (NotASurface, NonOrientableSurface) as exc:
        raise NoLFStructure("iii", str(exc)) from exc


def flip_components(od, rs: RibbonSurface, signs) -> frozenset:
    """Strand orientation reversed on the surface components with sign -1."""
    comp_of = {}
    for i, fs in enumerate(sorted(rs.components(), key=min)):
        for f in fs:
            comp_of[f] = i
    out = set()
    for f, name in enumerate(rs.names):
        if name[0] == "rect" and name[2] == 0:
            x = name[1]
            out.add(x if signs[comp_of[f]] > 0 else od.map.twin[x])
    return frozenset(out)


def contributions(xp, disks, forward) -> dict:
    """Doubled gleams recomputed from crossings of two disk boundaries.

    At a crossing where D_i and D_j (i < j) fill opposite quadrants, each of
    the other two quadrants gets +1/2 if the D_i corner has both strands
    pointing in, -1/2 otherwise.
    """
    od = xp.od
    pm = od.map
    rof = od.region_of_face()
    face_of = pm.face_of()
    rank = {r: i for i, r in enumerate(disks)}
    kept = set(kept_regions(xp, disks)) & internal_after_collapse(xp)
    out = {r: 0 for r in kept}
    for v in od.crossings():
        q = [rof[face_of[(v, k)]] for k in range(4)]
        for k in range(2):
            a, b = q[k], q[k + 2]
            if a in rank and b in rank and a != b:
                i_slot = k if rank[a] < rank[b] else k + 2
                y = (v, i_slot)
                t = ("o" if y in forward else "i") + ("o" if (v, (i_slot + 1) % 4) in forward else "i")
                c = 1 if t == "ii" else -1
                for r in (q[k + 1], q[(k + 3) % 4]):
                    if r in out:
                        out[r] += c
    return out


def verify_condition_iv(lf: LFStructure) -> IVReport:
    xp = lf.xp
    rs = lf.surface
    ncomp = len(rs.components())
    best = None
    for signs in itertools.product((1, -1), repeat=ncomp):
        fwd = flip_components(xp.od, rs, signs)
        comp = contributions(xp, lf.disks, fwd)
        bad = tuple(sorted(r for r, g in comp.items() if g != xp.gleam[r]))
        rep = IVReport(not bad, signs, comp, bad)
        if not bad:
            return rep
        if best is None or len(bad) < len(best.mismatches):
            best = rep
    return best


def build_lf(xp: ShadowedPolyhedron, disks, classes, strict: bool = True) -> LFStructure:
    """Check (ii)-(v) for an ordered choice of disks.

    With ``strict`` off a failure of (iv) is recorded in the certificate
    instead of raised, so the monodromy of the candidate can still be read.
    """
    cert = {"i": True}
    _check_v(xp, disks)
    cert["v"] = True
    _check_ii(xp, disks)
    cert["ii"] = True
    rs, ew = _surface(xp, disks, None)
    cert["iii"] = True
    lf = LFStructure(xp, list(disks), list(classes), rs, xp.od.forward, (), cert, ew)
    rep = verify_condition_iv(lf)
    if not rep.ok and not strict:
        cert["iv"] = False
        cert["iv_report"] = rep
        return lf
    if not rep.ok:
        r = rep.mismatches[0]
        raise NoLFStructure("iv", f"region {r}: recomputed {format_half(rep.computed[r])}, "
                                  f"gleam {format_half(xp.gleam[r])}")
    cert["iv"] = True
    fwd = flip_components(xp.od, rs, rep.orientation)
    rs, ew = _surface(xp, disks, fwd)
    lf.surface, lf._edge_walk, lf.forward, lf.orientation = rs, ew, fwd, rep.orientation
    lf.certificate["iv_report"] = rep
    return lf


# -- search ------------------------------------------------------------------


def classify(xp: ShadowedPolyhedron, r: int) -> str:
    od = xp.od
    src = od.region_source(r)
    if src is not None and src[0] == "region" and od.coloring is not None:
        return MAX if od.coloring.get(src[1]) == WHITE else MIN
    return SADDLE


def class_sorted(xp, disks) -> list:
    return sorted(disks, key=lambda r: (CLASS_RANK[classify(xp, r)], r))


def fast_disks(xp: ShadowedPolyhedron) -> list:
    prov = xp.od.provenance()
    return [r for r in xp.internal if r not in xp.removed and prov[r] in ("region", "quad")]


def find_lf(xp: ShadowedPolyhedron, order=None) -> LFStructure:
    """LF-structure of a collapsed polyhedron.

    ``order`` forces the disks and their order.  Otherwise the images of the
    inside regions and crossing squares are tried first, class sorted, and a
    bounded search over gleam -1 disks follows.
    """
    if order is not None:
        return build_lf(xp, order, [classify(xp, r) for r in order])
    disks = class_sorted(xp, fast_disks(xp))
    try:
        return build_lf(xp, disks, [classify(xp, r) for r in disks])
    except NoLFStructure as first:
        try:
            return search_lf(xp)
        except NoLFStructure:
            raise first


def _adjacency(xp):
    od = xp.od
    rof = od.region_of_face()
    face_of = od.map.face_of()
    adj: dict = {}
    for x in od.map.darts():
        a, b = rof[face_of[x]], rof[face_of[od.map.twin[x]]]
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj


def _crossing_terms(xp, disks, forward) -> list:
    """(a, b, kept regions, doubled value if a comes before b) per crossing
    of two disk boundaries."""
    od = xp.od
    pm = od.map
    rof = od.region_of_face()
    face_of = pm.face_of()
    ds = set(disks)
    out = []
    for v in od.crossings():
        q = [rof[face_of[(v, k)]] for k in range(4)]
        for k in range(2):
            a, b = q[k], q[k + 2]
            if a in ds and b in ds and a != b:
                vals = []
                for slot in (k, k + 2):
                    t = ("o" if (v, slot) in forward else "i") + \
                        ("o" if (v, (slot + 1) % 4) in forward else "i")
                    vals.append(1 if t == "ii" else -1)
                out.append((a, b, (q[k + 1], q[(k + 3) % 4]), vals[0], vals[1]))
    return out


def _order_ok(xp, kept, terms, rank) -> bool:
    total = {r: 0 for r in kept}
    for a, b, regs, va, vb in terms:
        c = va if rank[a] < rank[b] else vb
        for r in regs:
            if r in total:
                total[r] += c
    return all(total[r] == xp.gleam[r] for r in kept)


def search_lf(xp: ShadowedPolyhedron, limit: int = 200000) -> LFStructure:
    """Generic search: the disks and the rest alternate across every arc,
    so each connected block of internal regions has two choices."""
    adj = _adjacency(xp)
    live = [r for r in xp.internal if r not in xp.removed]
    blocks, seen = [], set()
    for r in live:
        if r in seen:
            continue
        side = {r: 0}
        stack, ok = [r], True
        while stack:
            a = stack.pop()
            for b in adj.get(a, ()):
                if b not in side and b in xp.gleam and b not in xp.removed:
                    side[b] = 1 - side[a]
                    stack.append(b)
                elif b in side and side[b] == side[a]:
                    ok = False
        seen |= set(side)
        if not ok:
            raise NoLFStructure("iii", f"regions around {r} cannot alternate")
        blocks.append(side)
    tried = 0
    last = NoLFStructure("v", "no gleam -1 disk set")
    for pick in itertools.product((0, 1), repeat=len(blocks)):
        disks = sorted(r for b, p in zip(blocks, pick) for r, s in b.items() if s == p)
        if not disks:
            continue
        try:
            _check_v(xp, disks)
            _check_ii(xp, disks)
            rs, _ = _surface(xp, disks, None)
        except NoLFStructure as exc:
            last = exc
            continue
        inner = internal_after_collapse(xp)
        kept = [r for r in kept_regions(xp, disks) if r in inner]
        ncomp = len(rs.components())
        for signs in itertools.product((1, -1), repeat=ncomp):
            terms = _crossing_terms(xp, disks, flip_components(xp.od, rs, signs))
            for perm in _orders(xp, disks):
                tried += 1
                if tried > limit:
                    raise NoLFStructure("iv", "search limit reached")
                if _order_ok(xp, kept, terms, {r: i for i, r in enumerate(perm)}):
                    return build_lf(xp, list(perm), [classify(xp, r) for r in perm])
        last = NoLFStructure("iv", f"no order of disks {disks} matches the gleams")
    raise last


def _orders(xp, disks):
    """Class-sorted orders first, then every other permutation."""
    base = class_sorted(xp, disks)
    yield base
    for perm in itertools.permutations(disks):
        if list(perm) != base:
            yield perm
