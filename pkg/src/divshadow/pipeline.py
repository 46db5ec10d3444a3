"""Divide to monodromy in one call."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .divide import Divide
from .doubling import OrientedDivide, double
from .fibration import Homology, Monodromy, h1_basis, monodromy_from
from .lf import LFStructure, collapse, find_lf
from .shadow import ShadowedPolyhedron, build_polyhedron


@dataclass
class Result:
    divide: Optional[Divide]
    od: OrientedDivide
    sp: ShadowedPolyhedron
    xp: ShadowedPolyhedron
    lf: LFStructure
    homology: Homology
    monodromy: Monodromy


def from_oriented(od: OrientedDivide, divide=None, order=None) -> Result:
    sp = build_polyhedron(od)
    xp = collapse(sp)
    lf = find_lf(xp, order)
    hom = h1_basis(lf.surface)
    mono = monodromy_from(hom, lf.cycles())
    return Result(divide, od, sp, xp, lf, hom, mono)


def run(d: Divide) -> Result:
    return from_oriented(double(d), d)


def deformations(od: OrientedDivide):
    """Candidate deformations of a doubled free divide near its free end:
    the curve as doubled, with the end cap retracted, and each single finger
    move in either of those."""
    from .moves import NoValidDeformation, finger_moves, free_end_bigon, uncross

    yield "as doubled", od
    bases = [od]
    try:
        un = uncross(od, free_end_bigon(od))
        yield "cap retracted", un
        bases.append(un)
    except (ValueError, NoValidDeformation):
        pass
    for base in bases:
        for (a, b), o in finger_moves(base, outside=True):
            yield f"{base.note} finger {a} {b}".strip(), o


def run_free(d: Divide, strict: bool = True) -> Result:
    """Free divide with one free endpoint to monodromy.

    Every candidate deformation is tried in turn with its class-sorted
    image disks.  When none of them passes
    the gleam check and ``strict`` is off, the curve as doubled is returned
    with its disks in class order and (iv) marked failed in the certificate.
    """
    from .divide import classify_free
    from .doubling import double_free
    from .lf import NoLFStructure, build_lf, class_sorted, classify, fast_disks
    from .moves import NoValidDeformation

    fc = classify_free(d)
    if fc.case not in ("case1", "case2"):
        raise NoLFStructure("i", f"free divide is {fc.case}: {fc.detail or 'no doubling rule'}")
    od = double_free(d, fc)
    tried = 0
    for _, cand in deformations(od):
        tried += 1
        try:
            # only the class-sorted image disks; the open search is too slow here
            xp = collapse(build_polyhedron(cand))
            return from_oriented(cand, d, class_sorted(xp, fast_disks(xp)))
        except (NoLFStructure, ValueError):
            continue
    if strict:
        raise NoValidDeformation(f"none of {tried} deformations passes (i)-(v)")
    sp = build_polyhedron(od)
    xp = collapse(sp)
    disks = class_sorted(xp, fast_disks(xp))
    lf = build_lf(xp, disks, [classify(xp, r) for r in disks], strict=False)
    hom = h1_basis(lf.surface)
    return Result(d, od, sp, xp, lf, hom, monodromy_from(hom, lf.cycles()))
