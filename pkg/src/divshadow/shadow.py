"""Shadowed polyhedra of oriented divides.

The polyhedron is the base surface with one annulus attached along each
oriented circle of the divide.  Its internal regions are the regions of the
divide away from the surface boundary.  Gleams are stored doubled, so the
integer 1 stands for 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .doubling import OrientedDivide


class MissingProvenance(ValueError):
    pass


class NotInternal(ValueError):
    pass


# Contribution (doubled) of a corner, keyed by the directions of its two
# sides read counterclockwise: "o" if the strand leaves the crossing.
CONVENTIONS = {
    "A": {"oi": 1, "io": 1, "oo": 1, "ii": -1},
    "B": {"oi": 1, "io": 1, "oo": -1, "ii": 1},
}
CROSSING_CONVENTION = "A"


def corner_type(od: OrientedDivide, x) -> str:
    v, s = x
    y = (v, (s + 1) % 4)
    return ("o" if x in od.forward else "i") + ("o" if y in od.forward else "i")


def corners(od: OrientedDivide, r: int) -> list:
    """Corner darts of region r: one per passage of its boundary through a crossing."""
    return [x for w in od.region_walks(r) for x in w if od.map.degree[x[0]] == 4]


def formula_gleam(od: OrientedDivide, r: int, convention: str = CROSSING_CONVENTION) -> int:
    """Doubled gleam: local contributions minus the Euler characteristic."""
    table = CONVENTIONS[convention]
    return sum(table[corner_type(od, x)] for x in corners(od, r)) - 2 * od.region_chi(r)


def z2_gleam(od: OrientedDivide, r: int) -> int:
    """Parity of the side switches of the boundary at true vertices.

    Each corner of a planar region is a half twist of the neighbouring
    sheets, so the attached strip is a Moebius band iff the number of
    corners is odd.
    """
    if od.is_outside(r):
        raise NotInternal(f"region {r} meets the surface boundary")
    return len(corners(od, r)) % 2


def internal_regions(od: OrientedDivide) -> list:
    return [r for r in range(len(od.regions())) if not od.is_outside(r)]


def gleam_recipe(od: OrientedDivide) -> dict:
    """Doubled gleams from the doubling recipe: 1/2 on triangles, 0 on
    endpoint bigons and on the annulus between the copies of a crossingless
    circle, -1 elsewhere.

    The strip over an edge whose mid crossing was suppressed (free divides)
    is not covered by the recipe and is left out.
    """
    if od.source is None:
        raise MissingProvenance("oriented divide carries no doubling provenance")
    prov = od.provenance()
    out = {}
    for r in internal_regions(od):
        if prov[r] != "strip":
            out[r] = {"triangle": 1, "bigon": 0, "annulus": 0}.get(prov[r], -2)
    return out


@dataclass(frozen=True)
class ShadowedPolyhedron:
    od: OrientedDivide
    gleam: dict  # region -> doubled gleam, internal regions only
    convention: str
    removed: frozenset = frozenset()  # regions collapsed away

    @property
    def internal(self) -> list:
        return sorted(self.gleam)

    def z2(self, r: int) -> int:
        return z2_gleam(self.od, r)

    def integrality_ok(self) -> bool:
        return all((g - self.z2(r)) % 2 == 0 for r, g in self.gleam.items())

    def boundary_regions(self) -> list:
        return [r for r in range(len(self.od.regions()))
                if self.od.is_outside(r) and r not in self.removed]

    def table(self) -> list:
        prov = self.od.provenance()
        return [f"region {r} provenance={prov[r]} gleam={format_half(g)} z2={self.z2(r)}"
                for r, g in sorted(self.gleam.items())]


def build_polyhedron(od: OrientedDivide, convention: str = CROSSING_CONVENTION) -> ShadowedPolyhedron:
    gl = {r: formula_gleam(od, r, convention) for r in internal_regions(od)}
    return ShadowedPolyhedron(od, gl, convention)


def format_half(g: int) -> str:
    """Render a doubled gleam as p/2 in lowest terms."""
    q = Fraction(g, 2)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def calibrate(od: OrientedDivide) -> list:
    """Conventions under which formula and recipe agree on every region."""
    recipe = gleam_recipe(od)
    return [name for name in sorted(CONVENTIONS)
            if all(formula_gleam(od, r, name) == g for r, g in recipe.items())]
