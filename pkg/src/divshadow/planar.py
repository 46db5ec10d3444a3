"""Planar maps given by rotation systems.

A dart is a pair ``(vertex, slot)``.  The slots at a vertex are numbered
``0 .. degree-1`` in counterclockwise order, and ``twin`` pairs each dart with
the dart at the other end of its edge.  Faces are traced with the face kept
on the left of every dart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterator

Vertex = Hashable
Dart = tuple  # (vertex, slot)


class MapError(ValueError):
    pass


class NonPlanar(MapError):
    pass


@dataclass(frozen=True)
class PlanarMap:
    degree: dict
    twin: dict
    _faces: list = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        for v, k in self.degree.items():
            for s in range(k):
                d = (v, s)
                if d not in self.twin:
                    raise MapError(f"slot {v}.{s} is not attached to any edge")
                t = self.twin[d]
                if self.twin.get(t) != d or t == d:
                    raise MapError(f"slot {v}.{s} is not paired consistently")
        for d in self.twin:
            v, s = d
            if v not in self.degree or not 0 <= s < self.degree[v]:
                raise MapError(f"edge references unknown slot {v}.{s}")

    # -- basic structure ---------------------------------------------------

    def darts(self) -> Iterator[Dart]:
        for v in self.degree:
            for s in range(self.degree[v]):
                yield (v, s)

    def edges(self) -> list:
        """One representative dart per edge, in a deterministic order."""
        seen, out = set(), []
        for d in self.darts():
            if d not in seen:
                seen.add(d)
                seen.add(self.twin[d])
                out.append(d)
        return out

    def rotate(self, d: Dart, k: int = 1) -> Dart:
        v, s = d
        return (v, (s + k) % self.degree[v])

    def face_next(self, d: Dart) -> Dart:
        """Next dart along the face on the left of ``d``."""
        w, s = self.twin[d]
        return (w, (s - 1) % self.degree[w])

    def faces(self) -> list:
        if self._faces is None:
            seen, out = set(), []
            for d in self.darts():
                if d in seen:
                    continue
                walk, x = [], d
                while x not in seen:
                    seen.add(x)
                    walk.append(x)
                    x = self.face_next(x)
                out.append(tuple(walk))
            object.__setattr__(self, "_faces", out)
        return self._faces

    def face_of(self) -> dict:
        """Map from dart to the index of the face on its left."""
        return {d: i for i, f in enumerate(self.faces()) for d in f}

    def components(self) -> list:
        parent = {v: v for v in self.degree}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (v, _), (w, _) in self.twin.items():
            a, b = find(v), find(w)
            if a != b:
                parent[a] = b
        groups: dict = {}
        for v in self.degree:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def euler_check(self) -> None:
        """Raise ``NonPlanar`` unless every component is a planar map.

        Faces are traced per component, so the target is 2 per component.
        """
        V = len(self.degree)
        E = len(self.twin) // 2
        F = len(self.faces())
        C = len(self.components())
        if V - E + F != 2 * C:
            raise NonPlanar(f"V - E + F = {V - E + F}, expected {2 * C}")
