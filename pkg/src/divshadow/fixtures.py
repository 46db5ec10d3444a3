"""Divides built from plane curves, plus a few named fixtures.

Curves are polylines in the disk of radius ``R`` centred at the origin.  An
open polyline whose end lies on the circle gets a boundary endpoint there;
any other open end is a free endpoint.  Crossings come from exact segment
intersection tests on the sampled polyline.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .divide import CROSSING, ENDPOINT, FREE, Divide, DVertex


@dataclass(frozen=True)
class Curve:
    points: tuple  # ((x, y), ...)
    closed: bool = False


def _seg_hit(p, q, r, s):
    """Parameters (a, b) where pq and rs cross, or None."""
    dx1, dy1 = q[0] - p[0], q[1] - p[1]
    dx2, dy2 = s[0] - r[0], s[1] - r[1]
    den = dx1 * dy2 - dy1 * dx2
    if den == 0:
        return None
    ex, ey = r[0] - p[0], r[1] - p[1]
    a = (ex * dy2 - ey * dx2) / den
    b = (ex * dy1 - ey * dx1) / den
    if 0 < a < 1 and 0 < b < 1:
        return a, b
    return None


def divide_from_curves(curves, radius: float = 1.0, tol: float = 1e-9) -> Divide:
    segs = []  # (curve, index, p, q)
    for ci, c in enumerate(curves):
        pts = list(c.points)
        n = len(pts) if c.closed else len(pts) - 1
        for i in range(n):
            segs.append((ci, i, pts[i], pts[(i + 1) % len(pts)]))
    events = {ci: [] for ci in range(len(curves))}  # (param, crossing id, direction)
    ncross = 0
    for a in range(len(segs)):
        ca, ia, p, q = segs[a]
        box_a = (min(p[0], q[0]), max(p[0], q[0]), min(p[1], q[1]), max(p[1], q[1]))
        for b in range(a + 1, len(segs)):
            cb, ib, r, s = segs[b]
            if ca == cb:
                n = len(curves[ca].points)
                if abs(ia - ib) <= 1 or (curves[ca].closed and abs(ia - ib) == n - 1):
                    continue
            if max(r[0], s[0]) < box_a[0] or min(r[0], s[0]) > box_a[1] or \
                    max(r[1], s[1]) < box_a[2] or min(r[1], s[1]) > box_a[3]:
                continue
            hit = _seg_hit(p, q, r, s)
            if hit is None:
                continue
            cid = f"c{ncross}"
            ncross += 1
            events[ca].append((ia + hit[0], cid, (q[0] - p[0], q[1] - p[1])))
            events[cb].append((ib + hit[1], cid, (s[0] - r[0], s[1] - r[1])))
    # slot order at each crossing by angle of the four outgoing directions
    dirs: dict = {}
    for ci, evs in events.items():
        for t, cid, (dx, dy) in evs:
            dirs.setdefault(cid, []).append((ci, t, dx, dy))
    slot_of: dict = {}
    for cid, passes in dirs.items():
        rays = []
        for ci, t, dx, dy in passes:
            rays.append((math.atan2(dy, dx), (ci, t, "out")))
            rays.append((math.atan2(-dy, -dx), (ci, t, "in")))
        rays.sort()
        for k, (_, key) in enumerate(rays):
            slot_of[(cid, key)] = k
    # endpoints on the circle, ranked counterclockwise
    vertices = [DVertex(cid, CROSSING) for cid in sorted(dirs, key=lambda c: int(c[1:]))]
    ends = []
    for ci, c in enumerate(curves):
        if c.closed:
            continue
        for which, pt in ((0, c.points[0]), (1, c.points[-1])):
            on = abs(math.hypot(*pt) - radius) < 1e-6 * max(radius, 1)
            ends.append((ci, which, pt, on))
    on_circle = sorted((e for e in ends if e[3]),
                       key=lambda e: math.atan2(e[2][1], e[2][0]) % (2 * math.pi))
    rank = {(e[0], e[1]): k for k, e in enumerate(on_circle)}
    end_id = {}
    for k, (ci, which, pt, on) in enumerate(ends):
        vid = f"p{k}"
        end_id[(ci, which)] = vid
        if on:
            vertices.append(DVertex(vid, ENDPOINT, 0, Fraction(rank[(ci, which)])))
        else:
            vertices.append(DVertex(vid, FREE))
    edges, loops = [], []
    for ci, c in enumerate(curves):
        evs = sorted(events[ci])
        darts = []  # (start dart, end dart) along the curve
        if c.closed and not evs:
            loops.append(f"o{ci}")
            continue
        stops = [((cid, slot_of[(cid, (ci, t, "in"))]), (cid, slot_of[(cid, (ci, t, "out"))]))
                 for t, cid, _ in evs]
        if c.closed:
            for k in range(len(stops)):
                darts.append((stops[k][1], stops[(k + 1) % len(stops)][0]))
        else:
            a, b = (end_id[(ci, 0)], 0), (end_id[(ci, 1)], 0)
            seq = [(None, a)] + stops + [(b, None)]
            for k in range(len(seq) - 1):
                darts.append((seq[k][1], seq[k + 1][0]))
        for x, y in darts:
            edges.append((f"e{len(edges)}", x, y))
    return Divide(1, tuple(vertices), tuple(edges), tuple(loops))


# -- named curves --------------------------------------------------------------


def chebyshev(p: int, q: int, samples: int = 0) -> Divide:
    """The Lissajous divide t -> (cos qt, cos pt), 0 <= t <= pi.

    Both ends sit on corners of the square, which lie on the circle of
    radius sqrt(2); for coprime p, q it is the divide of x^p + y^q.
    """
    n = samples or 60 * (p + q)
    pts = []
    for i in range(n + 1):
        t = math.pi * i / n
        pts.append((math.cos(q * t), math.cos(p * t)))
    # pin the ends exactly on the circle
    pts[0] = (1.0, 1.0)
    pts[-1] = (float((-1) ** q), float((-1) ** p))
    return divide_from_curves([Curve(tuple(pts))], radius=math.sqrt(2))


def torus_2(m: int) -> Divide:
    """Divide of the (2, 2m+1) torus knot."""
    return chebyshev(2, 2 * m + 1)


def circle(r: float = 0.5, n: int = 24) -> Curve:
    return Curve(tuple((r * math.cos(2 * math.pi * k / n), r * math.sin(2 * math.pi * k / n))
                       for k in range(n)), closed=True)


def random_disk_divide(rng: random.Random, strands: int = 2, steps: int = 6) -> Divide:
    """Chords of the unit disk bent through a few random interior points."""
    curves = []
    for _ in range(strands):
        a, b = rng.uniform(0, 2 * math.pi), rng.uniform(0, 2 * math.pi)
        pts = [(math.cos(a), math.sin(a))]
        for _ in range(steps):
            rr = 0.85 * math.sqrt(rng.random())
            th = rng.uniform(0, 2 * math.pi)
            pts.append((rr * math.cos(th), rr * math.sin(th)))
        pts.append((math.cos(b), math.sin(b)))
        curves.append(Curve(tuple(pts)))
    return divide_from_curves(curves)


# -- free divides ------------------------------------------------------------


def _gauss_words(k: int):
    """Words of length 2k using each of k letters twice, letters in order
    of first appearance."""
    def rec(word, used, counts):
        if len(word) == 2 * k:
            yield tuple(word)
            return
        for a in range(used):
            if counts[a] < 2:
                counts[a] += 1
                yield from rec(word + [a], used, counts)
                counts[a] -= 1
        if used < k:
            counts[used] = 1
            yield from rec(word + [used], used + 1, counts)
            counts[used] = 0

    yield from rec([], 0, [0] * k)


def free_divide_from_word(word, turns) -> Divide:
    """One interval from a boundary endpoint to a free endpoint.

    ``word`` lists the crossings met along the way; ``turns[c]`` says
    whether the second passage through c goes from slot 1 to 3 (+1) or
    from 3 to 1 (-1).  The first passage always runs from 0 to 2.
    """
    seen: dict = {}
    stops = []
    for c in word:
        if c not in seen:
            seen[c] = 1
            stops.append(((f"c{c}", 0), (f"c{c}", 2)))
        else:
            a, b = (1, 3) if turns[c] > 0 else (3, 1)
            stops.append(((f"c{c}", a), (f"c{c}", b)))
    vertices = [DVertex("p", ENDPOINT, 0, Fraction(0))]
    vertices += [DVertex(f"c{c}", CROSSING) for c in sorted(seen)]
    vertices.append(DVertex("f", FREE))
    seq = [(None, ("p", 0))] + stops + [(("f", 0), None)]
    edges = tuple((f"e{k}", seq[k][1], seq[k + 1][0]) for k in range(len(seq) - 1))
    return Divide(1, tuple(vertices), edges)


def free_divides(max_crossings: int = 2):
    """Planar free divides with one free endpoint away from the outside."""
    from .planar import MapError

    out = []
    for k in range(1, max_crossings + 1):
        for word in _gauss_words(k):
            for bits in range(2 ** k):
                turns = {c: (1 if bits >> c & 1 else -1) for c in range(k)}
                try:
                    d = free_divide_from_word(word, turns)
                    comp = d.completed
                except (MapError, ValueError):
                    continue
                fx = ("f", 0)
                if comp.regions[comp.region_of[fx]].kind != "inside":
                    continue
                out.append((word, turns, d))
    return out
