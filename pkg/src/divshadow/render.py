"""Schematic SVG pictures of divides, doubled curves and shadows.

Layout is a barycentric (Tutte) embedding: one face of each component is
pinned to a circle and every other node sits at the mean of its
neighbours.  Edges are subdivided twice first so loops and parallel edges
stay visible.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .planar import PlanarMap

SIZE = 400.0
RADIUS = 170.0


def _subdivided(pm: PlanarMap):
    """Adjacency of the twice-subdivided graph and each dart's node path."""
    adj: dict = {}
    path = {}

    def link(p, q):
        adj.setdefault(p, []).append(q)
        adj.setdefault(q, []).append(p)

    for a in pm.edges():
        b = pm.twin[a]
        s1, s2 = ("s", a, 1), ("s", a, 2)
        link(a[0], s1)
        link(s1, s2)
        link(s2, b[0])
        path[a] = [a[0], s1, s2]
        path[b] = [b[0], s2, s1]
    for v in pm.degree:
        adj.setdefault(v, [])
    return adj, path


def layout(pm: PlanarMap, outer=None, iterations: int = 400) -> tuple:
    """Node positions and the dart paths to draw.

    ``outer`` picks the pinned face of the component containing it;
    other components pin their longest face.
    """
    adj, path = _subdivided(pm)
    owner = {p: d[0] for d, ps in path.items() for p in ps[1:]}
    faces = pm.faces()
    # a centre node per face keeps loops and pendant arcs from collapsing
    for i, f in enumerate(faces):
        c = ("face", i)
        owner[c] = f[0][0]
        adj[c] = []
        for d in f:
            for n in path[d]:
                adj[c].append(n)
                adj[n].append(c)
    comps = pm.components()
    pos: dict = {}
    cols = max(1, math.ceil(math.sqrt(len(comps))))
    scale = 1.0 / cols
    for ci, comp in enumerate(sorted(comps, key=lambda c: sorted(map(repr, c)))):
        comp = set(comp)
        cands = [i for i, f in enumerate(faces) if f and f[0][0] in comp]
        pin = outer if outer in cands else max(cands, key=lambda i: (len(faces[i]), -i))
        ring = []
        for d in faces[pin]:
            for node in path[d]:
                if node not in ring:
                    ring.append(node)
        cx = SIZE * scale * (ci % cols + 0.5)
        cy = SIZE * scale * (ci // cols + 0.5)
        r = RADIUS * scale
        fixed = {}
        for k, node in enumerate(ring):
            # clockwise on screen keeps the face on the left outside
            t = -2 * math.pi * k / len(ring)
            fixed[node] = (cx + r * math.cos(t), cy + r * math.sin(t))
        nodes = [n for n in adj if owner.get(n, n) in comp]
        for n in nodes:
            pos[n] = fixed.get(n, (cx, cy))
        free = [n for n in nodes if n not in fixed]
        for _ in range(iterations):
            for n in free:
                nb = adj[n]
                if nb:
                    pos[n] = (sum(pos[m][0] for m in nb) / len(nb),
                              sum(pos[m][1] for m in nb) / len(nb))
    return pos, path


def _teardrop(at, pos, size=28.0):
    """Points of a small loop at ``at`` pointing away from the picture's centre."""
    cx = sum(p[0] for p in pos.values()) / len(pos)
    cy = sum(p[1] for p in pos.values()) / len(pos)
    a = math.atan2(at[1] - cy, at[0] - cx) if math.dist(at, (cx, cy)) > 1e-6 else -math.pi / 2
    out = []
    for k in range(13):
        t = math.pi * k / 12
        r = size * math.sin(t)
        out.append((at[0] + r * math.cos(a + t - math.pi / 2),
                    at[1] + r * math.sin(a + t - math.pi / 2)))
    return out


def svg(pm: PlanarMap, outer=None, labels=None, arrows=(), shade=(), styles=None,
        title: str = "") -> str:
    """SVG 1.1 text.

    ``labels`` maps face index to text, ``arrows`` lists darts to draw with
    an arrowhead, ``shade`` lists faces to fill and ``styles`` maps a dart
    to a stroke colour.
    """
    pos, path = layout(pm, outer)
    faces = pm.faces()
    styles = styles or {}
    arrows = set(arrows)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE:.0f}" '
        f'height="{SIZE:.0f}" viewBox="0 0 {SIZE:.0f} {SIZE:.0f}">',
        '<defs><marker id="arr" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" '
        'markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z"/></marker></defs>',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    for i in sorted(shade):
        pts = [pos[n] for d in faces[i] for n in path[d]]
        if len(pts) > 2:
            out.append('<polygon fill="#e8e8e8" stroke="none" points="'
                       + " ".join(f"{x:.2f},{y:.2f}" for x, y in pts) + '"/>')
    for a in pm.edges():
        b = pm.twin[a]
        d = a if a in arrows or b not in arrows else b
        pts = [pos[n] for n in path[d]] + [pos[path[pm.twin[d]][0]]]
        if d[0] == pm.twin[d][0] and math.dist(pts[1], pts[2]) < 2.0:
            pts = _teardrop(pts[0], pos)
        colour = styles.get(d, styles.get(pm.twin[d], "black"))
        marker = ' marker-mid="url(#arr)"' if d in arrows else ""
        out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="1.5"{marker} points="'
                   + " ".join(f"{x:.2f},{y:.2f}" for x, y in pts) + '"/>')
    for v in sorted(pm.degree, key=repr):
        x, y = pos[v]
        r = 3 if pm.degree[v] != 4 else 2
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r}"/>')
    for i, text in sorted((labels or {}).items()):
        x, y = pos[("face", i)]
        out.append(f'<text x="{x:.2f}" y="{y:.2f}" font-size="11" text-anchor="middle" '
                   f'fill="#b00">{escape(str(text))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_divide(d) -> str:
    comp = d.completed
    pm = comp.map
    styles = {x: "#888" for x in comp.boundary_darts}
    faces = pm.faces()
    outside = [i for i, f in enumerate(faces) if f and f[0] not in comp.region_of]
    outer = max(outside, key=lambda i: (len(faces[i]), -i)) if outside else None
    return svg(pm, outer, styles=styles, title="divide")


def render_doubled(od) -> str:
    pm = od.map
    return svg(pm, min(od.outside) if od.outside else None, arrows=od.forward,
               shade=od.outside, title="doubled curve")


def render_shadow(sp) -> str:
    from .shadow import format_half

    od = sp.od
    rof = od.region_of_face()
    labels = {}
    for i in range(len(od.map.faces())):
        r = rof[i]
        if r in sp.gleam and not od.is_outside(r):
            labels[i] = format_half(sp.gleam[r])
    return svg(od.map, min(od.outside) if od.outside else None, labels=labels,
               shade=od.outside, title="shadow with gleams")
