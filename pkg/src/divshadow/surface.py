"""Combinatorial fiber surfaces.

The fiber is assembled from the annuli attached along the oriented divide
and the regions of the base surface that stay after removing the disks of
an LF-structure.  Each arc of the doubled curve is cut at its midpoint and
carries two rectangles of its annulus; kept regions are polygons glued to
the bottoms of those rectangles.

Curves are handled as edge walks.  The algebraic intersection of two curves
is computed by pushing one of them off itself through the vertex links and
counting signed crossings with the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class NotASurface(ValueError):
    pass


class NonOrientableSurface(ValueError):
    pass


@dataclass
class RibbonSurface:
    edges: dict  # edge id -> (tail, head)
    cells: list  # boundary words: lists of (edge id, +-1)
    names: list  # cell labels
    orient: list = field(default_factory=list)  # +-1 per cell
    _sides: dict = field(default_factory=dict, repr=False)
    _links: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        sides: dict = {}
        for f, word in enumerate(self.cells):
            for k, (e, _) in enumerate(word):
                sides.setdefault(e, []).append((f, k))
        for e in self.edges:
            n = len(sides.get(e, ()))
            if n == 0 or n > 2:
                raise NotASurface(f"edge {e} lies on {n} cells")
        self._sides = sides
        if not self.orient:
            self.orient = self._solve_orientation()
        self._check_links()

    # -- counts ------------------------------------------------------------

    @property
    def vertices(self) -> set:
        return {v for t, h in self.edges.values() for v in (t, h)}

    @property
    def chi(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.cells)

    def boundary_edges(self) -> list:
        return [e for e in self.edges if len(self._sides[e]) == 1]

    def components(self) -> list:
        parent = {f: f for f in range(len(self.cells))}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e, ss in self._sides.items():
            if len(ss) == 2:
                parent[find(ss[0][0])] = find(ss[1][0])
        # cells meeting only at a vertex are still one component
        at: dict = {}
        for f, word in enumerate(self.cells):
            for e, _ in word:
                for v in self.edges[e]:
                    at.setdefault(v, []).append(f)
        for fs in at.values():
            for g in fs[1:]:
                parent[find(fs[0])] = find(g)
        groups: dict = {}
        for f in range(len(self.cells)):
            groups.setdefault(find(f), []).append(f)
        return list(groups.values())

    @property
    def n_boundary(self) -> int:
        """Number of boundary circles, traced through the vertex links."""
        bedges = set(self.boundary_edges())
        seen, count = set(), 0
        for e0 in sorted(bedges, key=repr):
            if e0 in seen:
                continue
            count += 1
            e, end = e0, 1
            while e not in seen:
                seen.add(e)
                v = self.edges[e][end]
                node = (e, end)
                # walk the link path from this boundary edge-end to the other one
                nxt = self._link_path_end(v, node)
                e, end = nxt[0], 1 - nxt[1]
        return count

    @property
    def b1(self) -> int:
        return len(self.components()) - self.chi if self.boundary_edges() else 2 - self.chi

    @property
    def genus(self) -> int:
        return (2 - self.chi - self.n_boundary) // 2

    @property
    def orientable(self) -> bool:
        return True

    # -- orientation -------------------------------------------------------

    def _solve_orientation(self) -> list:
        o = [0] * len(self.cells)
        for start in range(len(self.cells)):
            if o[start]:
                continue
            o[start] = 1
            stack = [start]
            while stack:
                f = stack.pop()
                for k, (e, s) in enumerate(self.cells[f]):
                    for g, kk in self._sides[e]:
                        if (g, kk) == (f, k):
                            continue
                        want = -o[f] * s * self.cells[g][kk][1]
                        if o[g] == 0:
                            o[g] = want
                            stack.append(g)
                        elif o[g] != want:
                            raise NonOrientableSurface(f"cells {f} and {g} disagree along {e}")
        return o

    # -- vertex links ------------------------------------------------------

    def _end_vertex(self, e, end):
        return self.edges[e][end]

    def link(self, v) -> dict:
        """Corners at v: node -> list of (corner, other node).

        Nodes are edge ends ``(edge, end)`` with ``end`` 0 for the tail and
        1 for the head; corners are ``(cell, k)``, the corner after position k.
        """
        if v in self._links:
            return self._links[v]
        adj: dict = {}
        for f, word in enumerate(self.cells):
            n = len(word)
            for k in range(n):
                e1, s1 = word[k]
                e2, s2 = word[(k + 1) % n]
                a = (e1, 1 if s1 > 0 else 0)  # end of e1 where the traversal arrives
                b = (e2, 0 if s2 > 0 else 1)  # end of e2 where it departs
                if self._end_vertex(*a) != v:
                    continue
                adj.setdefault(a, []).append(((f, k), b))
                adj.setdefault(b, []).append(((f, k), a))
        self._links[v] = adj
        return adj

    def _check_links(self):
        for v in self.vertices:
            adj = self.link(v)
            nodes = {(e, end) for e, (t, h) in self.edges.items()
                     for end, x in ((0, t), (1, h)) if x == v}
            if set(adj) != nodes:
                raise NotASurface(f"vertex {v} has an edge end outside every corner")
            if any(len(c) > 2 for c in adj.values()):
                raise NotASurface(f"vertex {v} is singular")
            # connected link
            start = next(iter(nodes))
            seen, stack = {start}, [start]
            while stack:
                x = stack.pop()
                for _, y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if seen != nodes:
                raise NotASurface(f"vertex {v} has a disconnected link")

    def _link_path_end(self, v, node):
        """Follow a link path from a degree-1 node to the other end."""
        adj = self.link(v)
        prev, x = None, node
        while True:
            nxt = [(c, y) for c, y in adj[x] if c != prev]
            if not nxt:
                return x
            prev, x = nxt[0]
            if len(adj[x]) == 1:
                return x

    # -- curves ------------------------------------------------------------

    def left_side(self, e, sign):
        """The (cell, position) lying on the left of edge e traversed with sign."""
        for f, k in self._sides[e]:
            if self.orient[f] * self.cells[f][k][1] == sign:
                return f, k
        return None

    def push_off(self, walk) -> list:
        """Crossings of the left push-off of a closed edge walk.

        Returns ``(edge, cell, position)`` triples: the push-off crosses the
        edge leaving the given side of that cell.
        """
        out = []
        n = len(walk)
        for i in range(n):
            e_in, s_in = walk[i]
            e_out, s_out = walk[(i + 1) % n]
            v = self.edges[e_in][1 if s_in > 0 else 0]
            start = (e_in, 1 if s_in > 0 else 0)
            goal = (e_out, 0 if s_out > 0 else 1)
            side = self.left_side(e_in, s_in)
            if side is None:
                raise NotASurface(f"walk runs along the boundary edge {e_in}")
            adj = self.link(v)
            f, k = side
            arrives = 1 if self.cells[f][k][1] > 0 else 0
            c = (f, k) if arrives == start[1] else (f, (k - 1) % len(self.cells[f]))
            x = start
            while True:
                y = next(yy for cc, yy in adj[x] if cc == c)
                if y == goal:
                    break
                others = [cc for cc, _ in adj[y] if cc != c]
                if not others:
                    raise NotASurface(f"push-off leaves the surface at {v}")
                out.append((y[0], c[0], _side_pos(self, c, y)))
                x, c = y, others[0]
        return out

    def intersect(self, chain: dict, crossings) -> int:
        """Algebraic intersection of a 1-chain with a pushed-off curve."""
        total = 0
        for e, f, k in crossings:
            c = chain.get(e, 0)
            if c:
                # leaving the cell on the left of e means crossing left to right
                total -= c * self.orient[f] * self.cells[f][k][1]
        return total

    def pairing(self, walk_a, walk_b) -> int:
        """<a, b> for closed edge walks a and b."""
        return self.intersect(walk_chain(walk_a), self.push_off(walk_b))


def _side_pos(rs, corner, node):
    """Position in the corner's cell of the side along the node's edge."""
    f, k = corner
    word = rs.cells[f]
    n = len(word)
    e = node[0]
    if word[k][0] == e and (1 if word[k][1] > 0 else 0) == node[1]:
        return k
    return (k + 1) % n


def walk_chain(walk) -> dict:
    out: dict = {}
    for e, s in walk:
        out[e] = out.get(e, 0) + s
    return {e: c for e, c in out.items() if c}
