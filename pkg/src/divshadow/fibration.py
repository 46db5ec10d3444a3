"""Fiber surfaces, vanishing cycles and monodromy on first homology."""

from __future__ import annotations

from dataclasses import dataclass

from . import intmath
from .doubling import OrientedDivide
from .surface import RibbonSurface, walk_chain


class DegreeMismatch(ValueError):
    pass


class Disconnected(ValueError):
    pass


# Sign in x -> x + s <x, c> c, fixed so the four twists of the worked
# free-divide example come out with the published signs.
TWIST_SIGN = -1


def _pair(pm, v, s):
    k = pm.degree[v]
    return s % (k // 2) if k > 2 else 0


def _bot(x, half):
    return ("bot", x, half)


def assemble(od: OrientedDivide, kept, forward=None) -> tuple:
    """Fiber surface from the annuli over every arc plus the kept regions.

    Returns the surface and a function turning a region boundary walk into
    an edge walk on it.
    """
    pm = od.map
    fwd = od.forward if forward is None else forward
    edges, cells, names = {}, [], []
    for x in sorted(fwd, key=repr):
        (u, s), (w, t) = x, pm.twin[x]
        pu, pw = ("t", u, _pair(pm, u, s)), ("t", w, _pair(pm, w, t))
        vu, vw = ("vert", u, _pair(pm, u, s)), ("vert", w, _pair(pm, w, t))
        edges[_bot(x, 0)] = (("b", u), ("bm", x))
        edges[_bot(x, 1)] = (("bm", x), ("b", w))
        edges[("top", x, 0)] = (pu, ("tm", x))
        edges[("top", x, 1)] = (("tm", x), pw)
        edges[("vmid", x)] = (("bm", x), ("tm", x))
        edges[vu] = (("b", u), pu)
        edges[vw] = (("b", w), pw)
        cells.append([(_bot(x, 0), 1), (("vmid", x), 1), (("top", x, 0), -1), (vu, -1)])
        cells.append([(_bot(x, 1), 1), (vw, 1), (("top", x, 1), -1), (("vmid", x), -1)])
        names += [("rect", x, 0), ("rect", x, 1)]

    def edge_walk(darts):
        out = []
        for y in darts:
            if y in fwd:
                out += [(_bot(y, 0), 1), (_bot(y, 1), 1)]
            else:
                x = pm.twin[y]
                out += [(_bot(x, 1), -1), (_bot(x, 0), -1)]
        return out

    for r in sorted(kept):
        walks = [edge_walk(w) for w in od.region_walks(r)]
        word = list(walks[0])
        base = ("b", od.region_walks(r)[0][0][0])
        for i, w in enumerate(walks[1:], 1):
            cut = ("cut", r, i)
            edges[cut] = (base, ("b", od.region_walks(r)[i][0][0]))
            word += [(cut, 1)] + w + [(cut, -1)]
        cells.append(word)
        names.append(("region", r))
    return RibbonSurface(edges, cells, names), edge_walk


@dataclass(frozen=True)
class Cycle:
    walk: tuple  # ((edge, sign), ...)
    tag: str  # max | saddle | min
    disk: int  # region of the disk it bounds


@dataclass
class Homology:
    """Integral basis of H1 from collapsing the surface onto a graph."""

    surface: RibbonSurface
    steps: list  # (cell, free edge) collapse sequence
    tree: set
    leftover: list  # non-tree edges of the spine, one per generator
    walks: list  # generator walks

    @property
    def rank(self) -> int:
        return len(self.leftover)

    def coords(self, walk) -> tuple:
        z = dict(walk_chain(walk))
        rs = self.surface
        for f, e in self.steps:
            c = z.get(e, 0)
            if not c:
                continue
            (sgn,) = [s for ee, s in rs.cells[f] if ee == e]
            m = c * sgn
            for ee, s in rs.cells[f]:
                z[ee] = z.get(ee, 0) - m * s
        return tuple(z.get(l, 0) for l in self.leftover)

    def form(self) -> tuple:
        rs = self.surface
        n = self.rank
        return tuple(tuple(rs.pairing(self.walks[i], self.walks[j]) for j in range(n))
                     for i in range(n))


def h1_basis(rs: RibbonSurface) -> Homology:
    """Collapse every cell through a free edge, tops of rectangles first,
    then read generators off a spanning tree of the remaining graph."""
    if not rs.boundary_edges():
        raise Disconnected("closed surfaces are not handled")
    alive = set(range(len(rs.cells)))
    count = {e: len(rs._sides[e]) for e in rs.edges}
    removed_edges, steps = set(), []
    order = sorted(alive, key=lambda f: (rs.names[f][0] != "rect", repr(rs.names[f])))
    progress = True
    while alive and progress:
        progress = False
        for f in order:
            if f not in alive:
                continue
            word = rs.cells[f]
            free = [e for e, _ in word if count[e] == 1 and e not in removed_edges
                    and sum(1 for ee, _ in word if ee == e) == 1]
            if not free:
                continue
            free.sort(key=lambda e: (e[0] != "top", repr(e)))
            e = free[0]
            steps.append((f, e))
            removed_edges.add(e)
            alive.discard(f)
            for ee, _ in word:
                count[ee] -= 1
            progress = True
    if alive:
        raise Disconnected("surface does not collapse onto a graph")
    spine = [e for e in rs.edges if e not in removed_edges]
    # spanning forest of the spine
    parent: dict = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    tree, leftover = set(), []
    adj: dict = {}
    for e in sorted(spine, key=repr):
        t, h = rs.edges[e]
        if find(t) != find(h):
            parent[find(t)] = find(h)
            tree.add(e)
            adj.setdefault(t, []).append((e, h, 1))
            adj.setdefault(h, []).append((e, t, -1))
        else:
            leftover.append(e)
    walks = [_fundamental(rs, adj, e) for e in leftover]
    return Homology(rs, steps, tree, leftover, walks)


def _fundamental(rs, adj, e) -> list:
    t, h = rs.edges[e]
    # path in the tree from h back to t
    prev = {h: None}
    stack = [h]
    while stack:
        a = stack.pop()
        if a == t:
            break
        for ee, b, s in adj.get(a, ()):
            if b not in prev:
                prev[b] = (a, ee, s)
                stack.append(b)
    path, a = [], t
    while prev[a] is not None:
        p, ee, s = prev[a]
        path.append((ee, s))
        a = p
    return [(e, 1)] + list(reversed(path))


# -- twists and monodromy ---------------------------------------------------


def intersection_matrix(rs: RibbonSurface, walks) -> tuple:
    pushed = [rs.push_off(w) for w in walks]
    chains = [walk_chain(w) for w in walks]
    n = len(walks)
    return tuple(tuple(rs.intersect(chains[i], pushed[j]) for j in range(n)) for i in range(n))


def twist_matrix(c, form, sign: int = TWIST_SIGN) -> tuple:
    """Transvection x -> x + s <x, c> c in coordinates.

    ``c`` is a coordinate vector and ``form`` the intersection matrix of
    the basis, so <x, c> = x^T J c.
    """
    n = len(c)
    jc = intmath.matvec(form, c)
    cols = []
    for j in range(n):
        k = sign * jc[j]
        cols.append([int(i == j) + k * c[i] for i in range(n)])
    return intmath.transpose(cols)


def product(factors) -> tuple:
    """Later factors act after earlier ones, so they multiply on the left."""
    n = len(factors[0]) if factors else 0
    m = intmath.identity(n)
    for f in factors:
        m = intmath.matmul(f, m)
    return m


@dataclass(frozen=True)
class Monodromy:
    factors: tuple
    product: tuple
    charpoly: tuple
    form: tuple
    basis: str  # "cycles" when the vanishing cycles form a basis

    def symplectic(self) -> bool:
        j = self.form
        return all(intmath.matmul(intmath.matmul(intmath.transpose(m), j), m) == j
                   for m in self.factors + (self.product,))


def monodromy_from(hom: Homology, cycles) -> Monodromy:
    coords = [hom.coords(c.walk) for c in cycles]
    n = hom.rank
    if len(coords) == n and n and abs(intmath.det(coords)) == 1:
        form = intersection_matrix(hom.surface, [c.walk for c in cycles])
        vecs = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        basis = "cycles"
    else:
        form = hom.form()
        vecs = coords
        basis = "spanning-tree"
    factors = tuple(twist_matrix(v, form) for v in vecs)
    prod = product(factors) if factors else intmath.identity(n)
    return Monodromy(factors, prod, intmath.charpoly(prod), form, basis)


def alexander_compare(p, reference) -> bool:
    a, b = intmath.normalize_unit(p), intmath.normalize_unit(reference)
    if len(a) != len(b):
        raise DegreeMismatch(f"degrees {len(a) - 1} and {len(b) - 1} differ")
    return a == b


def torus_alexander(p: int, q: int) -> tuple:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), ascending coefficients."""
    def tk(k):
        return tuple([-1] + [0] * (k - 1) + [1])

    num = intmath.poly_mul(tk(p * q), tk(1))
    den = intmath.poly_mul(tk(p), tk(q))
    quo, rem = intmath.poly_divmod(num, den)
    if any(rem):
        raise ArithmeticError("torus knot quotient is not exact")
    return quo


def match_signed_permutation(ours, theirs):
    """A signed permutation P with P^-1 A P = B for every pair, or None.

    ``ours`` and ``theirs`` are equal-length lists of square matrices.
    """
    import itertools

    n = len(ours[0])
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            # P e_j = signs[j] e_perm[j]
            ok = all(a[perm[i]][perm[j]] * signs[i] * signs[j] == b[i][j]
                     for a, b in zip(ours, theirs) for i in range(n) for j in range(n))
            if ok:
                return perm, signs
    return None
