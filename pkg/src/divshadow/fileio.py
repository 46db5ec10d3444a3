"""Reading and writing the line-oriented ``.div`` format.

::

    surface planar n=1
    vertex c0 crossing
    vertex p0 endpoint b=0@0
    vertex p1 endpoint b=0@1/2
    vertex f free
    edge e0 p0.0 c0.0
    loop o1

Slots at a crossing are numbered 0-3 counterclockwise, 0-2 and 1-3 being
the two strands.  Positions are rationals along the boundary circle.
``strand`` lines are accepted and ignored; ``loop`` adds a crossingless
circle.
"""

from __future__ import annotations

from fractions import Fraction

from .divide import CROSSING, DEGREE, ENDPOINT, FREE, Divide, DVertex


class DivideSyntaxError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class DuplicateId(ValueError):
    pass


class DanglingSlot(ValueError):
    pass


def _slot(tok: str, lineno: int):
    v, sep, s = tok.rpartition(".")
    if not sep or not v or not s.isdigit():
        raise DivideSyntaxError(lineno, f"expected <vertex>.<slot>, got {tok!r}")
    return v, int(s)


def parse(text: str) -> Divide:
    n = None
    vertices, edges, loops = [], [], []
    seen: dict = {}

    def claim(ident, lineno):
        if ident in seen:
            raise DuplicateId(f"line {lineno}: id {ident!r} already used on line {seen[ident]}")
        seen[ident] = lineno

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head = tok[0]
        if head == "surface":
            if n is not None:
                raise DivideSyntaxError(lineno, "second surface line")
            if len(tok) != 3 or tok[1] != "planar" or not tok[2].startswith("n="):
                raise DivideSyntaxError(lineno, "expected 'surface planar n=<k>'")
            try:
                n = int(tok[2][2:])
            except ValueError:
                raise DivideSyntaxError(lineno, f"bad boundary count {tok[2]!r}") from None
            continue
        if n is None:
            raise DivideSyntaxError(lineno, "file must start with a surface line")
        if head == "vertex":
            if len(tok) < 3:
                raise DivideSyntaxError(lineno, "expected 'vertex <id> <kind>'")
            vid, kind = tok[1], tok[2]
            claim(vid, lineno)
            if kind in (CROSSING, FREE) and len(tok) == 3:
                vertices.append(DVertex(vid, kind))
            elif kind == ENDPOINT and len(tok) == 4 and tok[3].startswith("b="):
                circ, at, pos = tok[3][2:].partition("@")
                try:
                    vertices.append(DVertex(vid, ENDPOINT, int(circ), Fraction(pos)))
                except (ValueError, ZeroDivisionError):
                    raise DivideSyntaxError(lineno, f"bad endpoint position {tok[3]!r}") from None
                if not at:
                    raise DivideSyntaxError(lineno, "expected b=<circle>@<pos>")
            else:
                raise DivideSyntaxError(lineno, f"bad vertex description {' '.join(tok[2:])!r}")
        elif head == "edge":
            if len(tok) != 4:
                raise DivideSyntaxError(lineno, "expected 'edge <id> <v>.<slot> <v>.<slot>'")
            claim(tok[1], lineno)
            edges.append((tok[1], _slot(tok[2], lineno), _slot(tok[3], lineno), lineno))
        elif head == "loop":
            if len(tok) != 2:
                raise DivideSyntaxError(lineno, "expected 'loop <id>'")
            claim(tok[1], lineno)
            loops.append(tok[1])
        elif head == "strand":
            continue
        else:
            raise DivideSyntaxError(lineno, f"unknown keyword {head!r}")
    if n is None:
        raise DivideSyntaxError(1, "missing surface line")

    kinds = {v.id: v.kind for v in vertices}
    used: dict = {}
    for eid, a, b, lineno in edges:
        for v, s in (a, b):
            if v not in kinds:
                raise DanglingSlot(f"line {lineno}: edge {eid} uses unknown vertex {v!r}")
            if not 0 <= s < DEGREE[kinds[v]]:
                raise DanglingSlot(f"line {lineno}: vertex {v} has no slot {s}")
            if (v, s) in used:
                raise DanglingSlot(f"line {lineno}: slot {v}.{s} already used by {used[(v, s)]}")
            used[(v, s)] = eid
    for v in vertices:
        for s in range(DEGREE[v.kind]):
            if (v.id, s) not in used:
                raise DanglingSlot(f"slot {v.id}.{s} is not on any edge")
    return Divide(n, tuple(vertices), tuple((e, a, b) for e, a, b, _ in edges), tuple(loops))


def _pos(p: Fraction) -> str:
    return str(p.numerator) if p.denominator == 1 else f"{p.numerator}/{p.denominator}"


def emit(d: Divide) -> str:
    """Canonical text: vertices, edges, loops, each in the divide's order."""
    out = [f"surface planar n={d.n_boundary}"]
    for v in d.vertices:
        if v.kind == ENDPOINT:
            out.append(f"vertex {v.id} endpoint b={v.circle}@{_pos(Fraction(v.pos))}")
        else:
            out.append(f"vertex {v.id} {v.kind}")
    for e, (u, s), (w, t) in d.edges:
        out.append(f"edge {e} {u}.{s} {w}.{t}")
    for o in d.loops:
        out.append(f"loop {o}")
    return "\n".join(out) + "\n"


def load(path) -> Divide:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
