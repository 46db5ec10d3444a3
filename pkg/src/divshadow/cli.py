"""Command line front end.

Exit codes: 0 success, 1 invalid input, 2 not admissible or no
LF-structure, 3 comparison mismatch.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import fileio
from .divide import DivideError, check_admissibility, classify_free
from .doubling import NotAdmissible, double
from .fibration import TWIST_SIGN, Disconnected
from .lf import NoLFStructure, collapse, find_lf
from .moves import NoValidDeformation
from .planar import MapError
from .shadow import CROSSING_CONVENTION, build_polyhedron, format_half
from .surface import NotASurface, NonOrientableSurface

OK, INVALID, REFUSED, MISMATCH = 0, 1, 2, 3
COMMANDS = ("validate", "regions", "admissible", "double", "shadow", "lf",
            "monodromy", "alexander", "render")


class Refused(Exception):
    """Input is well formed but the requested stage does not apply."""


def header(cmd: str) -> str:
    return (f"# divshadow {cmd} crossing-convention={CROSSING_CONVENTION} "
            f"twist-sign={TWIST_SIGN:+d} coloring=lowest-inside-region-white")


def _poly(p) -> str:
    return " ".join(str(c) for c in p)


def _matrix(m) -> list:
    return ["  " + " ".join(f"{x:3d}" for x in row) for row in m]


def _is_free(d) -> bool:
    return bool(d.free_endpoints())


def _oriented(d, free_case: str):
    if _is_free(d):
        fc = classify_free(d)
        want = {"1": "case1", "2": "case2"}.get(free_case)
        if want and fc.case != want:
            raise Refused(f"free divide is {fc.case}, not {want}")
        if fc.case not in ("case1", "case2"):
            raise Refused(f"free divide is {fc.case}; no doubling applies")
        from .doubling import double_free
        return double_free(d, fc)
    return double(d)


def _result(d, free_case: str, strict: bool):
    from .pipeline import run, run_free

    if _is_free(d):
        _oriented(d, free_case)  # case checks
        return run_free(d, strict=strict)
    return run(d)


def _stage(cmd: str, d, args, out: list, err: list) -> int:
    if cmd == "validate":
        comp = d.completed
        out.append(f"vertices {len(d.vertices)} edges {len(d.edges)} loops {len(d.loops)} "
                   f"regions {len(comp.regions)}")
        out.append("valid")
        return OK
    if cmd == "regions":
        comp = d.completed
        eo = d.edge_of
        for r in comp.regions:
            walks = ["(" + " ".join(eo.get(x, "~") for x in w) + ")" for w in r.walks]
            out.append(f"R{r.id} {r.kind} chi={r.chi} " + " ".join(walks))
        return OK
    if cmd == "admissible":
        if _is_free(d):
            fc = classify_free(d)
            out.append(f"free divide: {fc.case}" + (f" ({fc.detail})" if fc.detail else ""))
            return OK if fc.case in ("case1", "case2") else REFUSED
        rep = check_admissibility(d)
        for name, ok, detail in rep.checks:
            out.append(f"{name} {'pass' if ok else 'fail'}: {detail}")
        out.append("admissible" if rep.admissible else
                   "not admissible: " + ", ".join(rep.violations))
        return OK if rep.admissible else REFUSED
    if cmd == "double":
        od = _oriented(d, args.free_case)
        prov = od.provenance()
        out.append(f"crossings {len(od.crossings())} strands {len(od.strands())} "
                   f"regions {len(od.regions())}")
        for r in range(len(od.regions())):
            side = "outside" if od.is_outside(r) else "inside"
            out.append(f"R{r} {side} chi={od.region_chi(r)} from={prov[r]}")
        return OK
    if cmd == "shadow":
        sp = build_polyhedron(_oriented(d, args.free_case))
        for r in sp.internal:
            out.append(f"R{r} gleam={format_half(sp.gleam[r])} z2={sp.z2(r)}")
        return OK
    if cmd == "lf":
        if _is_free(d):
            res = _result(d, args.free_case, strict=True)
            out.extend(res.lf.report())
            return OK
        out.extend(find_lf(collapse(build_polyhedron(double(d)))).report())
        return OK
    if cmd in ("monodromy", "alexander"):
        res = _result(d, args.free_case, strict=False)
        cert = res.lf.certificate
        if cert.get("iv") is False:
            bad = cert["iv_report"].mismatches
            msg = ("no deformation passes condition (iv); showing the undeformed "
                   f"doubling (regions {' '.join(map(str, bad))} disagree)")
            out.append("# warning: " + msg)
            err.append("warning: " + msg)
        m = res.monodromy
        if cmd == "monodromy":
            out.append(f"vanishing cycles {len(m.factors)} basis {m.basis}")
            for i, f in enumerate(m.factors, 1):
                out.append(f"twist {i}")
                out.extend(_matrix(f))
            out.append("product")
            out.extend(_matrix(m.product))
        out.append(f"charpoly {_poly(m.charpoly)}")
        if cmd == "alexander" and args.expect is not None:
            from .fibration import DegreeMismatch, alexander_compare

            ref = tuple(int(c) for c in args.expect.replace(",", " ").split())
            try:
                same = alexander_compare(m.charpoly, ref)
            except DegreeMismatch as e:
                out.append(f"mismatch: {e}")
                return MISMATCH
            out.append("match" if same else f"mismatch: expected {_poly(ref)}")
            return OK if same else MISMATCH
        return OK
    if cmd == "render":
        from . import render

        if args.stage == "divide":
            text = render.render_divide(d)
        elif args.stage == "doubled":
            text = render.render_doubled(_oriented(d, args.free_case))
        else:
            text = render.render_shadow(build_polyhedron(_oriented(d, args.free_case)))
        if not args.output:
            raise Refused("render needs -o <path>")
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.append(f"wrote {args.output}")
        return OK
    raise ValueError(cmd)


def run_one(cmd: str, path: str, args) -> tuple:
    """(exit code, stdout text, stderr text) for one file."""
    out, err = [header(cmd), f"# file {path}"], []
    try:
        d = fileio.load(path)
        code = _stage(cmd, d, args, out, err)
    except OSError as e:
        err.append(f"error: {e}")
        code = INVALID
    except (NotAdmissible, NoLFStructure, NoValidDeformation, Disconnected, Refused,
            NotASurface, NonOrientableSurface) as e:
        msg = str(e)
        if isinstance(e, NotAdmissible):
            msg = f"not admissible: {msg}"
        out.append(f"refused: {msg}")
        err.append(f"{path}: {msg}")
        code = REFUSED
    except (fileio.DivideSyntaxError, fileio.DuplicateId, fileio.DanglingSlot,
            DivideError, MapError) as e:
        err.append(f"{path}: invalid input: {e}")
        code = INVALID
    return code, "\n".join(out) + "\n", "\n".join(err) + ("\n" if err else "")


def _job(item):
    cmd, path, args = item
    return run_one(cmd, path, args)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="divshadow", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("files", nargs="+", help=".div files")
    p.add_argument("--free-case", choices=("auto", "1", "2"), default="auto")
    p.add_argument("--expect", help="expected Alexander coefficients, ascending")
    p.add_argument("--stage", choices=("divide", "doubled", "shadow"), default="divide")
    p.add_argument("-o", "--output")
    p.add_argument("--batch", action="store_true",
                   help="evaluate several files in parallel processes")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if len(args.files) > 1 and not args.batch:
        print("several files need --batch", file=sys.stderr)
        return INVALID
    if args.batch and args.command == "render":
        print("render takes a single file", file=sys.stderr)
        return INVALID
    items = [(args.command, f, args) for f in args.files]
    if args.batch and len(items) > 1:
        with ProcessPoolExecutor() as ex:
            results = list(ex.map(_job, items))
    else:
        results = [_job(i) for i in items]
    for code, out, err in results:
        sys.stdout.write(out)
        sys.stderr.write(err)
    return max(code for code, _, _ in results)


if __name__ == "__main__":
    sys.exit(main())
