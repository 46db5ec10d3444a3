"""Enumerate small free divides and try the deformation catalog on each.

For every candidate the first failing LF condition is tallied.  With
``--pairs`` every pair of finger moves near the free end is tried as well,
which takes several minutes.
"""

import pathlib
import sys
from collections import Counter
from dataclasses import dataclass

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

from _config import parse_config  # noqa: E402

from divshadow.divide import classify_free  # noqa: E402
from divshadow.doubling import double_free  # noqa: E402
from divshadow.fixtures import free_divides  # noqa: E402
from divshadow.lf import NoLFStructure, class_sorted, collapse, fast_disks  # noqa: E402
from divshadow.moves import finger_moves  # noqa: E402
from divshadow.pipeline import deformations, from_oriented, run_free  # noqa: E402
from divshadow.shadow import build_polyhedron  # noqa: E402


@dataclass
class Config:
    """Free divides with one free endpoint and at most max_crossings double points."""
    max_crossings: int = 2
    pairs: bool = False


def attempt(od):
    try:
        xp = collapse(build_polyhedron(od))
        from_oriented(od, order=class_sorted(xp, fast_disks(xp)))
        return "ok"
    except NoLFStructure as e:
        return f"({e.condition})"
    except ValueError as e:
        return type(e).__name__


def near_free_end(od):
    faces = od.map.faces()
    return {i for i, f in enumerate(faces)
            if any(isinstance(d[0], tuple) and d[0][0] in ("g", "finger") for d in f)}


def main():
    cfg = parse_config(Config)
    for word, turns, d in free_divides(cfg.max_crossings):
        fc = classify_free(d)
        name = "".join("AB"[c] for c in word)
        print(f"{name} turns={turns} {fc.case} e={fc.e} e2={fc.e2}")
        if fc.case not in ("case1", "case2"):
            continue
        od = double_free(d, fc)
        tally = Counter(attempt(c) for _, c in deformations(od))
        print("  single moves:", dict(sorted(tally.items())))
        if cfg.pairs:
            tally = Counter()
            for _, o in finger_moves(od, faces=near_free_end(od), outside=True):
                for _, o2 in finger_moves(o, faces=near_free_end(o), outside=True):
                    tally[attempt(o2)] += 1
            print("  pairs:", dict(sorted(tally.items())))
        res = run_free(d, strict=False)
        print(f"  fallback charpoly {res.monodromy.charpoly} "
              f"(iv) {'pass' if res.lf.certificate.get('iv') else 'fail'}")


if __name__ == "__main__":
    main()
