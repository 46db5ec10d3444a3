"""Run the full pipeline on Lissajous divides and compare with the oracle."""

import json
import pathlib
import sys
import time
from dataclasses import asdict, dataclass, field

HERE = pathlib.Path(__file__).resolve().parent
sys.path.insert(0, str(HERE.parent / "tests"))
sys.path.insert(0, str(HERE))

from _config import parse_config  # noqa: E402
from oracle import torus_alexander_oracle  # noqa: E402

from divshadow.fixtures import chebyshev  # noqa: E402
from divshadow.pipeline import run  # noqa: E402


@dataclass
class Config:
    """Lissajous divides (cos qt, cos pt) for each coprime p < q up to max_q."""
    max_p: int = 3
    max_q: int = 7
    out: str = ""
    extra: list = field(default_factory=list)


@dataclass
class Row:
    p: int
    q: int
    n: int
    genus: int
    charpoly: list
    matches_oracle: bool
    symplectic: bool
    seconds: float


def sweep(cfg: Config) -> list:
    from math import gcd

    pairs = [(p, q) for p in range(2, cfg.max_p + 1) for q in range(p + 1, cfg.max_q + 1)
             if gcd(p, q) == 1]
    pairs += [tuple(map(int, s.split(","))) for s in cfg.extra]
    rows = []
    for p, q in pairs:
        t0 = time.perf_counter()
        res = run(chebyshev(p, q))
        dt = time.perf_counter() - t0
        m = res.monodromy
        rows.append(Row(p, q, res.lf.n, res.lf.surface.genus, list(m.charpoly),
                        m.charpoly == torus_alexander_oracle(p, q), m.symplectic(), round(dt, 3)))
    return rows


def main():
    cfg = parse_config(Config)
    rows = sweep(cfg)
    for r in rows:
        flag = "ok" if r.matches_oracle and r.symplectic else "MISMATCH"
        print(f"T({r.p},{r.q}) n={r.n} genus={r.genus} {flag} {r.seconds:.2f}s")
    if cfg.out:
        pathlib.Path(cfg.out).write_text(json.dumps([asdict(r) for r in rows], indent=1))
    return 0 if all(r.matches_oracle and r.symplectic for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
