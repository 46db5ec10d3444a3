"""Print the torus-knot Alexander polynomials used as test oracles.

Runs without the package: the polynomials come from cyclotomic factors.
"""

import pathlib
import sys
from dataclasses import dataclass, field

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

from _config import parse_config  # noqa: E402
from oracle import torus_alexander_oracle  # noqa: E402


@dataclass
class Config:
    """Torus knots to tabulate, as p,q strings."""
    pairs: list = field(default_factory=lambda: ["2,3", "2,5", "2,7", "2,9", "3,4", "3,5"])


def main():
    cfg = parse_config(Config)
    for s in cfg.pairs:
        p, q = map(int, s.split(","))
        print(f"T({p},{q})", " ".join(map(str, torus_alexander_oracle(p, q))))


if __name__ == "__main__":
    main()
