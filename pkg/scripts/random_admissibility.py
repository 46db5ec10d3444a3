"""Compare the general admissibility checker with connectivity on random
divides in the disk, and run the pipeline on the admissible ones."""

import pathlib
import random
import sys
from collections import Counter
from dataclasses import dataclass

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

from _config import parse_config  # noqa: E402

from divshadow.divide import check_admissibility, is_connected  # noqa: E402
from divshadow.fixtures import random_disk_divide  # noqa: E402
from divshadow.intmath import is_palindromic_up_to_sign  # noqa: E402
from divshadow.pipeline import run  # noqa: E402


@dataclass
class Config:
    """Random chords bent through a few interior points."""
    samples: int = 60
    seed: int = 0
    max_strands: int = 3
    max_bends: int = 2
    pipeline: bool = True


def main():
    cfg = parse_config(Config)
    rng = random.Random(cfg.seed)
    agree, outcomes = 0, Counter()
    for _ in range(cfg.samples):
        d = random_disk_divide(rng, rng.randint(1, cfg.max_strands), rng.randint(0, cfg.max_bends))
        adm = check_admissibility(d).admissible
        agree += adm == is_connected(d)
        if not adm:
            outcomes["not admissible"] += 1
            continue
        if not cfg.pipeline:
            continue
        try:
            res = run(d)
        except ValueError as e:
            outcomes[f"error {type(e).__name__}"] += 1
            continue
        m = res.monodromy
        good = m.symplectic() and is_palindromic_up_to_sign(m.charpoly)
        outcomes["lf ok" if good else "property failure"] += 1
    print(f"admissible == connected on {agree}/{cfg.samples}")
    print(dict(sorted(outcomes.items())))
    return 0 if agree == cfg.samples else 1


if __name__ == "__main__":
    sys.exit(main())
