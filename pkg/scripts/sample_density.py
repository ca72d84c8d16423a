"""Sample a quadrant and print the mean horizontal occupation per column.

    python scripts/sample_density.py --k 1 --l 2 --q 1/2 --z 5 --size 40 --runs 20
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from fusedhecke.heckerep import BlockShape
from fusedhecke.vertexsim import sample_grid, weight_table


@dataclass
class Config:
    k: int = 1
    l: int = 1
    q: Fraction = Fraction(1, 2)
    z: Fraction = Fraction(2)
    size: int = 30
    runs: int = 20
    seed: int = 0


def run(cfg: Config):
    T = weight_table(BlockShape(cfg.k, cfg.l), cfg.q, cfg.z)
    totals = [0] * (cfg.size + 1)
    for r in range(cfg.runs):
        g = sample_grid(T, cfg.size, cfg.size, [cfg.l] * cfg.size, [0] * cfg.size, cfg.seed + r)
        for row in g.horizontal:
            for c, v in enumerate(row):
                totals[c] += v
    n = cfg.runs * cfg.size
    return [t / n for t in totals]


def main():
    ap = argparse.ArgumentParser()
    for f, d in Config.__dataclass_fields__.items():
        ap.add_argument(f"--{f}", type=Fraction if f in ("q", "z") else int, default=d.default)
    cfg = Config(**vars(ap.parse_args()))
    for c, m in enumerate(run(cfg)):
        print(f"{c:4d} {m:.4f}")


if __name__ == "__main__":
    main()
