"""Stochastic higher-spin vertex model driven by the fused weights.

Lattice convention: a vertex consumes (left horizontal h, bottom vertical v)
and emits (right horizontal, top vertical).  Horizontal edges carry up to l
particles, vertical edges up to k.  In FusedIndex terms the table row is
(first=v, second=h) and the chosen column (first, second) is read as
(right, top).  Rows are processed bottom to top, each left to right, and
every vertex consumes exactly one 64-bit draw.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .errors import DegenerateError, StochasticRegimeError, fmt
from .fusedmatrix import OCCUPATION, FusedIndex, closed_form_matrix
from .heckerep import BlockShape
from .qseries import as_q, exact

RNG_NAME = "numpy.PCG64"
TWO64 = 1 << 64
MAPPING = {
    "row": "(first=bottom vertical, second=left horizontal)",
    "column": "(first=right horizontal, second=top vertical)",
    "order": "row-major, bottom row first, left to right",
}


@dataclass
class WeightTable:
    shape: BlockShape
    q: Fraction
    z: Fraction
    rows: Dict[FusedIndex, List[Tuple[FusedIndex, Fraction]]]
    _cuts: Dict[FusedIndex, Tuple[List[int], List[FusedIndex]]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        # raw < ceil(cum * 2**64)  <=>  raw / 2**64 < cum, exactly
        self._cuts = {}
        for i, dist in self.rows.items():
            cum, cuts, outs = Fraction(0), [], []
            for o, w in dist:
                cum += w
                cuts.append(math.ceil(cum * TWO64))
                outs.append(o)
            self._cuts[i] = (cuts, outs)

    def probability(self, i, o) -> Fraction:
        return dict(self.rows[FusedIndex(*i)]).get(FusedIndex(*o), Fraction(0))

    def csv_rows(self) -> List[List[str]]:
        out = [["row", "column", "exact", "decimal"]]
        with localcontext() as ctx:
            ctx.prec = 60
            for i in sorted(self.rows):
                for o, w in self.rows[i]:
                    dec = Decimal(w.numerator) / Decimal(w.denominator)
                    out.append([f"({i[0]},{i[1]})", f"({o[0]},{o[1]})", fmt(w), f"{dec:.12f}"])
        return out


def weight_table(shape: BlockShape, q, z) -> WeightTable:
    """Rows of the closed-form fused matrix as distributions.

    Raises StochasticRegimeError listing every negative entry.
    """
    q, z = as_q(q), exact(z)
    M = closed_form_matrix(shape, z, q)
    bad = [(i, o, v) for i, row in zip(M.ins, M.rows) for o, v in zip(M.outs, row) if v < 0]
    if bad:
        raise StochasticRegimeError(bad)
    rows = {i: [(o, v) for o, v in zip(M.outs, row) if v != 0] for i, row in zip(M.ins, M.rows)}
    for i, s in zip(M.ins, M.row_sums()):
        if s != 1:
            raise ValueError(f"row {i} sums to {fmt(s)}, not 1")
    return WeightTable(shape, q.q, z, rows)


def make_rng(seed: int) -> np.random.PCG64:
    return np.random.PCG64(seed)


def draw_bits(rng: np.random.PCG64) -> int:
    return int(rng.random_raw())


def sample_vertex(table: WeightTable, i, rng: np.random.PCG64) -> FusedIndex:
    """One exact draw from row i: the uniform is raw/2**64 for 64 raw bits."""
    i = FusedIndex(*i)
    if i not in table._cuts:
        raise ValueError(f"input {tuple(i)} outside shape ({table.shape.k},{table.shape.l})")
    cuts, outs = table._cuts[i]
    return outs[bisect.bisect_right(cuts, draw_bits(rng))]


@dataclass
class SampleGrid:
    width: int
    height: int
    horizontal: List[List[int]]  # height x (width+1); column 0 is the left boundary
    vertical: List[List[int]]  # (height+1) x width; row 0 is the bottom boundary
    seed: int
    metadata: dict = field(default_factory=dict)

    def conservation_defect(self):
        for r in range(self.height):
            for c in range(self.width):
                into = self.horizontal[r][c] + self.vertical[r][c]
                out = self.horizontal[r][c + 1] + self.vertical[r + 1][c]
                if into != out:
                    return r, c, into, out
        return None

    def to_json(self) -> dict:
        return {
            "metadata": {**self.metadata, "width": self.width, "height": self.height, "seed": self.seed},
            "horizontal": self.horizontal,
            "vertical": self.vertical,
        }

    def edge_rows(self) -> List[List]:
        out = [["kind", "row", "col", "value"]]
        for r, row in enumerate(self.horizontal):
            out += [["h", r, c, v] for c, v in enumerate(row)]
        for r, row in enumerate(self.vertical):
            out += [["v", r, c, v] for c, v in enumerate(row)]
        return out


def sample_grid(table: WeightTable, width: int, height: int, left: Sequence[int], bottom: Sequence[int], seed: int) -> SampleGrid:
    k, l = table.shape.k, table.shape.l
    if width < 1 or height < 1:
        raise ValueError("grid needs width, height >= 1")
    if len(left) != height or len(bottom) != width:
        raise ValueError(f"need {height} left values and {width} bottom values")
    if any(not 0 <= h <= l for h in left):
        raise ValueError(f"left boundary values must lie in [0, {l}]")
    if any(not 0 <= v <= k for v in bottom):
        raise ValueError(f"bottom boundary values must lie in [0, {k}]")
    rng = make_rng(seed)
    H = [[int(left[r])] + [0] * width for r in range(height)]
    V = [[int(b) for b in bottom]] + [[0] * width for _ in range(height)]
    for r in range(height):
        for c in range(width):
            right, top = sample_vertex(table, (V[r][c], H[r][c]), rng)
            H[r][c + 1] = right
            V[r + 1][c] = top
    meta = {
        "k": k,
        "ℓ": l,
        "q": fmt(table.q),
        "z": fmt(table.z),
        "rng": RNG_NAME,
        "draw": "uniform = raw64 / 2**64, exact cumulative comparison",
        "occupation": OCCUPATION,
        "mapping": MAPPING,
    }
    return SampleGrid(width, height, H, V, seed, meta)


def region_scan(shape: BlockShape, q, zs) -> List[Tuple[Fraction, Fraction]]:
    """Maximal runs of consecutive grid points z where the table is a
    probability kernel; exploratory only, the grid spacing bounds accuracy."""
    runs, start, prev = [], None, None
    for z in sorted(exact(z) for z in zs):
        try:
            weight_table(shape, q, z)
            ok = True
        except (StochasticRegimeError, DegenerateError):
            ok = False
        if ok and start is None:
            start = z
        if not ok and start is not None:
            runs.append((start, prev))
            start = None
        prev = z
    if start is not None:
        runs.append((start, prev))
    return runs
