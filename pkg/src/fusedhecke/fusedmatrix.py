"""Reduction of fused operators (N = 2) to the occupation basis, and the
closed-form entries of the fused stochastic R-matrix.

Occupation convention (the one place it is fixed): an index (a, b) counts
copies of e_1 (digit 0) in the first and second block.  Input indices
(k', l') live on blocks of sizes (k, l); output indices on blocks of sizes
(l, k), since a fused R-matrix carries V_k ⊗ V_l to V_l ⊗ V_k.  Matrices
are emitted row = input, columns ordered lexicographically with the second
coordinate fastest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

from .errors import ReductionError, fmt
from .heckerep import BlockShape, projector
from .qseries import as_q, baxter_coefficient, exact, q_binomial, q_pochhammer
from .tensor import TensorOperator, TensorSpace

OCCUPATION = "count of e_1 (digit 0) per block"
ORDERING = "lex-second-fastest"


class FusedIndex(NamedTuple):
    first: int
    second: int


def input_indices(shape: BlockShape) -> List[FusedIndex]:
    return [FusedIndex(a, b) for a in range(shape.k + 1) for b in range(shape.l + 1)]


def output_indices(shape: BlockShape) -> List[FusedIndex]:
    return [FusedIndex(a, b) for a in range(shape.l + 1) for b in range(shape.k + 1)]


@dataclass
class FusedMatrix:
    shape: BlockShape
    rows: List[List[Fraction]]
    q: Optional[Fraction] = None
    z: Optional[Fraction] = None
    ins: List[FusedIndex] = field(init=False)
    outs: List[FusedIndex] = field(init=False)

    def __post_init__(self):
        self.ins = input_indices(self.shape)
        self.outs = output_indices(self.shape)
        if len(self.rows) != len(self.ins) or any(len(r) != len(self.outs) for r in self.rows):
            raise ValueError("row/column count does not match the shape")

    def entry(self, i, o) -> Fraction:
        return self.rows[self.ins.index(tuple(i))][self.outs.index(tuple(o))]

    def row_sums(self) -> List[Fraction]:
        return [sum(r, Fraction(0)) for r in self.rows]

    def conservation_defect(self):
        for i, row in zip(self.ins, self.rows):
            for o, v in zip(self.outs, row):
                if v != 0 and sum(i) != sum(o):
                    return i, o, v
        return None

    def first_difference(self, other: "FusedMatrix"):
        for i, ra, rb in zip(self.ins, self.rows, other.rows):
            for o, a, b in zip(self.outs, ra, rb):
                if a != b:
                    return i, o, a, b
        return None

    def __eq__(self, other):
        if not isinstance(other, FusedMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def to_json(self) -> dict:
        return {
            "k": self.shape.k,
            "ℓ": self.shape.l,
            "q": None if self.q is None else fmt(self.q),
            "z": None if self.z is None else fmt(self.z),
            "ordering": ORDERING,
            "orientation": "row=input",
            "occupation": OCCUPATION,
            "row_labels": [list(i) for i in self.ins],
            "column_labels": [list(o) for o in self.outs],
            "rows": [[fmt(v) for v in r] for r in self.rows],
        }

    def to_csv_rows(self) -> List[List[str]]:
        head = ["in\\out"] + [f"({a},{b})" for a, b in self.outs]
        body = [[f"({a},{b})"] + [fmt(v) for v in r] for (a, b), r in zip(self.ins, self.rows)]
        return [head] + body


# -- direct reduction ----------------------------------------------------


def _require_n2(shape: BlockShape):
    if shape.N != 2:
        raise ValueError(f"fused reduction is implemented for N = 2 only, got N={shape.N}")


def _representative(space: TensorSpace, blocks: Tuple[int, int], counts) -> int:
    digits = []
    for size, c in zip(blocks, counts):
        digits += [0] * c + [1] * (size - c)
    return space.index(digits)


def symmetrized_basis(shape: BlockShape, q, side: str = "in"):
    """[(FusedIndex, sparse vector)] spanning the symmetrized block space.

    side='in' uses blocks (k, l) and P^(k,l); side='out' uses (l, k) and
    P^(l,k).  Each vector is the projector applied to the basis vector with
    the counted digit leftmost in every block.
    """
    _require_n2(shape)
    space = shape.space()
    if side == "in":
        blocks, P, idx = (shape.k, shape.l), projector(shape, "kl", space, q), input_indices(shape)
    elif side == "out":
        blocks, P, idx = (shape.l, shape.k), projector(shape, "lk", space, q), output_indices(shape)
    else:
        raise ValueError(f"side must be 'in' or 'out', got {side!r}")
    return [(i, P.apply({_representative(space, blocks, i): Fraction(1)})) for i in idx]


def solve_in_span(vectors: List[Dict[int, Fraction]], target: Dict[int, Fraction]):
    """Exact coefficients x with sum x_j v_j = target, plus the residual.

    Gaussian elimination over the rationals on the union of supports; the
    residual is empty exactly when target lies in the span.
    """
    coords = sorted(set(target).union(*[v.keys() for v in vectors]))
    n = len(vectors)
    mat = [[v.get(c, Fraction(0)) for v in vectors] + [target.get(c, Fraction(0))] for c in coords]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = mat[r][n]
    residual = dict(target)
    for xj, v in zip(x, vectors):
        for c, val in v.items():
            residual[c] = residual.get(c, 0) - xj * val
    residual = {c: v for c, v in residual.items() if v != 0}
    return x, residual


def reduce_operator(op: TensorOperator, shape: BlockShape, q, z=None) -> FusedMatrix:
    """Matrix of op between the symmetrized input and output bases."""
    _require_n2(shape)
    if op.space != shape.space():
        raise ValueError(f"operator space {op.space} does not match shape {shape}")
    ins = symmetrized_basis(shape, q, "in")
    outs = symmetrized_basis(shape, q, "out")
    by_total: Dict[int, List[int]] = {}
    for j, (o, _) in enumerate(outs):
        by_total.setdefault(sum(o), []).append(j)
    rows = []
    for i, v in ins:
        image = op.apply(v)
        row = [Fraction(0)] * len(outs)
        cand = by_total.get(sum(i), [])
        x, residual = solve_in_span([outs[j][1] for j in cand], image)
        if residual:
            raise ReductionError(i, residual)
        for j, xj in zip(cand, x):
            row[j] = xj
        rows.append(row)
    return FusedMatrix(shape, rows, as_q(q).q, None if z is None else exact(z))


# -- closed form ---------------------------------------------------------


def j_factor(m: int, kpp: int, lpp: int, delta: int, q) -> Fraction:
    """Crossing weight: of kpp particles crossing m sites holding lpp,
    delta end up on the far side of the crossing."""
    if not 0 <= delta <= kpp:
        return Fraction(0)
    t = as_q(q).t
    return (
        q_binomial(kpp, kpp - delta, q)
        * q_pochhammer(t ** (m - lpp), 1 / t, delta)
        * t ** ((m - lpp - delta) * (kpp - delta))
    )


def _braiding_entry(shape: BlockShape, p: int, q, i, o) -> Fraction:
    # the sum is natural in e_2-occupations; complement the e_1 labels
    k, l = shape.k, shape.l
    k1, l1 = k - i[0], l - i[1]
    first = l - o[0]
    t = as_q(q).t
    m = l - k + p
    bk, bl = q_binomial(k, k1, q), q_binomial(l, l1, q)
    total = Fraction(0)
    for kpp in range(max(0, k1 - (k - p)), min(p, k1) + 1):
        w1 = q_binomial(k - p, k1 - kpp, q) * q_binomial(p, kpp, q) * t ** (kpp * (k - p - k1 + kpp)) / bk
        for lpp in range(max(0, l1 - (k - p)), min(m, l1) + 1):
            w2 = q_binomial(k - p, l1 - lpp, q) * q_binomial(m, lpp, q) * t ** ((l1 - lpp) * (m - lpp)) / bl
            total += w1 * w2 * j_factor(m, kpp, lpp, first - k1 + kpp - lpp, q)
    return total


def closed_form_sigma_matrix(shape: BlockShape, p: int, q) -> FusedMatrix:
    """Closed-form occupation matrix of the partial braiding Sigma^(k,l;p)."""
    _require_n2(shape)
    ins, outs = input_indices(shape), output_indices(shape)
    rows = [
        [_braiding_entry(shape, p, q, i, o) if sum(i) == sum(o) else Fraction(0) for o in outs]
        for i in ins
    ]
    return FusedMatrix(shape, rows, as_q(q).q)


def closed_form_entry(shape: BlockShape, z, q, i, o) -> Fraction:
    _require_n2(shape)
    if sum(i) != sum(o):
        return Fraction(0)
    return sum(
        (baxter_coefficient(shape.k, shape.l, p, z, q) * _braiding_entry(shape, p, q, i, o) for p in range(shape.k + 1)),
        Fraction(0),
    )


def closed_form_matrix(shape: BlockShape, z, q) -> FusedMatrix:
    _require_n2(shape)
    q = as_q(q)
    z = exact(z)
    coeffs = [baxter_coefficient(shape.k, shape.l, p, z, q) for p in range(shape.k + 1)]
    ins, outs = input_indices(shape), output_indices(shape)
    rows = []
    for i in ins:
        row = []
        for o in outs:
            if sum(i) != sum(o):
                row.append(Fraction(0))
                continue
            row.append(sum((a * _braiding_entry(shape, p, q, i, o) for p, a in enumerate(coeffs)), Fraction(0)))
        rows.append(row)
    return FusedMatrix(shape, rows, q.q, z)
