"""Sparse exact operators on (C^N)^{⊗n}.

Basis vectors e_{i1}⊗...⊗e_{in} are indexed big-endian in base N (site 1
is the most significant digit); digits are 0-based, so digit 0 is e_1.

Storage is column action: ``op.entry(r, c)`` is the coefficient of basis
vector r in the image of basis vector c.  Columns are kept as hash maps,
so a product only visits nonzeros; every operator built here conserves
content, which keeps each column inside one content sector.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple

from .errors import fmt

MAX_DIM = 2**31


@dataclass(frozen=True)
class TensorSpace:
    N: int
    n: int

    def __post_init__(self):
        if self.N < 1 or self.n < 1:
            raise ValueError("need N >= 1 and n >= 1")
        if self.N**self.n > MAX_DIM:
            raise ValueError(f"dimension {self.N}**{self.n} exceeds 2**31")

    @property
    def dim(self) -> int:
        return self.N**self.n

    def digits(self, index: int) -> Tuple[int, ...]:
        out = []
        for _ in range(self.n):
            index, d = divmod(index, self.N)
            out.append(d)
        return tuple(reversed(out))

    def index(self, digits) -> int:
        if len(digits) != self.n:
            raise ValueError(f"expected {self.n} digits, got {len(digits)}")
        idx = 0
        for d in digits:
            if not 0 <= d < self.N:
                raise ValueError(f"digit {d} out of range [0, {self.N})")
            idx = idx * self.N + d
        return idx

    def content(self, index: int) -> Tuple[int, ...]:
        """Multiplicity of each digit; the conserved sector label."""
        c = Counter(self.digits(index))
        return tuple(c.get(d, 0) for d in range(self.N))

    def label(self, index: int) -> str:
        return "⊗".join(f"e{d + 1}" for d in self.digits(index))


Column = Dict[int, Fraction]


class TensorOperator:
    __slots__ = ("space", "_cols")

    def __init__(self, space: TensorSpace, cols: Dict[int, Column]):
        self.space = space
        self._cols = {}
        for c, col in cols.items():
            kept = {r: v for r, v in col.items() if v != 0}
            if kept:
                self._cols[c] = kept

    @classmethod
    def identity(cls, space: TensorSpace) -> "TensorOperator":
        return cls.scalar(space, 1)

    @classmethod
    def scalar(cls, space: TensorSpace, value) -> "TensorOperator":
        value = Fraction(value)
        return cls(space, {i: {i: value} for i in range(space.dim)})

    @classmethod
    def zero(cls, space: TensorSpace) -> "TensorOperator":
        return cls(space, {})

    @classmethod
    def from_entries(cls, space: TensorSpace, entries) -> "TensorOperator":
        cols: Dict[int, Column] = {}
        for (r, c), v in entries.items():
            cols.setdefault(c, {})[r] = Fraction(v)
        return cls(space, cols)

    def entry(self, row: int, col: int) -> Fraction:
        return self._cols.get(col, {}).get(row, Fraction(0))

    def column(self, col: int) -> Column:
        return dict(self._cols.get(col, {}))

    def entries(self) -> Iterator[Tuple[int, int, Fraction]]:
        """Nonzero (row, col, value) in internal orientation, sorted."""
        for c in sorted(self._cols):
            col = self._cols[c]
            for r in sorted(col):
                yield r, c, col[r]

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self._cols.values())

    def _check(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        if other.space != self.space:
            raise ValueError(f"space mismatch: {self.space} vs {other.space}")
        return None

    def __matmul__(self, other: "TensorOperator") -> "TensorOperator":
        """Composition: (A @ B) applies B first, then A."""
        self._check(other)
        out: Dict[int, Column] = {}
        for c, bcol in other._cols.items():
            acc: Column = {}
            for k, bv in bcol.items():
                acol = self._cols.get(k)
                if acol is None:
                    continue
                for r, av in acol.items():
                    acc[r] = acc.get(r, 0) + av * bv
            out[c] = acc
        return TensorOperator(self.space, out)

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        self._check(other)
        out = {c: dict(col) for c, col in self._cols.items()}
        for c, col in other._cols.items():
            acc = out.setdefault(c, {})
            for r, v in col.items():
                acc[r] = acc.get(r, 0) + v
        return TensorOperator(self.space, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        return self + (-other)

    def scale(self, value) -> "TensorOperator":
        value = Fraction(value)
        return TensorOperator(
            self.space, {c: {r: v * value for r, v in col.items()} for c, col in self._cols.items()}
        )

    def __rmul__(self, value):
        if isinstance(value, (int, Fraction)):
            return self.scale(value)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return self.space == other.space and self._cols == other._cols

    __hash__ = None

    def transpose(self) -> "TensorOperator":
        out: Dict[int, Column] = {}
        for c, col in self._cols.items():
            for r, v in col.items():
                out.setdefault(r, {})[c] = v
        return TensorOperator(self.space, out)

    def apply(self, vec: Column) -> Column:
        out: Column = {}
        for c, x in vec.items():
            for r, v in self._cols.get(c, {}).items():
                out[r] = out.get(r, 0) + v * x
        return {r: v for r, v in out.items() if v != 0}

    def first_difference(self, other: "TensorOperator") -> Optional[Tuple[int, int, Fraction, Fraction]]:
        """(row, col, self_entry, other_entry) of the first mismatch, or None."""
        self._check(other)
        keys = set()
        for op in (self, other):
            for c, col in op._cols.items():
                keys.update((c, r) for r in col)
        for c, r in sorted(keys):
            a, b = self.entry(r, c), other.entry(r, c)
            if a != b:
                return r, c, a, b
        return None

    def column_sums(self) -> Dict[int, Fraction]:
        return {c: sum(self._cols.get(c, {}).values(), Fraction(0)) for c in range(self.space.dim)}

    def ones_defect(self) -> Optional[Tuple[int, Fraction]]:
        """First basis input whose image coefficients do not sum to 1.

        Equivalent to the transpose fixing the all-ones vector.
        """
        for c, s in self.column_sums().items():
            if s != 1:
                return c, s
        return None

    def is_stochastic(self) -> bool:
        return self.ones_defect() is None

    def content_defect(self) -> Optional[Tuple[int, int]]:
        sp = self.space
        for r, c, _ in self.entries():
            if sp.content(r) != sp.content(c):
                return r, c
        return None

    def conserves_content(self) -> bool:
        return self.content_defect() is None

    def to_json(self) -> dict:
        """Row-per-input dump: each entry is [input, output, value]."""
        entries = sorted((c, r, fmt(v)) for r, c, v in self.entries())
        return {
            "N": self.space.N,
            "n": self.space.n,
            "orientation": "paper-row",
            "entries": [list(e) for e in entries],
        }

    def __repr__(self):
        return f"TensorOperator(N={self.space.N}, n={self.space.n}, nnz={self.nnz})"
