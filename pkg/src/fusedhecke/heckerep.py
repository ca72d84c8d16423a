"""Stochastic (and base) Hecke generators on (C^N)^{⊗n} and the fused
R-matrix built from them.

Words in the algebra are multiplied with :func:`product`, whose leftmost
factor acts first on a basis input.  In column-action storage that is the
reversed matrix product, and it is the order under which the symmetrized
input basis of a fused operator sits on the P^(k,l) side and the output
basis on the P^(l,k) side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .errors import DegenerateError, fmt
from .qseries import QParams, as_q, baxter_coefficient, exact, q_factorial, q_integer
from .tensor import TensorOperator, TensorSpace

STOCHASTIC = "stochastic"
BASE = "base"


@dataclass(frozen=True)
class BlockShape:
    k: int
    l: int
    N: int = 2

    def __post_init__(self):
        if not 1 <= self.k <= self.l:
            raise ValueError(f"need 1 <= k <= l, got k={self.k}, l={self.l}")
        if self.N < 2:
            raise ValueError("need N >= 2")

    @property
    def n(self) -> int:
        return self.k + self.l

    def space(self) -> TensorSpace:
        return TensorSpace(self.N, self.n)


def _two_site(N: int, local) -> TensorOperator:
    sp = TensorSpace(N, 2)
    cols = {}
    for i in range(N):
        for j in range(N):
            cols[sp.index((i, j))] = {sp.index(rc): v for rc, v in local(i, j)}
    return TensorOperator(sp, cols)


def two_site_stochastic(q, N: int) -> TensorOperator:
    """Two-site stochastic R: every image is a probability vector.

    e_i⊗e_i is fixed; for i < j, e_i⊗e_j swaps with probability 1;
    for i > j, e_i⊗e_j swaps with probability q^2 and stays otherwise.
    """
    t = as_q(q).t

    def local(i, j):
        if i == j:
            return [((i, i), Fraction(1))]
        if i < j:
            return [((j, i), Fraction(1))]
        return [((j, i), t), ((i, j), 1 - t)]

    return _two_site(N, local)


def two_site_base(q, N: int) -> TensorOperator:
    q = as_q(q).q

    def local(i, j):
        if i == j:
            return [((i, i), q)]
        if i < j:
            return [((j, i), Fraction(1)), ((i, j), q - 1 / q)]
        return [((j, i), Fraction(1))]

    return _two_site(N, local)


def embed(local: TensorOperator, i: int, space: TensorSpace) -> TensorOperator:
    """Act with a two-site operator on sites (i, i+1), identity elsewhere."""
    if not 1 <= i <= space.n - 1:
        raise ValueError(f"site index {i} out of range 1..{space.n - 1}")
    lsp = local.space
    cols = {}
    for c in range(space.dim):
        d = list(space.digits(c))
        a, b = d[i - 1], d[i]
        col = {}
        for r2, v in local.column(lsp.index((a, b))).items():
            ra, rb = lsp.digits(r2)
            d[i - 1], d[i] = ra, rb
            col[space.index(d)] = v
        d[i - 1], d[i] = a, b
        cols[c] = col
    return TensorOperator(space, cols)


@lru_cache(maxsize=512)
def _generator(i: int, space: TensorSpace, q: QParams, flavor: str) -> TensorOperator:
    if flavor == STOCHASTIC:
        local = two_site_stochastic(q, space.N)
    elif flavor == BASE:
        local = two_site_base(q, space.N)
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    return embed(local, i, space)


def generator(i: int, space: TensorSpace, q, flavor: str = STOCHASTIC) -> TensorOperator:
    return _generator(i, space, as_q(q), flavor)


def product(*factors: TensorOperator) -> TensorOperator:
    """Algebra product of a word; the leftmost factor acts first."""
    if not factors:
        raise ValueError("empty product needs a space; use TensorOperator.identity")
    out = factors[0]
    for f in factors[1:]:
        out = f @ out
    return out


def stochastic_coefficients(q, u) -> Tuple[Fraction, Fraction]:
    """(coefficient of the generator, coefficient of Id) in R(u); they sum to 1."""
    t = as_q(q).t
    u = exact(u)
    den = t - u
    if den == 0:
        raise DegenerateError("q^2 - u", f"u={fmt(u)}")
    return (1 - u) / den, (t - 1) / den


def base_coefficients(q, u) -> Tuple[Fraction, Fraction]:
    q = as_q(q).q
    u = exact(u)
    if u == 1:
        raise DegenerateError("1 - u", "u=1")
    return Fraction(1), -(q - 1 / q) / (1 - u)


def baxterised_generator(i: int, space: TensorSpace, q, u, flavor: str = STOCHASTIC) -> TensorOperator:
    q = as_q(q)
    if flavor == STOCHASTIC:
        a, b = stochastic_coefficients(q, u)
    elif flavor == BASE:
        a, b = base_coefficients(q, u)
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    return generator(i, space, q, flavor).scale(a) + TensorOperator.scalar(space, b)


# -- symmetrizers --------------------------------------------------------


def _check_range(i, j, space):
    if i > j:
        raise ValueError(f"empty symmetrizer range [{i}, {j}]")
    if i < 1 or j > space.n:
        raise ValueError(f"range [{i}, {j}] outside sites 1..{space.n}")


def _symmetrizer_product(i, j, space, q):
    factors = []
    for a in range(i, j):
        for b in range(a, i - 1, -1):
            factors.append(baxterised_generator(b, space, q, q.t ** (-(b - i + 1))))
    return product(*factors)


def _symmetrizer_sum(i, j, space, q):
    m = j - i + 1
    t = q.t
    gens = {a: generator(i + a, space, q) for a in range(m - 1)}
    total = TensorOperator.zero(space)
    # breadth-first over the Cayley graph so each sigma_w costs one product
    layer = {tuple(range(m)): TensorOperator.identity(space)}
    length = 0
    seen = set(layer)
    while layer:
        for op in layer.values():
            total = total + op.scale(t ** (-length))
        nxt = {}
        for w, op in layer.items():
            for a in range(m - 1):
                if w[a] < w[a + 1]:
                    v = list(w)
                    v[a], v[a + 1] = v[a + 1], v[a]
                    v = tuple(v)
                    if v not in seen:
                        seen.add(v)
                        nxt[v] = product(op, gens[a])
        layer = nxt
        length += 1
    return total.scale(t ** (m * (m - 1) // 2) / q_factorial(m, q))


def _symmetrizer_recursion(i, j, space, q):
    t = q.t
    S = TensorOperator.identity(space)
    for top in range(i, j):
        # S currently equals S_[i, top]; build S_[i, top+1]
        acc = TensorOperator.zero(space)
        for a in range(i, top + 2):
            word = [generator(b, space, q) for b in range(a, top + 1)] + [S]
            acc = acc + product(*word).scale(t ** (a - i))
        S = acc.scale(1 / q_integer(top - i + 2, q))
    return S


_METHODS = {
    "product": _symmetrizer_product,
    "sum": _symmetrizer_sum,
    "recursion": _symmetrizer_recursion,
}


@lru_cache(maxsize=256)
def _symmetrizer(i, j, space, q, method):
    if i == j:
        return TensorOperator.identity(space)
    return _METHODS[method](i, j, space, q)


def symmetrizer(i: int, j: int, space: TensorSpace, q, method: str = "product") -> TensorOperator:
    """Stochastic q-symmetrizer on sites i..j (inclusive)."""
    _check_range(i, j, space)
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(_METHODS)}")
    return _symmetrizer(i, j, space, as_q(q), method)


def projector(shape: BlockShape, orientation: str, space: TensorSpace, q, offset: int = 0) -> TensorOperator:
    """P^(k,l) ('kl') or P^(l,k) ('lk') on sites offset+1 .. offset+k+l."""
    if offset + shape.n > space.n or space.N != shape.N:
        raise ValueError(f"shape {shape} does not fit {space} at offset {offset}")
    if orientation == "kl":
        first = shape.k
    elif orientation == "lk":
        first = shape.l
    else:
        raise ValueError(f"orientation must be 'kl' or 'lk', got {orientation!r}")
    s = offset + 1
    return product(
        symmetrizer(s, s + first - 1, space, q),
        symmetrizer(s + first, s + shape.n - 1, space, q),
    )


def crossing_word(shape: BlockShape, p: int, offset: int = 0):
    """Generator indices of (σ_k⋯σ_{l+p-1})(σ_{k-1}⋯σ_{l+p-2})⋯(σ_{k-p+1}⋯σ_l)."""
    k, l = shape.k, shape.l
    word = []
    for r in range(p):
        word.extend(offset + b for b in range(k - r, l + p - r))
    return word


def partial_braiding(shape: BlockShape, p: int, space: TensorSpace, q, offset: int = 0) -> TensorOperator:
    if not 0 <= p <= shape.k:
        raise ValueError(f"need 0 <= p <= k={shape.k}, got p={p}")
    q = as_q(q)
    word = [generator(b, space, q) for b in crossing_word(shape, p, offset)]
    return product(
        projector(shape, "kl", space, q, offset),
        *word,
        projector(shape, "lk", space, q, offset),
    )


def fused_spectral_word(shape: BlockShape, u, q):
    """(site, spectral argument) pairs of the ordered R-product, left to right."""
    t = as_q(q).t
    u = exact(u)
    out = []
    for a in range(shape.k, 0, -1):
        for j in range(1, shape.l + 1):
            out.append((a + j - 1, u * t ** (a - j)))
    return out


def fused_r_product(shape: BlockShape, u, space: TensorSpace, q, offset: int = 0) -> TensorOperator:
    """R^(k,l)(u) as the projected ordered product of two-site R(u)'s."""
    q = as_q(q)
    factors = []
    for site, arg in fused_spectral_word(shape, u, q):
        try:
            factors.append(baxterised_generator(offset + site, space, q, arg))
        except DegenerateError as exc:
            raise DegenerateError(exc.factor, f"R_{site}({fmt(arg)})") from None
    return product(
        projector(shape, "kl", space, q, offset),
        *factors,
        projector(shape, "lk", space, q, offset),
    )


def fused_r_baxterised(shape: BlockShape, u, space: TensorSpace, q, offset: int = 0) -> TensorOperator:
    """R^(k,l)(u) as the a_p-weighted sum of partial braidings."""
    q = as_q(q)
    total = TensorOperator.zero(space)
    for p in range(shape.k + 1):
        a = baxter_coefficient(shape.k, shape.l, p, u, q)
        total = total + partial_braiding(shape, p, space, q, offset).scale(a)
    return total
