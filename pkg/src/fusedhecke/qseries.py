"""Exact q-combinatorics in base t = q**2.

q-integers, factorials, binomials, Pochhammer symbols, q-Hahn weights and
the Baxterisation coefficients a_p^(k,l)(z), the latter both in closed form
and through an independent recursion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Union

from .errors import DegenerateError, fmt

Scalar = Union[Fraction, int]


def exact(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings; reject floats."""
    if isinstance(x, float):
        raise TypeError("floating-point input is not exact; pass a Fraction or 'p/q'")
    return Fraction(x)


@dataclass(frozen=True)
class QParams:
    q: Fraction
    t: Fraction = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        q = exact(self.q)
        if q == 0:
            raise ValueError("q must be nonzero")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "t", q * q)

    def require_stochastic(self):
        if not 0 < self.q < 1:
            raise ValueError(f"stochastic regime needs 0 < q < 1, got q={fmt(self.q)}")


def as_q(q) -> QParams:
    return q if isinstance(q, QParams) else QParams(exact(q))


@dataclass(frozen=True)
class QHahnParams:
    mu: Fraction
    nu: Fraction
    q: Fraction


@dataclass(frozen=True)
class BaxterCoefficients:
    k: int
    l: int
    z: Fraction
    values: List[Fraction]

    def __post_init__(self):
        assert len(self.values) == self.k + 1


def q_integer(n: int, q) -> Fraction:
    t = as_q(q).t
    total, term = Fraction(0), Fraction(1)
    for _ in range(n):
        total += term
        term *= t
    return total


def q_factorial(n: int, q) -> Fraction:
    q = as_q(q)
    out = Fraction(1)
    for j in range(1, n + 1):
        out *= q_integer(j, q)
    return out


def q_binomial(n: int, m: int, q) -> Fraction:
    if m < 0 or m > n:
        return Fraction(0)
    q = as_q(q)
    # q-integers in base q**2 are positive for rational q, so no guard needed
    return q_factorial(n, q) / (q_factorial(m, q) * q_factorial(n - m, q))


def q_pochhammer(a, base, n: int) -> Fraction:
    """(a; base)_n = prod_{j<n} (1 - a*base**j)."""
    a, base = exact(a), exact(base)
    out, power = Fraction(1), Fraction(1)
    for _ in range(n):
        out *= 1 - a * power
        power *= base
    return out


def q_hahn_weight(p: int, k: int, params: QHahnParams) -> Fraction:
    """phi(p|k) with parameters (mu, nu, q); sums to 1 over p = 0..k."""
    if not 0 <= p <= k:
        raise ValueError(f"need 0 <= p <= k, got p={p}, k={k}")
    mu, nu = exact(params.mu), exact(params.nu)
    q = as_q(params.q)
    t = q.t
    den = Fraction(1)
    for j in range(k):
        f = 1 - nu * t**j
        if f == 0:
            raise DegenerateError("1 - nu*q^(2j)", f"j={j}")
        den *= f
    # mu^p (nu/mu; t)_p written as prod (mu - nu t^j): total at mu = 0
    head = Fraction(1)
    for j in range(p):
        head *= mu - nu * t**j
    return q_binomial(k, p, q) * head * q_pochhammer(mu, t, k - p) / den


def _check_kl(k, l, p=None):
    if not 1 <= k <= l:
        raise ValueError(f"need 1 <= k <= l, got k={k}, l={l}")
    if p is not None and not 0 <= p <= k:
        raise ValueError(f"need 0 <= p <= k, got p={p}")


def baxter_denominator(k: int, l: int, z, q) -> Fraction:
    q = as_q(q)
    z = exact(z)
    t = q.t
    out = Fraction(1)
    for j in range(k):
        f = t**l - z * t**j
        if f == 0:
            raise DegenerateError("q^(2l) - z*q^(2j)", f"j={j}")
        out *= f
    return out


def baxter_coefficient(k: int, l: int, p: int, z, q) -> Fraction:
    """Closed-form a_p^(k,l)(z)."""
    _check_kl(k, l, p)
    q = as_q(q)
    z = exact(z)
    t = q.t
    den = baxter_denominator(k, l, z, q)
    num = Fraction(1)
    for j in range(k - p):
        num *= t**l - t**j
    for j in range(p):
        num *= 1 - z * t**j
    return q_binomial(k, p, q) * num / den


def baxter_coefficients(k: int, l: int, z, q) -> BaxterCoefficients:
    z = exact(z)
    return BaxterCoefficients(k, l, z, [baxter_coefficient(k, l, p, z, q) for p in range(k + 1)])


def _guarded(num, den, name, where):
    if den == 0:
        raise DegenerateError(name, where)
    return num / den


@lru_cache(maxsize=4096)
def _recursive(k: int, l: int, p: int, z: Fraction, q: Fraction) -> Fraction:
    t = q * q
    if k == 1:
        if l == 1:
            num = t - 1 if p == 0 else 1 - z
            return _guarded(num, t - z, "q^2 - z", "k=l=1")
        w = z / t ** (l - 1)
        a0 = _recursive(1, l - 1, 0, z, q)
        a1 = _recursive(1, l - 1, 1, z, q)
        if p == 0:
            return a0 + a1 * _guarded(t - 1, t - w, "q^2 - z*q^(-2(l-1))", f"l={l}")
        return a1 * _guarded(1 - w, t - w, "q^2 - z*q^(-2(l-1))", f"l={l}")

    zs = z * t
    b0 = _recursive(1, l, 0, z, q)
    b1 = _recursive(1, l, 1, z, q)
    ql = q_integer(l, q)
    if p == 0:
        return t ** (k - 1) * q_integer(l - k + 1, q) / ql * _recursive(k - 1, l, 0, zs, q) * b0
    if p == k:
        return _recursive(k - 1, l, k - 1, zs, q) * b1
    left = _recursive(k - 1, l, p - 1, zs, q) * (b1 + q_integer(k - p, q) / ql * b0)
    right = _recursive(k - 1, l, p, zs, q) * t ** (k - p - 1) * q_integer(l + p - k + 1, q) / ql * b0
    return left + right


def baxter_coefficient_recursive(k: int, l: int, p: int, z, q) -> Fraction:
    """a_p^(k,l)(z) from the base case k = l = 1 and the four recursions.

    Used as the independent oracle for :func:`baxter_coefficient`: the
    recursion grows l at k = 1 with the spectral shift z*q^(-2(l-1)), then
    grows k with the inner block evaluated at z*q^2.
    """
    _check_kl(k, l, p)
    return _recursive(k, l, p, exact(z), as_q(q).q)
