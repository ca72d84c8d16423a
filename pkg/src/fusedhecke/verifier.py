"""Exact identity checks over parameter grids, with JSON-lines reports.

Every check evaluates both sides exactly and passes only on equality.
A vanishing guarded denominator is reported as ``error``, never ``fail``.
"""

from __future__ import annotations

import json
import logging
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import golden
from .errors import DegenerateError, fmt
from .fusedmatrix import (
    closed_form_matrix,
    reduce_operator,
)
from .heckerep import (
    BASE,
    BlockShape,
    baxterised_generator,
    fused_r_baxterised,
    fused_r_product,
    fused_spectral_word,
    generator,
    partial_braiding,
    product,
    projector,
    symmetrizer,
)
from .qseries import (
    QHahnParams,
    as_q,
    baxter_coefficient,
    baxter_coefficient_recursive,
    baxter_denominator,
    q_binomial,
    q_hahn_weight,
)
from .tensor import TensorOperator, TensorSpace

log = logging.getLogger(__name__)

SUBJECTS = (
    "hecke-relations",
    "braid-relations",
    "base-ybe",
    "fused-ybe",
    "projector-intertwine",
    "symmetrizer-triad",
    "symmetrizer-absorption",
    "theorem-equality",
    "closed-form-equality",
    "coefficient-recursion",
    "coefficient-sum",
    "pascal",
    "chu-vandermonde",
    "row-stochastic",
    "golden-9x9",
)


@dataclass
class CheckSpec:
    name: str
    subject: str
    params: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.subject not in SUBJECTS:
            raise ValueError(f"unknown subject {self.subject!r}")


@dataclass
class CheckResult:
    spec: CheckSpec
    status: str  # pass | fail | error
    witness: Optional[dict] = None
    detail: Optional[dict] = None
    wall_time: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "name": self.spec.name,
            "subject": self.spec.subject,
            "params": {k: fmt(v) if isinstance(v, Fraction) else v for k, v in self.spec.params.items()},
            "status": self.status,
            "witness": self.witness,
            "detail": self.detail,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out


@dataclass
class VerificationReport:
    results: List[CheckResult]
    meta: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.status == "pass" for r in self.results)

    def counts(self) -> Dict[str, int]:
        c = {"pass": 0, "fail": 0, "error": 0}
        for r in self.results:
            c[r.status] += 1
        return c

    def to_jsonl(self, timing: bool = False) -> str:
        return "".join(json.dumps(r.to_dict(timing), ensure_ascii=False, sort_keys=True) + "\n" for r in self.results)

    def summary(self) -> str:
        by = {}
        for r in self.results:
            row = by.setdefault(r.spec.subject, {"pass": 0, "fail": 0, "error": 0})
            row[r.status] += 1
        lines = [f"{'subject':<24}{'pass':>6}{'fail':>6}{'error':>7}"]
        for s in SUBJECTS:
            if s in by:
                lines.append(f"{s:<24}{by[s]['pass']:>6}{by[s]['fail']:>6}{by[s]['error']:>7}")
        c = self.counts()
        lines.append(f"{'total':<24}{c['pass']:>6}{c['fail']:>6}{c['error']:>7}")
        return "\n".join(lines)


class _Fail(Exception):
    def __init__(self, witness, detail=None):
        self.witness = witness
        self.detail = detail


def _scalar_eq(where, expected, actual):
    if expected != actual:
        raise _Fail({"location": where, "expected": fmt(expected), "actual": fmt(actual)})


def _op_witness(where, expected: TensorOperator, actual: TensorOperator):
    d = expected.first_difference(actual)
    if d is None:
        return None
    r, c, a, b = d
    sp = expected.space
    return {"location": f"{where}: input {sp.label(c)} -> output {sp.label(r)}", "expected": fmt(a), "actual": fmt(b)}


def _op_eq(where, expected, actual):
    w = _op_witness(where, expected, actual)
    if w is not None:
        raise _Fail(w)


def _stochastic(where, op: TensorOperator):
    d = op.ones_defect()
    if d is not None:
        raise _Fail({"location": f"{where}: outputs of {op.space.label(d[0])}", "expected": "1", "actual": fmt(d[1])})
    c = op.content_defect()
    if c is not None:
        r, col = c
        raise _Fail({"location": f"{where}: content {op.space.label(col)} -> {op.space.label(r)}", "expected": "0", "actual": fmt(op.entry(r, col))})


def _q(p):
    return as_q(p["q"])


# -- subjects ------------------------------------------------------------


def _hecke(p):
    q = _q(p)
    sp = TensorSpace(p.get("N", 2), p.get("n", 3))
    I = TensorOperator.identity(sp)
    for i in range(1, sp.n):
        s = generator(i, sp, q)
        _op_eq(f"sigma_{i}^2", s.scale(1 - q.t) + I.scale(q.t), product(s, s))


def _braid(p):
    q = _q(p)
    sp = TensorSpace(p.get("N", 2), p.get("n", 3))
    g = {i: generator(i, sp, q) for i in range(1, sp.n)}
    for i in range(1, sp.n - 1):
        _op_eq(f"braid at {i}", product(g[i], g[i + 1], g[i]), product(g[i + 1], g[i], g[i + 1]))
    for i in g:
        for j in g:
            if j > i + 1:
                _op_eq(f"commute {i},{j}", product(g[i], g[j]), product(g[j], g[i]))


def _ybe_sides(R1, R2, u, v):
    lhs = product(R1(u), R2(u * v), R1(v))
    return lhs, product(R2(v), R1(u * v), R2(u)), product(R2(v), R1(u * v), R2(v))


def _ybe_verdict(lhs, standard, alternate):
    w_std = _op_witness("standard right-hand side", standard, lhs)
    w_alt = _op_witness("right-hand side ending in (v)", alternate, lhs)
    orient = "standard" if w_std is None else "alternate" if w_alt is None else "none"
    detail = {"orientation": orient, "standard": w_std is None, "alternate": w_alt is None}
    if orient == "none":
        raise _Fail(w_std, detail)
    return detail


def _base_ybe(p):
    q = _q(p)
    N = p.get("N", 2)
    sp = TensorSpace(N, 3)
    u, v = Fraction(p["u"]), Fraction(p["v"])
    perturb = Fraction(p.get("perturb", 0))

    def R1(x):
        op = baxterised_generator(1, sp, q, x, BASE)
        if perturb and x == u:
            r, c, val = next(op.entries())
            op = op + TensorOperator.from_entries(sp, {(r, c): perturb})
        return op

    def R2(x):
        return baxterised_generator(2, sp, q, x, BASE)

    return _ybe_verdict(*_ybe_sides(R1, R2, u, v))


def _fused_ybe(p):
    q = _q(p)
    k = p["k"]
    shape = BlockShape(k, k, p.get("N", 2))
    sp = TensorSpace(shape.N, 3 * k)
    u, v = Fraction(p["u"]), Fraction(p["v"])
    cache = {}

    def R(off):
        def f(x):
            if (off, x) not in cache:
                cache[off, x] = fused_r_product(shape, x, sp, q, offset=off)
            return cache[off, x]

        return f

    return _ybe_verdict(*_ybe_sides(R(0), R(k), u, v))


def _intertwine(p):
    q = _q(p)
    shape = BlockShape(p["k"], p["l"])
    sp = shape.space()
    R = fused_r_product(shape, Fraction(p["u"]), sp, q)
    _op_eq("P^(k,l) R", R, product(projector(shape, "kl", sp, q), R))
    _op_eq("R P^(l,k)", R, product(R, projector(shape, "lk", sp, q)))


def _triad(p):
    q = _q(p)
    sp = TensorSpace(p.get("N", 2), p["n"])
    i, j = p["i"], p["j"]
    S = symmetrizer(i, j, sp, q, "product")
    for m in ("sum", "recursion"):
        _op_eq(f"S[{i},{j}] product vs {m}", S, symmetrizer(i, j, sp, q, m))
    _op_eq(f"S[{i},{j}]^2", S, product(S, S))


def _absorption(p):
    q = _q(p)
    sp = TensorSpace(p.get("N", 2), p["n"])
    i, j = p["i"], p["j"]
    S = symmetrizer(i, j, sp, q)
    for a in range(i, j):
        g = generator(a, sp, q)
        _op_eq(f"sigma_{a} S[{i},{j}]", S, product(g, S))
        _op_eq(f"S[{i},{j}] sigma_{a}", S, product(S, g))
    for i2 in range(i, j + 1):
        for j2 in range(i2, j + 1):
            T = symmetrizer(i2, j2, sp, q)
            _op_eq(f"S[{i},{j}] S[{i2},{j2}]", S, product(S, T))
            _op_eq(f"S[{i2},{j2}] S[{i},{j}]", S, product(T, S))


def _theorem(p):
    q = _q(p)
    shape = BlockShape(p["k"], p["l"])
    sp = shape.space()
    u = Fraction(p["u"])
    _op_eq("product vs baxterised", fused_r_product(shape, u, sp, q), fused_r_baxterised(shape, u, sp, q))


def _matrix_eq(where, expected, actual):
    d = expected.first_difference(actual)
    if d is not None:
        i, o, a, b = d
        raise _Fail({"location": f"{where}: entry {tuple(i)}->{tuple(o)}", "expected": fmt(a), "actual": fmt(b)})


def _closed_form(p):
    q = _q(p)
    shape = BlockShape(p["k"], p["l"])
    sp = shape.space()
    z = Fraction(p["z"])
    cf = closed_form_matrix(shape, z, q)
    _matrix_eq("closed form vs product route", reduce_operator(fused_r_product(shape, z, sp, q), shape, q, z), cf)
    _matrix_eq("closed form vs baxterised route", reduce_operator(fused_r_baxterised(shape, z, sp, q), shape, q, z), cf)


def _recursion(p):
    q, z, k, l = _q(p), Fraction(p["z"]), p["k"], p["l"]
    for j in range(k + 1):
        _scalar_eq(f"a_{j}", baxter_coefficient(k, l, j, z, q), baxter_coefficient_recursive(k, l, j, z, q))


def _coeff_sum(p):
    q, z, k, l = _q(p), Fraction(p["z"]), p["k"], p["l"]
    a = [baxter_coefficient(k, l, j, z, q) for j in range(k + 1)]
    _scalar_eq("sum of a_p", Fraction(1), sum(a))
    hahn = QHahnParams(q.t ** (-l), z * q.t ** (-l), q.q)
    phi = [q_hahn_weight(j, k, hahn) for j in range(k + 1)]
    _scalar_eq("sum of phi", Fraction(1), sum(phi))
    for j in range(k + 1):
        _scalar_eq(f"a_{j} vs phi({j}|{k})", a[j], phi[j])


def _pascal(p):
    q = _q(p)
    t = q.t
    for k in range(1, p.get("kmax", 8) + 1):
        for j in range(0, k + 1):
            b = q_binomial(k, j, q)
            _scalar_eq(f"first Pascal k={k} p={j}", b, q_binomial(k - 1, j - 1, q) * t ** (k - j) + q_binomial(k - 1, j, q))
            _scalar_eq(f"second Pascal k={k} p={j}", b, q_binomial(k - 1, j - 1, q) + q_binomial(k - 1, j, q) * t**j)


def _chu(p):
    q = _q(p)
    t = q.t
    m, n = p["m"], p["n"]
    for kk in range(m + n + 1):
        rhs = sum(
            (q_binomial(n, j, q) * q_binomial(m, kk - j, q) * t ** (j * (m - kk + j)) for j in range(kk + 1)),
            Fraction(0),
        )
        _scalar_eq(f"k={kk}", q_binomial(m + n, kk, q), rhs)


def _row_stochastic(p):
    q = _q(p)
    shape = BlockShape(p["k"], p["l"])
    sp = shape.space()
    z = Fraction(p["z"])
    for i in range(1, sp.n):
        _stochastic(f"sigma_{i}", generator(i, sp, q))
        _stochastic(f"R_{i}(z)", baxterised_generator(i, sp, q, z))
    _stochastic("P^(k,l)", projector(shape, "kl", sp, q))
    _stochastic("P^(l,k)", projector(shape, "lk", sp, q))
    for j in range(shape.k + 1):
        _stochastic(f"Sigma p={j}", partial_braiding(shape, j, sp, q))
    R = fused_r_product(shape, z, sp, q)
    _stochastic("R^(k,l)(z) product", R)
    _stochastic("R^(k,l)(z) baxterised", fused_r_baxterised(shape, z, sp, q))
    for M, where in ((reduce_operator(R, shape, q, z), "reduced"), (closed_form_matrix(shape, z, q), "closed form")):
        for i, s in zip(M.ins, M.row_sums()):
            _scalar_eq(f"{where} row {tuple(i)} sum", Fraction(1), s)
        c = M.conservation_defect()
        if c is not None:
            raise _Fail({"location": f"{where} entry {tuple(c[0])}->{tuple(c[1])}", "expected": "0", "actual": fmt(c[2])})


def _golden(p):
    q = _q(p)
    z = Fraction(p["z"])
    shape = BlockShape(2, 2)
    sp = shape.space()
    cases = [
        ("R^(2,2)(z)", fused_r_product(shape, z, sp, q), golden.reference_r22(q.q, z)),
        ("Sigma^(2,2;1)", partial_braiding(shape, 1, sp, q), golden.reference_sigma_221(q.q)),
        ("Sigma^(2,2;2)", partial_braiding(shape, 2, sp, q), golden.reference_sigma_222(q.q)),
    ]
    for where, op, ref in cases:
        M = reduce_operator(op, shape, q)
        for i, row, prow in zip(M.ins, M.rows, ref):
            for o, a, b in zip(M.outs, row, prow):
                if a != b:
                    raise _Fail({"location": f"{where} entry {tuple(i)}->{tuple(o)}", "expected": fmt(b), "actual": fmt(a)})


_RUNNERS: Dict[str, Callable] = {
    "hecke-relations": _hecke,
    "braid-relations": _braid,
    "base-ybe": _base_ybe,
    "fused-ybe": _fused_ybe,
    "projector-intertwine": _intertwine,
    "symmetrizer-triad": _triad,
    "symmetrizer-absorption": _absorption,
    "theorem-equality": _theorem,
    "closed-form-equality": _closed_form,
    "coefficient-recursion": _recursion,
    "coefficient-sum": _coeff_sum,
    "pascal": _pascal,
    "chu-vandermonde": _chu,
    "row-stochastic": _row_stochastic,
    "golden-9x9": _golden,
}


def run_check(spec: CheckSpec) -> CheckResult:
    t0 = time.perf_counter()
    params = {k: Fraction(v) if isinstance(v, str) else v for k, v in spec.params.items()}
    try:
        detail = _RUNNERS[spec.subject](params)
        status, witness = "pass", None
    except _Fail as f:
        status, witness, detail = "fail", f.witness, f.detail
    except DegenerateError as e:
        status, witness, detail = "error", None, {"factor": e.factor, "where": e.where}
    except (ValueError, ZeroDivisionError) as e:
        status, witness, detail = "error", None, {"message": str(e)}
    return CheckResult(spec, status, witness, detail, time.perf_counter() - t0)


def run_suite(grid: List[CheckSpec]) -> VerificationReport:
    return VerificationReport([run_check(s) for s in grid])


# -- default grid --------------------------------------------------------


def _rat(rng: random.Random, lo=-100, hi=100) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(lo, hi)
    return Fraction(num, rng.randint(1, 100))


def _q_draw(rng: random.Random) -> Fraction:
    den = rng.randint(2, 100)
    return Fraction(rng.randint(1, den - 1), den)


def _guard_ok(subject: str, p: dict) -> bool:
    """Cheap admissibility test on the denominators the check will divide by."""
    q = as_q(p["q"])
    try:
        if subject == "base-ybe":
            return all(x != 1 for x in (p["u"], p["v"], p["u"] * p["v"]))
        if subject == "fused-ybe":
            shape = BlockShape(p["k"], p["k"])
            xs = (p["u"], p["v"], p["u"] * p["v"])
            return all(arg != q.t for x in xs for _, arg in fused_spectral_word(shape, x, q))
        if subject in ("theorem-equality", "projector-intertwine", "closed-form-equality", "row-stochastic"):
            x = p.get("u", p.get("z"))
            shape = BlockShape(p["k"], p["l"])
            baxter_denominator(shape.k, shape.l, x, q)
            return all(arg != q.t for _, arg in fused_spectral_word(shape, x, q)) and x != q.t
        if subject in ("coefficient-recursion", "coefficient-sum"):
            k, l, z = p["k"], p["l"], p["z"]
            baxter_denominator(k, l, z, q)
            for j in range(k):
                if 1 - z * q.t ** (j - l) == 0:
                    return False
            for kk in range(1, k + 1):
                for ll in range(kk, l + 1):
                    baxter_coefficient_recursive(kk, ll, 0, z, q)
            return True
    except (DegenerateError, ZeroDivisionError):
        return False
    return True


class _Drawer:
    def __init__(self, seed: int):
        self.rng = random.Random(seed)
        self.redraws = 0

    def __call__(self, subject, fixed, spectral=("u",)):
        while True:
            p = dict(fixed, q=_q_draw(self.rng))
            for s in spectral:
                p[s] = _rat(self.rng)
            if _guard_ok(subject, p):
                return p
            self.redraws += 1
            log.info("redraw %s %s", subject, {k: fmt(v) if isinstance(v, Fraction) else v for k, v in p.items()})


def default_suite(seed: int = 20240601, quick: bool = False):
    """The full oracle battery; returns (specs, redraw_count).

    ``quick`` trims the random repetitions for smoke runs; every subject
    keeps at least one instance.
    """
    draw = _Drawer(seed)
    reps = (lambda n: 1) if quick else (lambda n: n)
    specs: List[CheckSpec] = []

    def add(subject, params):
        specs.append(CheckSpec(f"{subject}#{sum(s.subject == subject for s in specs)}", subject, params))

    for N in (2, 3):
        for n in (2, 3, 4):
            for _ in range(reps(10)):
                add("hecke-relations", draw("hecke-relations", {"N": N, "n": n}, ()))
        for n in (3, 4):
            for _ in range(reps(10)):
                add("braid-relations", draw("braid-relations", {"N": N, "n": n}, ()))
        for _ in range(reps(3)):
            add("base-ybe", draw("base-ybe", {"N": N}, ("u", "v")))
    for k in (1, 2):
        for _ in range(reps(3)):
            add("fused-ybe", draw("fused-ybe", {"k": k, "N": 2}, ("u", "v")))
    for k, l in ((1, 1), (1, 2), (2, 2)):
        for _ in range(reps(2)):
            add("projector-intertwine", draw("projector-intertwine", {"k": k, "l": l}))
    for N in (2, 3):
        for i, j in ((1, 2), (1, 3), (2, 4), (1, 4)):
            p = draw("symmetrizer-triad", {"N": N, "n": 4, "i": i, "j": j}, ())
            add("symmetrizer-triad", p)
            add("symmetrizer-absorption", dict(p))
    for k, l in ((1, 1), (1, 2), (2, 2), (2, 3), (3, 3)):
        for _ in range(reps(5)):
            add("theorem-equality", draw("theorem-equality", {"k": k, "l": l}))
    for k, l in ((1, 1), (1, 2), (2, 2), (2, 3)):
        for _ in range(reps(5)):
            add("closed-form-equality", draw("closed-form-equality", {"k": k, "l": l}, ("z",)))
        add("row-stochastic", draw("row-stochastic", {"k": k, "l": l}, ("z",)))
    for l in range(1, 7):
        for k in range(1, l + 1):
            for _ in range(reps(20)):
                p = draw("coefficient-recursion", {"k": k, "l": l}, ("z",))
                add("coefficient-recursion", p)
                add("coefficient-sum", dict(p))
    for _ in range(reps(10)):
        add("pascal", draw("pascal", {"kmax": 8}, ()))
    for m in range(6):
        for n in range(6):
            add("chu-vandermonde", draw("chu-vandermonde", {"m": m, "n": n}, ()))
    for q, z in ((Fraction(1, 2), Fraction(8)), (Fraction(1, 3), Fraction(81))):
        add("golden-9x9", {"q": q, "z": z})
    if draw.redraws:
        log.info("default suite: %d guard redraws", draw.redraws)
    return specs, draw.redraws
