"""Command-line front end.

Exit codes: 0 success, 1 an identity check failed, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from .errors import DegenerateError, ReductionError, StochasticRegimeError, fmt
from .fusedmatrix import closed_form_matrix, reduce_operator
from .heckerep import BlockShape, fused_r_baxterised, fused_r_product, partial_braiding
from .qseries import baxter_coefficients
from .verifier import CheckSpec, default_suite, run_suite
from .vertexsim import sample_grid, weight_table

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    """'p' or 'p/q' only; decimals and floats are refused."""
    if not _RATIONAL.fullmatch(text.strip()):
        raise argparse.ArgumentTypeError(f"not an exact rational 'p/q': {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from None


def int_list(text: str):
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _dump_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True) + "\n"


def _dump_csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _shape(a) -> BlockShape:
    return BlockShape(a.k, a.l, a.N)


def _need(a, *names):
    missing = [n for n in names if getattr(a, n) is None]
    if missing:
        raise UsageError(f"{a.cmd} needs " + ", ".join("--" + n for n in missing))


def _emit_matrix(M, a) -> str:
    if a.format == "csv":
        return _dump_csv(M.to_csv_rows())
    return _dump_json(M.to_json())


def cmd_coeffs(a):
    _need(a, "q", "z")
    c = baxter_coefficients(a.k, a.l, a.z, a.q)
    if a.format == "csv":
        return _dump_csv([["p", "a_p"]] + [[p, fmt(v)] for p, v in enumerate(c.values)])
    return _dump_json({"k": a.k, "ℓ": a.l, "q": fmt(a.q), "z": fmt(a.z), "values": [fmt(v) for v in c.values]})


def cmd_sigma(a):
    _need(a, "q", "p")
    shape = _shape(a)
    op = partial_braiding(shape, a.p, shape.space(), a.q)
    if a.format == "operator":
        return _dump_json(op.to_json())
    return _emit_matrix(reduce_operator(op, shape, a.q), a)


def cmd_rmatrix(a):
    _need(a, "q", "z")
    shape = _shape(a)
    if a.method == "closed-form":
        if a.format == "operator":
            raise UsageError("--format operator needs --method product or baxterised")
        return _emit_matrix(closed_form_matrix(shape, a.z, a.q), a)
    build = fused_r_product if a.method == "product" else fused_r_baxterised
    op = build(shape, a.z, shape.space(), a.q)
    if a.format == "operator":
        return _dump_json(op.to_json())
    return _emit_matrix(reduce_operator(op, shape, a.q, a.z), a)


def cmd_weights(a):
    _need(a, "q", "z")
    T = weight_table(_shape(a), a.q, a.z)
    if a.format == "json":
        return _dump_json(
            {
                "k": a.k,
                "ℓ": a.l,
                "q": fmt(T.q),
                "z": fmt(T.z),
                "rows": [[list(i), [[list(o), fmt(w)] for o, w in T.rows[i]]] for i in sorted(T.rows)],
            }
        )
    return _dump_csv(T.csv_rows())


def _boundary(vals, size, name):
    if vals is None:
        return [0] * size
    if len(vals) == 1:
        return vals * size
    if len(vals) != size:
        raise UsageError(f"--{name} needs 1 or {size} values, got {len(vals)}")
    return vals


def cmd_sample(a):
    _need(a, "q", "z")
    T = weight_table(_shape(a), a.q, a.z)
    g = sample_grid(
        T, a.width, a.height, _boundary(a.left, a.height, "left"), _boundary(a.bottom, a.width, "bottom"), a.seed
    )
    if a.format == "csv":
        return _dump_csv(g.edge_rows())
    return _dump_json(g.to_json())


def cmd_verify(a):
    if a.specs:
        with open(a.specs, encoding="utf-8") as fh:
            raw = [json.loads(line) for line in fh if line.strip()]
        specs = [CheckSpec(d["name"], d["subject"], d.get("params", {})) for d in raw]
    else:
        specs, redraws = default_suite(a.seed if a.seed is not None else 20240601, quick=a.quick)
        print(f"default suite: {len(specs)} checks, {redraws} guard redraws", file=sys.stderr)
    report = run_suite(specs)
    print(report.summary(), file=sys.stderr)
    counts = report.counts()
    a._status = 1 if counts["fail"] else 2 if counts["error"] else 0
    return report.to_jsonl(timing=a.timing)


COMMANDS = {
    "coeffs": cmd_coeffs,
    "sigma": cmd_sigma,
    "rmatrix": cmd_rmatrix,
    "weights": cmd_weights,
    "verify": cmd_verify,
    "sample": cmd_sample,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fusedhecke", description="Exact fused stochastic R-matrices and vertex weights.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, formats=("json", "csv"), default="json"):
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--l", type=int, default=1)
        p.add_argument("--N", type=int, default=2)
        p.add_argument("--q", type=rational, help="deformation parameter, e.g. 1/2")
        p.add_argument("--z", "--u", dest="z", type=rational, help="spectral parameter, e.g. 8")
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", help="write to this file instead of stdout")

    common(sub.add_parser("coeffs", help="coefficients a_p, e.g. --k 1 --l 1 --q 1/2 --z 2"))
    p = sub.add_parser("sigma", help="reduced partial braiding, e.g. --k 2 --l 2 --p 1 --q 1/2")
    common(p, ("json", "csv", "operator"))
    p.add_argument("--p", type=int)
    p = sub.add_parser("rmatrix", help="reduced fused R-matrix, e.g. --k 2 --l 2 --q 1/2 --z 8")
    common(p, ("json", "csv", "operator"))
    p.add_argument("--method", choices=("product", "baxterised", "closed-form"), default="closed-form")
    common(sub.add_parser("weights", help="vertex weight table, e.g. --k 1 --l 1 --q 1/2 --z 2"), ("csv", "json"), "csv")
    p = sub.add_parser("sample", help="sample a lattice, e.g. --q 1/2 --z 2 --width 20 --height 20 --left 1")
    common(p)
    p.add_argument("--width", type=int, default=10)
    p.add_argument("--height", type=int, default=10)
    p.add_argument("--left", type=int_list, help="left boundary: one value or one per row")
    p.add_argument("--bottom", type=int_list, help="bottom boundary: one value or one per column")
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("verify", help="run the exact identity battery")
    p.add_argument("--specs", help="JSON-lines file of {name, subject, params}; default suite otherwise")
    p.add_argument("--seed", type=int)
    p.add_argument("--quick", action="store_true", help="one random instance per grid point")
    p.add_argument("--timing", action="store_true", help="include wall times (breaks byte-identity)")
    p.add_argument("--out")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    a._status = 0
    try:
        text = COMMANDS[a.cmd](a)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except (DegenerateError, StochasticRegimeError, ReductionError, ValueError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if a.out:
        with open(a.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return a._status


if __name__ == "__main__":
    sys.exit(main())
