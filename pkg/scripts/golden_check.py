"""Compare the reduced fused operators with the reference 9x9 matrices.

    python scripts/golden_check.py --q 1/2 --z 8
"""

import argparse
from fractions import Fraction

from fusedhecke import golden
from fusedhecke.errors import fmt
from fusedhecke.fusedmatrix import closed_form_matrix, reduce_operator
from fusedhecke.heckerep import BlockShape, fused_r_product, partial_braiding


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=Fraction, default=Fraction(1, 2))
    ap.add_argument("--z", type=Fraction, default=Fraction(8))
    a = ap.parse_args()
    shape = BlockShape(2, 2)
    sp = shape.space()
    cases = {
        "R(z) product": (reduce_operator(fused_r_product(shape, a.z, sp, a.q), shape, a.q).rows, golden.reference_r22(a.q, a.z)),
        "R(z) closed form": (closed_form_matrix(shape, a.z, a.q).rows, golden.reference_r22(a.q, a.z)),
        "Sigma p=1": (reduce_operator(partial_braiding(shape, 1, sp, a.q), shape, a.q).rows, golden.reference_sigma_221(a.q)),
        "Sigma p=2": (reduce_operator(partial_braiding(shape, 2, sp, a.q), shape, a.q).rows, golden.reference_sigma_222(a.q)),
    }
    for name, (ours, ref) in cases.items():
        diff = [(i, j) for i in range(9) for j in range(9) if ours[i][j] != ref[i][j]]
        print(f"{name:<18} {'exact match' if not diff else f'{len(diff)} entries differ, first {diff[0]}'}")
    print("R(z) rows:")
    for row in cases["R(z) closed form"][0]:
        print("  " + "  ".join(f"{fmt(v):>12}" for v in row))


if __name__ == "__main__":
    main()
