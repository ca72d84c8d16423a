"""Reference 9x9 matrices for k = l = 2, entered as symbolic expressions.

Each entry is evaluated directly from its closed expression in q (and z),
independently of every construction in the package; these are the golden
reference for the fused reduction.  Rows and columns run over
(0,0),(0,1),(0,2),(1,0),...,(2,2).
"""

from fractions import Fraction


def _zeros():
    return [[Fraction(0)] * 9 for _ in range(9)]


def reference_sigma_221(q):
    q = Fraction(q)
    q2, q4, q6 = q**2, q**4, q**6
    m = _zeros()
    m[0][0] = Fraction(1)
    m[1][1] = (-q4 + q2 + 1) / (q2 + 1)
    m[1][3] = q4 / (q2 + 1)
    m[2][2] = 1 - q2
    m[2][4] = q2
    m[3][1] = 1 / (q2 + 1)
    m[3][3] = q2 / (q2 + 1)
    m[4][2] = 1 / (q2 + 1) ** 2
    m[4][4] = 1 - (q6 + 1) / (q2 + 1) ** 2
    m[4][6] = q6 / (q2 + 1) ** 2
    m[5][5] = (-q4 + q2 + 1) / (q2 + 1)
    m[5][7] = q4 / (q2 + 1)
    m[6][4] = Fraction(1)
    m[7][5] = 1 / (q2 + 1)
    m[7][7] = q2 / (q2 + 1)
    m[8][8] = Fraction(1)
    return m


def reference_sigma_222(q):
    q = Fraction(q)
    q2, q4, q8 = q**2, q**4, q**8
    m = _zeros()
    m[0][0] = Fraction(1)
    m[1][1] = 1 - q4
    m[1][3] = q4
    m[2][2] = (q4 - q2 - 1) * q2 + 1
    m[2][4] = (1 - q2) * (q**3 + q) ** 2
    m[2][6] = q8
    m[3][1] = Fraction(1)
    m[4][2] = 1 - q2
    m[4][4] = q2
    m[5][5] = 1 - q4
    m[5][7] = q4
    m[6][2] = Fraction(1)
    m[7][5] = Fraction(1)
    m[8][8] = Fraction(1)
    return m


def reference_r22(q, z):
    q, z = Fraction(q), Fraction(z)
    q2, q4, q6 = q**2, q**4, q**6
    d = (q2 - z) * (q4 - z)
    m = _zeros()
    m[0][0] = Fraction(1)
    m[1][1] = (q4 - 1) * z / (q4 - z)
    m[1][3] = -q4 * (z - 1) / (q4 - z)
    m[2][2] = (q2 - 1) ** 2 * (q2 + 1) * z**2 / d
    m[2][4] = -(q2 - 1) * (q**3 + q) ** 2 * (z - 1) * z / d
    m[2][6] = q6 * (z - 1) * (q2 * z - 1) / d
    m[3][1] = (z - 1) / (z - q4)
    m[3][3] = (q4 - 1) / (q4 - z)
    m[4][2] = -(q2 - 1) * (z - 1) * z / d
    m[4][4] = (q6 * z + q4 * (1 - 2 * z) + q2 * (z - 2) * z + z) / d
    m[4][6] = -q4 * (q2 - 1) * (z - 1) / d
    m[5][5] = (q4 - 1) * z / (q4 - z)
    m[5][7] = -q4 * (z - 1) / (q4 - z)
    m[6][2] = (z - 1) * (q2 * z - 1) / (q2 * d)
    m[6][4] = (q2 + 1) * (1 - q4) * (z - 1) / ((q4 - z) * (q4 - q2 * z))
    m[6][6] = (q2 - 1) ** 2 * (q2 + 1) / d
    m[7][5] = (z - 1) / (z - q4)
    m[7][7] = (q4 - 1) / (q4 - z)
    m[8][8] = Fraction(1)
    return m
