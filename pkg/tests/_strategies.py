from fractions import Fraction

from hypothesis import strategies as st


def rationals(lo=-100, hi=100, max_den=100, nonzero=False):
    num = st.integers(lo, hi)
    if nonzero:
        num = num.filter(bool)
    return st.builds(Fraction, num, st.integers(1, max_den))


def unit_q(max_den=60):
    """q strictly inside (0, 1)."""
    return st.integers(2, max_den).flatmap(lambda d: st.builds(Fraction, st.integers(1, d - 1), st.just(d)))
