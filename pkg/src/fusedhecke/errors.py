from fractions import Fraction


class DegenerateError(ArithmeticError):
    """A guarded denominator vanished at the requested parameters.

    ``factor`` is a human-readable name of the vanishing expression,
    ``where`` locates it (an index or spectral argument).
    """

    def __init__(self, factor, where=None):
        self.factor = factor
        self.where = where
        msg = f"vanishing denominator {factor}"
        if where is not None:
            msg += f" at {where}"
        super().__init__(msg)


class ReductionError(ValueError):
    """An operator image fell outside the symmetrized output span."""

    def __init__(self, index, residual):
        self.index = index
        self.residual = residual
        super().__init__(f"image of basis vector {index} is outside the span; residual {residual}")


class StochasticRegimeError(ValueError):
    """A weight table has negative entries; ``entries`` lists them all."""

    def __init__(self, entries):
        self.entries = entries
        shown = ", ".join(f"{tuple(i)}->{tuple(o)}: {fmt(v)}" for i, o, v in entries[:8])
        more = "" if len(entries) <= 8 else f" (+{len(entries) - 8} more)"
        super().__init__(f"negative weights: {shown}{more}")


def fmt(x):
    """Serialize an exact scalar as 'p/q' (or 'p' for integers)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
