"""Small shared helpers: deterministic rounding and shared numeric constants."""

import decimal

# A point is treated as metric-singular when EG - F^2 falls below this
# fraction of max(1, E*G).  On the families in this package that isolates
# exactly the u = 0 axis of the polar-form surfaces.
SINGULAR_REL_TOL = 1e-12


def round_half_away(x: float, ndigits: int = 0) -> float:
    """Round to `ndigits` decimals with ties going away from zero.

    Python's built-in round() uses banker's rounding; chain counts and
    2-decimal table cells need the away-from-zero convention, applied to the
    shortest decimal form of the value so 0.5-boundary literals behave as
    written.
    """
    quantum = decimal.Decimal(1).scaleb(-ndigits)
    d = decimal.Decimal(repr(float(x))).quantize(quantum, rounding=decimal.ROUND_HALF_UP)
    return float(d)
