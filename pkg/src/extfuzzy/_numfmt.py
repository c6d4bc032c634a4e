import math


def format_real(x: float) -> str:
    """Shortest round-trip decimal, without a trailing ``.0`` for integral values."""
    x = float(x)
    if math.isfinite(x) and x.is_integer() and abs(x) < 1e16:
        return str(int(x)) if x != 0 else "0"
    return repr(x)
