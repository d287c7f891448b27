"""Small numerical helpers: compensated summation, exact quarter turns,
log-space binomial square roots."""

from math import exp, lgamma

# Powers of the imaginary unit, exact to the bit.
_QUARTER_TURNS = (1 + 0j, 1j, -1 + 0j, -1j)


class KahanSum:
    """Compensated running sum.

    Keeps a carry term so that long mixed-sign series lose far less
    precision than a bare ``+=`` accumulator.
    """

    __slots__ = ("total", "carry")

    def __init__(self) -> None:
        self.total = 0.0
        self.carry = 0.0

    def add(self, value: float) -> None:
        value += self.carry
        previous = self.total
        self.total = previous + value
        self.carry = value - (self.total - previous)


def ipow(k: int) -> complex:
    """i**k as an exact unit complex number (no rounding for any k)."""
    return _QUARTER_TURNS[k & 3]


def log_factorials(n_max: int) -> list[float]:
    """Table of ln(k!) for k = 0..n_max."""
    return [lgamma(k + 1) for k in range(n_max + 1)]


def sqrt_binomial(n: int, p: int) -> float:
    """sqrt(n! / (p! (n-p)!)) evaluated in log space.

    Stays accurate (relative error well under 1e-13) far beyond the point
    where the factorials themselves overflow intermediate integers cast to
    float.
    """
    if p < 0 or n < 0 or p > n:
        raise ValueError(f"binomial indices out of range: n={n}, p={p}")
    return exp(0.5 * (lgamma(n + 1) - lgamma(p + 1) - lgamma(n - p + 1)))
