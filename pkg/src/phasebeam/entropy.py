"""Linear entropy S = 1 - Tr(rho^2) of the beam splitter output.

Two routes are provided.  The oracle route squares an explicit reduced
density matrix.  The closed-form route evaluates a quadruple sum over
(n, n', l, l') whose terms carry the phase
    angle = [F(n+l) + F(n'+l') - F(n'+l) - F(n+l')] * phi
and whose magnitude involves ratios of factorials, computed in log space.
The angle is antisymmetric under l <-> l' and under n <-> n' separately,
and invariant under swapping both pairs at once, so the sum is real and can
be folded onto the half-domain n <= n', l <= l' with cosine terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, exp, sin

import numpy as np

from .algebra import StructureSpec
from .errors import IndexOutOfRangeError, NumericalConsistencyError
from .numerics import KahanSum, log_factorials
from .splitter import (
    SplitterParams,
    reduced_density,
    split_phase_state,
    validate_density,
)

ORACLE = "oracle"
CLOSED_FORM = "closed"

# Excursions beyond [0, 1] by at most this much are roundoff and get
# clamped; anything larger is a genuine inconsistency and is refused.
CLAMP_TOL = 1e-10


@dataclass(frozen=True)
class EntropyValue:
    """A linear entropy together with the route that produced it."""

    value: float
    method: str
    dim: int

    def __post_init__(self) -> None:
        bound = 1.0 - 1.0 / self.dim + 1e-12
        if not 0.0 <= self.value <= bound:
            raise NumericalConsistencyError(
                f"S = {self.value} outside [0, 1 - 1/d] for d = {self.dim}")


@dataclass(frozen=True)
class MIndependenceReport:
    """Entropy spread over all phase-state labels m at fixed (phi, r2)."""

    value: float
    spread: float
    values: tuple[float, ...]


def _clamp_unit_interval(s: float) -> float:
    if -CLAMP_TOL <= s < 0.0:
        return 0.0
    if 1.0 < s <= 1.0 + CLAMP_TOL:
        return 1.0
    if s < -CLAMP_TOL or s > 1.0 + CLAMP_TOL:
        raise NumericalConsistencyError(f"entropy {s} outside [0, 1]")
    return s


def linear_entropy(rho: np.ndarray, *, validate: bool = True) -> EntropyValue:
    """S = 1 - sum |rho[a, b]|^2 for a Hermitian rho (oracle route)."""
    rho = np.asarray(rho, dtype=complex)
    if validate:
        validate_density(rho)
    purity = float(np.vdot(rho, rho).real)
    return EntropyValue(_clamp_unit_interval(1.0 - purity), ORACLE, rho.shape[0])


def phase_term(spec: StructureSpec, n: int, n2: int, l: int, l2: int,
               phi: float) -> float:
    """Angle [F(n+l) + F(n2+l2) - F(n2+l) - F(n+l2)] * phi of one term.

    Vanishes whenever n == n2 or l == l2; changes sign under swapping
    l <-> l2 (and likewise under n <-> n2), and is invariant under swapping
    both pairs simultaneously.
    """
    top = spec.two_s + 1
    for idx in (n, n2, l, l2):
        if idx < 0:
            raise IndexOutOfRangeError(f"negative index {idx}")
    for idx in (n + l, n2 + l2, n2 + l, n + l2):
        if idx > top:
            raise IndexOutOfRangeError(f"level index {idx} exceeds 2s+1 = {top}")
    levels = spec.levels
    return float(levels[n + l] + levels[n2 + l2]
                 - levels[n2 + l] - levels[n + l2]) * phi


def linear_entropy_closed(spec: StructureSpec, phi: float,
                          params: SplitterParams, *,
                          folded: bool = True) -> EntropyValue:
    """Closed-form linear entropy of the split phase state.

    The result carries no dependence on the label m.  With folded=True
    (the default) the sum runs over the half-domain with cosine terms;
    folded=False keeps the full complex sum, whose imaginary part must
    come out <= 1e-12, as a cross-check path.
    """
    two_s = spec.two_s
    d = spec.dim
    levels = spec.levels
    t2 = params.t2
    r2 = params.r2
    lgf = log_factorials(two_s)
    inv_d2 = 1.0 / (d * d)

    if folded:
        acc = KahanSum()
        for n in range(d):
            for n2 in range(n, d):
                lmax = two_s - n2
                w_n = 1.0 if n2 == n else 2.0
                for l in range(lmax + 1):
                    for l2 in range(l, lmax + 1):
                        mag = inv_d2 * exp(
                            0.5 * (lgf[n + l] + lgf[n2 + l2]
                                   + lgf[n + l2] + lgf[n2 + l])
                            - lgf[n] - lgf[n2] - lgf[l] - lgf[l2]
                        ) * t2 ** (n + n2) * r2 ** (l + l2)
                        if n == n2 or l == l2:
                            acc.add(w_n * (1.0 if l2 == l else 2.0) * mag)
                        else:
                            angle = (levels[n + l] + levels[n2 + l2]
                                     - levels[n2 + l] - levels[n + l2]) * phi
                            acc.add(w_n * 2.0 * mag * cos(angle))
        total = acc.total
    else:
        acc_re = KahanSum()
        acc_im = KahanSum()
        for n in range(d):
            for n2 in range(d):
                lmax = min(two_s - n, two_s - n2)
                for l in range(lmax + 1):
                    for l2 in range(lmax + 1):
                        mag = inv_d2 * exp(
                            0.5 * (lgf[n + l] + lgf[n2 + l2]
                                   + lgf[n + l2] + lgf[n2 + l])
                            - lgf[n] - lgf[n2] - lgf[l] - lgf[l2]
                        ) * t2 ** (n + n2) * r2 ** (l + l2)
                        angle = (levels[n + l] + levels[n2 + l2]
                                 - levels[n2 + l] - levels[n + l2]) * phi
                        acc_re.add(mag * cos(angle))
                        acc_im.add(-mag * sin(angle))
        if abs(acc_im.total) > 1e-12:
            raise NumericalConsistencyError(
                f"imaginary residual {acc_im.total} in the unfolded sum")
        total = acc_re.total

    return EntropyValue(_clamp_unit_interval(1.0 - total), CLOSED_FORM, d)


def m_independence_report(spec: StructureSpec, phi: float,
                          params: SplitterParams, *,
                          tol: float = 1e-12) -> MIndependenceReport:
    """Oracle entropy for every m; the spread must not exceed tol."""
    values = []
    for m in range(spec.dim):
        rho = reduced_density(split_phase_state(spec, m, phi, params))
        values.append(linear_entropy(rho).value)
    spread = max(values) - min(values)
    if spread > tol:
        raise NumericalConsistencyError(
            f"entropy varies with m by {spread} (tolerance {tol})")
    return MIndependenceReport(values[0], spread, tuple(values))
