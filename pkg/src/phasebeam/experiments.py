"""Parameter sweeps of the output entanglement over (r2, phi, 2s) grids.

All sweeps use the concave level table F(n) = n(2s+1-n)/(2s) (the kappa-neg
family), fix m = 0 (the entropy does not depend on m) and evaluate through
the partial-trace route.  Grid cells are independent; they may be computed
by a process pool, and a serial flag forces a plain loop for bit-for-bit
reproducibility.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .algebra import Family, StructureSpec, build_structure
from .entropy import linear_entropy
from .splitter import SplitterParams, reduced_density, split_phase_state

# Below this many cells a pool is pure overhead.
_PARALLEL_THRESHOLD = 256


@dataclass(frozen=True)
class Axis:
    """One sweep axis: a name and its (ordered) grid values."""

    name: str
    values: tuple[float, ...]


@dataclass(frozen=True, eq=False)
class SweepTable:
    """Entropy values on the product grid of the axes, flattened row-major."""

    axes: tuple[Axis, ...]
    values: np.ndarray = field(repr=False)
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        expected = 1
        for axis in self.axes:
            if len(axis.values) == 0:
                raise ValueError(f"axis {axis.name!r} is empty")
            expected *= len(axis.values)
        values = np.ascontiguousarray(np.asarray(self.values, dtype=float))
        if values.shape != (expected,):
            raise ValueError(
                f"values must have length {expected}, got {values.shape}")
        if values.size and (np.min(values) < 0.0 or np.max(values) > 1.0):
            raise ValueError("entropy values must lie in [0, 1]")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(axis.values) for axis in self.axes)

    def grid(self) -> np.ndarray:
        """Values reshaped to the axes' product shape."""
        return self.values.reshape(self.shape)


@lru_cache(maxsize=128)
def _cached_spec(family: Family, two_s: int, kappa: float | None) -> StructureSpec:
    return build_structure(family, two_s, kappa)


def entropy_point(two_s: int, m: int, phi: float, r2: float,
                  family: Family = Family.KAPPA_NEG,
                  kappa: float | None = None) -> float:
    """Oracle-route entropy at a single parameter point."""
    spec = _cached_spec(family, two_s, kappa)
    rho = reduced_density(split_phase_state(spec, m, phi, SplitterParams(r2)))
    return linear_entropy(rho).value


def _entropy_cell(args: tuple) -> float:
    two_s, m, phi, r2, family, kappa = args
    return entropy_point(two_s, m, phi, r2, family, kappa)


def _resolve_workers(max_workers: int | None) -> int:
    available = os.cpu_count() or 1
    if max_workers is None:
        return available
    return max(1, min(available, max_workers))


def evaluate_cells(cells: list[tuple], *, serial: bool = False,
                   max_workers: int | None = None) -> list[float]:
    """Map the entropy evaluator over parameter cells, preserving order."""
    workers = 1 if serial else _resolve_workers(max_workers)
    if workers <= 1 or len(cells) < _PARALLEL_THRESHOLD:
        return [_entropy_cell(c) for c in cells]
    chunk = max(1, len(cells) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_entropy_cell, cells, chunksize=chunk))


def _as_float_tuple(values) -> tuple[float, ...]:
    return tuple(float(v) for v in values)


def sweep_r2_phi(two_s: int, phi_grid, r2_grid, *,
                 family: Family = Family.KAPPA_NEG,
                 kappa: float | None = None, m: int = 0,
                 serial: bool = False,
                 max_workers: int | None = None) -> SweepTable:
    """Entropy surface over a (phi, r2) grid at fixed dimension; phi-major."""
    phis = _as_float_tuple(phi_grid)
    r2s = _as_float_tuple(r2_grid)
    if not phis or not r2s:
        raise ValueError("grids must be nonempty")
    if any(not 0.0 <= r2 <= 1.0 for r2 in r2s):
        raise ValueError("r2 grid values must lie in [0, 1]")
    cells = [(two_s, m, phi, r2, family, kappa) for phi in phis for r2 in r2s]
    values = evaluate_cells(cells, serial=serial, max_workers=max_workers)
    return SweepTable(
        axes=(Axis("phi", phis), Axis("r2", r2s)),
        values=np.array(values),
        meta={"family": family.value, "two_s": two_s, "m": m, "kappa": kappa,
              "method": "oracle"},
    )


def sweep_phi_balanced(two_s_list, phi_grid, *,
                       family: Family = Family.KAPPA_NEG,
                       kappa: float | None = None, m: int = 0,
                       serial: bool = False,
                       max_workers: int | None = None) -> SweepTable:
    """Entropy against phi at the balanced splitter, one row per 2s."""
    dims = tuple(int(v) for v in two_s_list)
    phis = _as_float_tuple(phi_grid)
    if not dims or not phis:
        raise ValueError("grids must be nonempty")
    cells = [(two_s, m, phi, 0.5, family, kappa)
             for two_s in dims for phi in phis]
    values = evaluate_cells(cells, serial=serial, max_workers=max_workers)
    return SweepTable(
        axes=(Axis("two_s", _as_float_tuple(dims)), Axis("phi", phis)),
        values=np.array(values),
        meta={"family": family.value, "m": m, "kappa": kappa, "r2": 0.5,
              "method": "oracle"},
    )


def sweep_s_balanced(two_s_max: int = 40,
                     phi_list=(0.0, np.pi / 2, np.pi, 3 * np.pi / 2), *,
                     family: Family = Family.KAPPA_NEG,
                     kappa: float | None = None, m: int = 0,
                     serial: bool = False,
                     max_workers: int | None = None) -> SweepTable:
    """Entropy against 2s = 1..two_s_max at the balanced splitter, per phi."""
    if two_s_max < 1:
        raise ValueError(f"two_s_max must be >= 1, got {two_s_max}")
    phis = _as_float_tuple(phi_list)
    if not phis:
        raise ValueError("phi list must be nonempty")
    dims = tuple(range(1, two_s_max + 1))
    cells = [(two_s, m, phi, 0.5, family, kappa)
             for phi in phis for two_s in dims]
    values = evaluate_cells(cells, serial=serial, max_workers=max_workers)
    return SweepTable(
        axes=(Axis("phi", phis), Axis("two_s", _as_float_tuple(dims))),
        values=np.array(values),
        meta={"family": family.value, "m": m, "kappa": kappa, "r2": 0.5,
              "method": "oracle"},
    )
