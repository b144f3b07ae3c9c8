"""Closed-form semiclassical energy spectra.

All energies are produced in reduced units (hbar = 2m = 1) unless the
docstring says otherwise; UnitScale factors convert for display.  The two
master formulas are

    E = -|lam|**(2/(nu+2)) * [ 2|nu| sqrt(pi) (n + (2g+nu+3)/(2nu+4))
          * G(1 - 1/nu)/G(-1/nu - 1/2) ]**(2nu/(nu+2))      (lam, E < 0, -2 < nu < 0)

    E = lam**(2/(nu+2)) * [ 2 nu sqrt(pi) (n + g/2 + 3/4)
          * G(1/nu + 3/2)/G(1/nu) ]**(2nu/(nu+2))           (lam, nu, E > 0)

with g the effective angular momentum q + |k + mu0|.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .model import InfiniteWell, PotentialSpec, UnitScale, effective_gamma
from .special_functions import gamma as gamma_fn

__all__ = [
    "EnergyLevel",
    "SpectrumTable",
    "METHOD_CLOSED_FORM",
    "METHOD_ACTION_ROOT",
    "METHOD_EXACT_ORACLE",
    "energy_negative_power",
    "energy_positive_power",
    "energy_coulomb",
    "energy_oscillator",
    "energy_well_semiclassical",
    "closed_form_energy",
    "spectrum_table",
]

METHOD_CLOSED_FORM = "closed-form"
METHOD_ACTION_ROOT = "action-root"
METHOD_EXACT_ORACLE = "exact-oracle"

REDUCED = UnitScale("reduced", 1.0)


def _negative_power_smooth(n: float, gamma: float, lam: float, nu: float) -> float:
    # formula body without the integer-index check; n may sit slightly
    # below zero when the analysis module differentiates at n = 0
    if not (lam < 0.0 and -2.0 < nu < 0.0):
        raise ValueError(f"negative-power branch needs lam < 0, -2 < nu < 0; got {lam}, {nu}")
    shift = (2.0 * gamma + nu + 3.0) / (2.0 * nu + 4.0)
    if not n + shift > 0.0:
        raise ValueError(f"non-positive level index n + {shift}")
    bracket = (
        2.0 * abs(nu) * math.sqrt(math.pi) * (n + shift)
        * gamma_fn(1.0 - 1.0 / nu) / gamma_fn(-1.0 / nu - 0.5)
    )
    return -abs(lam) ** (2.0 / (nu + 2.0)) * bracket ** (2.0 * nu / (nu + 2.0))


def _positive_power_smooth(n: float, gamma: float, lam: float, nu: float) -> float:
    if not (lam > 0.0 and nu > 0.0):
        raise ValueError(f"positive-power branch needs lam > 0, nu > 0; got {lam}, {nu}")
    if not n + 0.5 * gamma + 0.75 > 0.0:
        raise ValueError("non-positive level index")
    bracket = (
        2.0 * nu * math.sqrt(math.pi) * (n + 0.5 * gamma + 0.75)
        * gamma_fn(1.0 / nu + 1.5) / gamma_fn(1.0 / nu)
    )
    return lam ** (2.0 / (nu + 2.0)) * bracket ** (2.0 * nu / (nu + 2.0))


def energy_negative_power(n: int, gamma: float, lam: float, nu: float) -> float:
    """Level n of V = lam r**nu for lam < 0, -2 < nu < 0 (reduced units, E < 0).

    gamma is normally >= 0; negative algebraic values produced by the
    duality transform are accepted as long as the level index stays
    positive, since the formula only sees n + (2 gamma + nu + 3)/(2 nu + 4).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _negative_power_smooth(n, gamma, lam, nu)


def energy_positive_power(n: int, gamma: float, lam: float, nu: float) -> float:
    """Level n of V = lam r**nu for lam, nu > 0 (reduced units, E > 0)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _positive_power_smooth(n, gamma, lam, nu)


def energy_coulomb(n: int, q: int, k: int, mu0: float) -> float:
    """Coulomb levels -1/(4 (n + q + |k+mu0| + 1)^2), reduced units with
    lam = -1 (equivalently -(m c^2 a^2 / 2) / N^2 in display units)."""
    if n < 0 or q < 0:
        raise ValueError(f"n and q must be >= 0, got {n}, {q}")
    big_n = n + q + abs(k + mu0) + 1.0
    return -1.0 / (4.0 * big_n * big_n)


def energy_oscillator(n: int, gamma: float) -> float:
    """Oscillator levels 2n + gamma + 3/2 in units of hbar*omega."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return 2.0 * n + gamma + 1.5


def energy_well_semiclassical(n: int, gamma: float, a: float) -> float:
    """Semiclassical well levels (n + gamma/2 + 1)^2 in units
    hbar^2 pi^2 / (2 m a^2)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not a > 0.0:
        raise ValueError(f"well radius must be positive, got {a}")
    return (n + 0.5 * gamma + 1.0) ** 2


def closed_form_energy(potential: PotentialSpec, n: int, gamma: float) -> float:
    """Closed-form level for any supported potential, in reduced units."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _energy_smooth(potential, n, gamma)


def _energy_smooth(potential: PotentialSpec, n: float, gamma: float) -> float:
    # continuous-n dispatcher used by the derivative machinery
    if isinstance(potential, InfiniteWell):
        return (n + 0.5 * gamma + 1.0) ** 2 * math.pi**2 / potential.a**2
    if potential.lam < 0.0:
        return _negative_power_smooth(n, gamma, potential.lam, potential.nu)
    return _positive_power_smooth(n, gamma, potential.lam, potential.nu)


@dataclass(frozen=True)
class EnergyLevel:
    """One bound-state energy with its quantum numbers and provenance."""

    n: int
    q: int
    k: int
    gamma: float
    energy: float
    method: str = METHOD_CLOSED_FORM


@dataclass(frozen=True)
class SpectrumTable:
    """Grid of levels over quantum-number ranges, sorted by (n, q, k)."""

    potential: PotentialSpec
    mu0: float
    unit: UnitScale
    method: str
    rows: tuple[EnergyLevel, ...]


def spectrum_table(
    potential: PotentialSpec,
    mu0: float,
    n_max: int,
    q_max: int,
    k_range: tuple[int, int],
    unit: UnitScale | None = None,
    workers: int | None = None,
) -> SpectrumTable:
    """Closed-form levels for every (n, q, k) in the requested ranges.

    Rows are emitted in lexicographic (n, q, k) order.  With workers > 1
    the grid is evaluated on a thread pool; assembly order is still
    deterministic.
    """
    k_lo, k_hi = k_range
    if n_max < 0 or q_max < 0 or k_lo > k_hi:
        raise ValueError(f"empty grid: n_max={n_max}, q_max={q_max}, k_range={k_range}")
    unit = unit or REDUCED

    keys = [
        (n, q, k)
        for n in range(n_max + 1)
        for q in range(q_max + 1)
        for k in range(k_lo, k_hi + 1)
    ]

    def level(key: tuple[int, int, int]) -> EnergyLevel:
        n, q, k = key
        g = effective_gamma(q, k, mu0)
        e = closed_form_energy(potential, n, g) * unit.factor
        return EnergyLevel(n, q, k, g, e)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(level, keys))
    else:
        rows = tuple(level(key) for key in keys)
    return SpectrumTable(potential, mu0, unit, METHOD_CLOSED_FORM, rows)
