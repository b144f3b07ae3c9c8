"""Independent reference spectra: Bessel-zero well levels and a radial
shooting eigensolver.

These share no formulas with the closed-form or action modules, which is
the point: they validate the semiclassical results from the outside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConvergenceError
from .model import PowerLaw
from .special_functions import bessel_j_zeros

__all__ = ["ShootingConfig", "well_exact_spectrum", "shoot_eigenvalue"]


def well_exact_spectrum(gamma: float, a: float, count: int) -> list[float]:
    """Exact infinite-well levels in units hbar^2 pi^2 / (2 m a^2).

    The radial solution regular at the origin is proportional to
    sqrt(r) J_{gamma+1/2}(kr), so u(a) = 0 picks k a = j_{gamma+1/2, m}
    and E_n = (j_{gamma+1/2, n+1} / pi)^2 in well units.
    """
    if gamma < 0.0:
        raise ValueError(f"gamma must be >= 0, got {gamma}")
    if not a > 0.0:
        raise ValueError(f"well radius must be positive, got {a}")
    zeros = bessel_j_zeros(gamma + 0.5, count)
    return [(z / math.pi) ** 2 for z in zeros]


@dataclass(frozen=True)
class ShootingConfig:
    """Grid and search parameters for the shooting solver.

    r_min defaults to twice the step (close enough to the origin for the
    series start, far enough that the centrifugal term stays integrable
    by Numerov); r_max follows rmax_multiplier * turning point plus
    decay_lengths decay lengths, then grows until the forbidden-region
    decay exponent integral reaches ~18.5 (tail below 1e-8 of the
    interior amplitude).  Explicit r_min/r_max pins the grid, which the
    convergence tests use.
    """

    step: float = 0.01
    min_points: int = 2000
    max_points: int = 4_000_000
    r_min: float | None = None
    r_max: float | None = None
    rmax_multiplier: float = 2.0
    decay_lengths: float = 10.0
    energy_tol: float = 1e-9
    max_iterations: int = 260

    def __post_init__(self):
        if not (self.step > 0.0 and self.energy_tol > 0.0):
            raise ValueError("step and energy_tol must be positive")
        if self.min_points < 8 or self.max_iterations < 8:
            raise ValueError("min_points and max_iterations too small")


_DECAY_TARGET = 18.5  # -ln(1e-8)


def _grid(E: float, pot: PowerLaw, gamma: float, cfg: ShootingConfig):
    """Uniform grid (r0, h, n, im) reaching past the outer turning point."""
    lam, nu = pot.lam, pot.nu
    rc = (E / lam) ** (1.0 / nu)
    if cfg.r_max is not None:
        rmax = cfg.r_max
    else:
        if nu > 0.0:
            probe = cfg.rmax_multiplier * rc
            decay_len = 1.0 / math.sqrt(max(lam * probe**nu - E, 1e-12))
        else:
            decay_len = 1.0 / math.sqrt(-E)
        rmax = cfg.rmax_multiplier * rc + cfg.decay_lengths * decay_len
        # enlarge until the WKB decay exponent past rc is comfortably large
        for _ in range(60):
            rr = np.linspace(rc, rmax, 512)[1:]
            kap = np.sqrt(
                np.maximum(lam * rr**nu + gamma * (gamma + 1.0) / rr**2 - E, 0.0)
            )
            if float(np.trapezoid(kap, rr)) >= _DECAY_TARGET:
                break
            rmax += 5.0 * decay_len
    h = min(cfg.step, (rmax - (cfg.r_min or 0.0)) / cfg.min_points)
    # starting at 2h keeps the first-step Numerov parameter
    # h^2 gamma(gamma+1)/(12 r0^2) small; at h/2 it would be O(1) for any h
    r0 = cfg.r_min if cfg.r_min is not None else 2.0 * h
    n = int(math.ceil((rmax - r0) / h)) + 1
    if n > cfg.max_points:
        raise ConvergenceError(f"shooting grid would need {n} points (cap {cfg.max_points})")
    im = int(round((rc - r0) / h))
    im = max(2, min(n - 4, im))
    return r0, h, n, im


def _count(E: float, pot: PowerLaw, gamma: float, cfg: ShootingConfig) -> int:
    r0, h, n, _ = _grid(E, pot, gamma, cfg)
    return _kernels.numerov_count(E, pot.lam, pot.nu, gamma, r0, h, n)


def _match(E: float, pot: PowerLaw, gamma: float, cfg: ShootingConfig):
    r0, h, n, im = _grid(E, pot, gamma, cfg)
    return _kernels.numerov_match(E, pot.lam, pot.nu, gamma, r0, h, n, im)


def _search_window(pot: PowerLaw, gamma: float, n: int, cfg: ShootingConfig):
    """Energy window (lo, hi) with count(lo) <= n < count(hi)."""
    lam, nu = pot.lam, pot.nu
    scale = abs(lam) ** (2.0 / (nu + 2.0))
    if nu < 0.0:
        lo = -100.0 * scale
        for _ in range(8):
            if _count(lo, pot, gamma, cfg) == 0:
                break
            lo *= 10.0
        else:
            raise ConvergenceError("no lower window edge for nu < 0")
        hi = -1e-3 * scale
        for _ in range(60):
            if _count(hi, pot, gamma, cfg) >= n + 1:
                return lo, hi
            hi *= 0.25
        raise ConvergenceError("no upper window edge for nu < 0")
    lo = 1e-12 * scale
    radius = 1.0
    for _ in range(60):
        hi = lam * radius**nu
        if _count(hi, pot, gamma, cfg) >= n + 1:
            return lo, hi
        radius *= 2.0
    raise ConvergenceError("no upper window edge for nu > 0")


def shoot_eigenvalue(potential: PowerLaw, gamma: float, n: int, cfg: ShootingConfig | None = None) -> float:
    """n-th eigenvalue (n = interior node count) of the reduced radial
    equation u'' + (E - lam r**nu - gamma(gamma+1)/r^2) u = 0 with
    u(0) = 0 and a decaying tail.

    Fixed-step Numerov integrates outward from r_min with the r**(gamma+1)
    series start and inward from r_max with a decaying seed.  Bisection on
    the Sturm node count isolates the level, then bisection on the sign of
    the matching discriminant at the outer turning point polishes it; the
    converged solution's node count is verified to equal n.
    """
    if not isinstance(potential, PowerLaw):
        raise ValueError("shooting solver handles power-law potentials")
    if gamma < 0.0:
        raise ValueError(f"gamma must be >= 0, got {gamma}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    cfg = cfg or ShootingConfig()

    lo, hi = _search_window(potential, gamma, n, cfg)
    iters = 0
    # phase 1: node-count bisection until the window isolates level n
    while iters < cfg.max_iterations:
        iters += 1
        mid = 0.5 * (lo + hi)
        if _count(mid, potential, gamma, cfg) <= n:
            lo = mid
        else:
            hi = mid
        if hi - lo <= max(cfg.energy_tol, 1e-13 * abs(mid)):
            return _verified(0.5 * (lo + hi), potential, gamma, n, cfg)
        if (
            hi - lo <= 1e-2 * max(abs(lo), abs(hi))
            and _count(lo, potential, gamma, cfg) == n
            and _count(hi, potential, gamma, cfg) == n + 1
        ):
            break
    # phase 2: discriminant-sign bisection inside the isolated window
    d_lo, _ = _match(lo, potential, gamma, cfg)
    d_hi, _ = _match(hi, potential, gamma, cfg)
    if (d_lo < 0.0) == (d_hi < 0.0):
        # discriminant did not straddle (match-point pole); fall back to nodes
        while hi - lo > cfg.energy_tol and iters < cfg.max_iterations:
            iters += 1
            mid = 0.5 * (lo + hi)
            if _count(mid, potential, gamma, cfg) <= n:
                lo = mid
            else:
                hi = mid
        if hi - lo > cfg.energy_tol:
            raise ConvergenceError("shooting bisection exhausted its iteration budget")
        return _verified(0.5 * (lo + hi), potential, gamma, n, cfg)
    while hi - lo > cfg.energy_tol and iters < cfg.max_iterations:
        iters += 1
        mid = 0.5 * (lo + hi)
        d_mid, _ = _match(mid, potential, gamma, cfg)
        if (d_mid < 0.0) == (d_lo < 0.0):
            lo, d_lo = mid, d_mid
        else:
            hi = mid
    if hi - lo > cfg.energy_tol:
        raise ConvergenceError("shooting bisection exhausted its iteration budget")
    return _verified(0.5 * (lo + hi), potential, gamma, n, cfg)


def _verified(E: float, pot: PowerLaw, gamma: float, n: int, cfg: ShootingConfig) -> float:
    _, nodes = _match(E, pot, gamma, cfg)
    if nodes != n:
        raise ConvergenceError(
            f"converged solution has {nodes} nodes, expected {n} (E={E!r})"
        )
    return E
