"""Spectral tendency analysis: derivatives in (n, q, |k+mu0|), curvature
classification, derivative ratios and the flux-slope effect.

Quantum numbers are promoted to continuous reals here (and only here) so
the closed forms can be differentiated; |k + mu0| is treated as a single
variable, which sidesteps the kink of the absolute value at k + mu0 = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .closed_form import _energy_smooth
from .model import InfiniteWell, PotentialSpec, PowerLaw

__all__ = [
    "BENDS_DOWN",
    "LINEAR",
    "BENDS_UP",
    "TendencyReport",
    "spectral_derivative",
    "tendency_classify",
    "derivative_ratios",
    "flux_slope_effect",
    "build_tendency_report",
]

BENDS_DOWN = "bends-down"
LINEAR = "linear"
BENDS_UP = "bends-up"

_FD_STEP = 1e-4
_KMU_FLOOR = 1e-3


def _energy(potential: PotentialSpec, n: float, q: float, kmu: float) -> float:
    # closed forms are smooth in n and gamma; kmu >= 0 enters through gamma
    return _energy_smooth(potential, n, q + kmu)


def spectral_derivative(
    potential: PotentialSpec,
    mu0: float,
    point: tuple[float, float, float],
    which: str,
    order: int = 1,
) -> float:
    """Central finite difference of the closed-form energy (reduced units)
    with respect to one of the continuous variables n, q or kmu = |k+mu0|.

    point is (n, q, k) with real components; differentiating in kmu
    requires |k + mu0| >= 1e-3 to stay clear of the absolute-value kink.
    """
    n, q, k = point
    kmu = abs(k + mu0)
    if which not in ("n", "q", "kmu"):
        raise ValueError(f"which must be 'n', 'q' or 'kmu', got {which!r}")
    if order not in (1, 2):
        raise ValueError(f"order must be 1 or 2, got {order}")
    if which == "kmu" and kmu < _KMU_FLOOR:
        raise ValueError(f"|k + mu0| = {kmu} too close to the kink for a kmu derivative")
    h = _FD_STEP
    args = {"n": n, "q": q, "kmu": kmu}

    def at(delta: float) -> float:
        a = dict(args)
        a[which] += delta
        return _energy(potential, a["n"], a["q"], a["kmu"])

    if order == 1:
        return (at(h) - at(-h)) / (2.0 * h)
    return (at(h) - 2.0 * at(0.0) + at(-h)) / (h * h)


def tendency_classify(nu: float) -> str:
    """Curvature class of E versus any quantum number: linear exactly at
    nu = 2, bending up for nu > 2 (including the well limit), bending
    down for -2 < nu < 2 excluding 0."""
    if nu == math.inf:
        return BENDS_UP
    if not (-2.0 < nu < 0.0 or nu > 0.0):
        raise ValueError(f"nu={nu} outside (-2, 0) u (0, inf]")
    if nu == 2.0:
        return LINEAR
    return BENDS_UP if nu > 2.0 else BENDS_DOWN


def derivative_ratios(nu: float) -> tuple[float, float, float]:
    """(dE/dn : dE/dq, dE/dn : dE/dkmu, dE/dq : dE/dkmu).

    The positive branch depends on n + gamma/2 + 3/4, so the slopes in n
    and in gamma stand in the fixed ratio 2:1; the negative branch depends
    on n + (2 gamma + nu + 3)/(2 nu + 4), giving (nu + 2):1.
    """
    if nu > 0.0:
        return (2.0, 2.0, 1.0)
    if -2.0 < nu < 0.0:
        return (nu + 2.0, nu + 2.0, 1.0)
    raise ValueError(f"nu={nu} outside (-2, 0) u (0, inf)")


def _probe_potential(nu: float) -> PotentialSpec:
    if nu == math.inf:
        return InfiniteWell(1.0)
    return PowerLaw(-1.0 if nu < 0.0 else 1.0, nu)


def flux_slope_effect(nu: float, threshold: float = 1e-6) -> int:
    """Sign of d^2 E / (dn d|k+mu0|): -1 when the flux depresses the
    n-slope (nu < 2), 0 at the marginal oscillator (nu = 2), +1 when it
    steepens it (nu > 2).  Measured by a mixed central difference on the
    closed form at a representative grid point."""
    pot = _probe_potential(nu)
    n0, q0, kmu0 = 1.0, 1.0, 0.75
    h = _FD_STEP

    def e(dn: float, dk: float) -> float:
        return _energy(pot, n0 + dn, q0, kmu0 + dk)

    mixed = (e(h, h) - e(h, -h) - e(-h, h) + e(-h, -h)) / (4.0 * h * h)
    scale = abs((e(h, 0.0) - e(-h, 0.0)) / (2.0 * h)) + 1e-300
    if abs(mixed) <= threshold * scale:
        return 0
    return 1 if mixed > 0.0 else -1


@dataclass(frozen=True)
class TendencyReport:
    """Qualitative spectrum shape for one exponent."""

    nu: float
    curvature: str
    first_derivative_signs: tuple[str, str, str]
    ratios: tuple[float, float, float]
    flux_slope_sign: str


def build_tendency_report(
    potential: PotentialSpec,
    mu0: float,
    point: tuple[float, float, float] = (1.0, 1.0, 1.0),
) -> TendencyReport:
    """Measure the tendency quantities by finite differences at `point`
    and cross-check the curvature class against the exponent rule."""
    nu = math.inf if isinstance(potential, InfiniteWell) else potential.nu
    firsts = [spectral_derivative(potential, mu0, point, w, 1) for w in ("n", "q", "kmu")]
    second = spectral_derivative(potential, mu0, point, "n", 2)
    signs = tuple("+" if d > 0.0 else ("-" if d < 0.0 else "0") for d in firsts)
    scale = abs(firsts[0]) + 1e-300
    if abs(second) <= 1e-6 * scale:
        curvature = LINEAR
    else:
        curvature = BENDS_UP if second > 0.0 else BENDS_DOWN
    expected = tendency_classify(nu)
    if curvature != expected:
        raise ArithmeticError(
            f"measured curvature {curvature} disagrees with rule {expected} at nu={nu}"
        )
    ratios = (firsts[0] / firsts[2], firsts[1] / firsts[2], 1.0)
    slope = flux_slope_effect(nu)
    return TendencyReport(nu, curvature, signs, ratios, {1: "+", 0: "0", -1: "-"}[slope])
