"""Command-line front end.

Subcommands: spectrum, compare-well, tendency, verify-action, quantize,
shoot, zeros.  Tables serialize to CSV/JSON with fixed 12-significant-
digit formatting and optional SVG figures; repeated identical invocations
produce byte-identical output.

Exit codes: 0 success, 2 usage/domain error, 3 numeric non-convergence.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import action as action_mod
from . import analysis, closed_form, oracles, svg
from ._kernels import BACKEND
from .closed_form import SpectrumTable, spectrum_table
from .errors import ConvergenceError
from .model import InfiniteWell, MaslovConstant, PowerLaw, UnitScale, unit_scale

__all__ = ["main", "build_parser", "table_to_csv", "table_to_json", "table_from_json"]

CSV_HEADER = "nu,lambda,mu0,n,q,k,gamma,energy,unit"
WELL_CSV_COLUMNS = "gamma,n,E_exact,E_semiclassical,diff"

_MASLOV_NAMES = {
    "smooth-smooth": MaslovConstant.SMOOTH_SMOOTH,
    "wall-smooth": MaslovConstant.WALL_SMOOTH,
    "wall-wall": MaslovConstant.WALL_WALL,
}

_CONFIG_KEYS = (
    "quad-rel-tol",
    "root-rel-tol",
    "shoot-step",
    "shoot-min-points",
    "shoot-energy-tol",
    "shoot-max-iterations",
)


def fmt12(x: float) -> str:
    """Fixed 12-significant-digit float formatting used in CSV and JSON."""
    return f"{x:.12g}"


def round12(x: float) -> float:
    return float(fmt12(x))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _potential_json(pot) -> dict:
    if isinstance(pot, InfiniteWell):
        return {"kind": "infinite-well", "radius": round12(pot.a)}
    return {"kind": "power-law", "nu": round12(pot.nu), "lambda": round12(pot.lam)}


def _potential_from_json(obj: dict):
    if obj["kind"] == "infinite-well":
        return InfiniteWell(obj["radius"])
    if obj["kind"] == "power-law":
        return PowerLaw(obj["lambda"], obj["nu"])
    raise ValueError(f"unknown potential kind {obj.get('kind')!r}")


def table_to_csv(table: SpectrumTable) -> str:
    pot = table.potential
    if isinstance(pot, InfiniteWell):
        nu_s, lam_s = "inf", fmt12(0.0)
    else:
        nu_s, lam_s = fmt12(pot.nu), fmt12(pot.lam)
    lines = [CSV_HEADER]
    for r in table.rows:
        lines.append(
            f"{nu_s},{lam_s},{fmt12(table.mu0)},{r.n},{r.q},{r.k},"
            f"{fmt12(r.gamma)},{fmt12(r.energy)},{table.unit.label}"
        )
    return "\n".join(lines) + "\n"


def table_to_json(table: SpectrumTable) -> str:
    obj = {
        "potential": _potential_json(table.potential),
        "mu0": round12(table.mu0),
        "unit": {"label": table.unit.label, "factor": round12(table.unit.factor)},
        "method": table.method,
        "rows": [
            {
                "n": r.n,
                "q": r.q,
                "k": r.k,
                "gamma": round12(r.gamma),
                "energy": round12(r.energy),
            }
            for r in table.rows
        ],
    }
    return json.dumps(obj, indent=2) + "\n"


def table_from_json(text: str) -> SpectrumTable:
    obj = json.loads(text)
    rows = tuple(
        closed_form.EnergyLevel(r["n"], r["q"], r["k"], r["gamma"], r["energy"], obj["method"])
        for r in obj["rows"]
    )
    return SpectrumTable(
        _potential_from_json(obj["potential"]),
        obj["mu0"],
        UnitScale(obj["unit"]["label"], obj["unit"]["factor"]),
        obj["method"],
        rows,
    )


def _dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


def _parse_nu(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    return float(text)


def _parse_k_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("..")
    if not hi:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    return int(lo), int(hi)


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    out = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _CONFIG_KEYS:
                raise ValueError(f"unknown config key {key!r}")
            out[key] = value.strip()
    return out


def _cfg_value(args, config: dict, flag: str, key: str, cast, default):
    explicit = getattr(args, flag, None)
    if explicit is not None:
        return explicit
    if key in config:
        return cast(config[key])
    return default


def _potential_from_args(args) -> PowerLaw | InfiniteWell:
    if args.nu == math.inf:
        return InfiniteWell(args.radius)
    if args.lam is None:
        raise ValueError("--lambda is required for finite exponents")
    return PowerLaw(args.lam, args.nu)


def _unit_from_args(args, potential) -> UnitScale:
    preset = getattr(args, "units", None) or "reduced"
    return unit_scale(preset, potential)


def _write_output(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_svg(markup: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(markup)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_spectrum(args, config: dict) -> int:
    potential = _potential_from_args(args)
    unit = _unit_from_args(args, potential)
    k_range = args.k_range if args.k_range else (args.k, args.k)
    workers = int(os.environ.get("ABWKB_WORKERS", "1"))
    table = spectrum_table(potential, args.mu0, args.n_max, args.q_max, k_range, unit, workers)
    text = table_to_json(table) if args.format == "json" else table_to_csv(table)
    _write_output(text, args.out)
    if args.svg:
        _write_svg(_spectrum_svg(table), args.svg)
    return 0


def _spectrum_svg(table: SpectrumTable) -> str:
    groups: dict[tuple[int, int], list] = {}
    for r in table.rows:
        groups.setdefault((r.q, r.k), []).append(r)
    panel = svg.Panel(
        title=f"levels, mu0={fmt12(table.mu0)}",
        xlabel="n",
        ylabel=f"E [{table.unit.label}]",
    )
    for (q, k), rows in sorted(groups.items()):
        rows.sort(key=lambda r: r.n)
        panel.series.append(
            svg.Series(f"q={q},k={k}", [float(r.n) for r in rows], [r.energy for r in rows])
        )
    return svg.render_svg([panel])


def _cmd_compare_well(args, config: dict) -> int:
    g, n_max = args.gamma, args.n_max
    if g < 0.0 or n_max < 0:
        raise ValueError("gamma and n-max must be non-negative")
    exact = oracles.well_exact_spectrum(g, 1.0, n_max + 1)
    semi = [closed_form.energy_well_semiclassical(n, g, 1.0) for n in range(n_max + 1)]
    diffs = [s - e for s, e in zip(semi, exact)]
    if args.format == "json":
        text = _dump_json(
            {
                "gamma": round12(g),
                "unit": "hbar^2 pi^2/2ma^2",
                "rows": [
                    {"n": n, "E_exact": round12(exact[n]), "E_semiclassical": round12(semi[n]), "diff": round12(diffs[n])}
                    for n in range(n_max + 1)
                ],
            }
        )
    else:
        lines = [WELL_CSV_COLUMNS]
        for n in range(n_max + 1):
            lines.append(f"{fmt12(g)},{n},{fmt12(exact[n])},{fmt12(semi[n])},{fmt12(diffs[n])}")
        text = "\n".join(lines) + "\n"
    _write_output(text, args.out)
    if args.svg:
        ns = [float(n) for n in range(n_max + 1)]
        left = svg.Panel("well levels", "n", "E [hbar^2 pi^2/2ma^2]")
        left.series.append(svg.Series("exact", ns, exact))
        left.series.append(svg.Series("semiclassical", ns, semi))
        right = svg.Panel("semiclassical - exact", "n", "difference")
        right.series.append(svg.Series("", ns, diffs))
        _write_svg(svg.render_svg([left, right]), args.svg)
    return 0


_TENDENCY_DEFAULT_UNITS = {-1.0: "fig2a", 1.0: "fig2b", 2.0: "fig2c", math.inf: "fig2d"}


def _cmd_tendency(args, config: dict) -> int:
    potential = _potential_from_args(args)
    preset = args.units or _TENDENCY_DEFAULT_UNITS.get(args.nu, "reduced")
    unit = unit_scale(preset, potential)
    table = spectrum_table(potential, args.mu0, args.n_max, args.q_max, (args.k, args.k), unit)
    report = analysis.build_tendency_report(potential, args.mu0, point=(1.0, 1.0, args.k))
    report_obj = {
        "nu": "inf" if report.nu == math.inf else round12(report.nu),
        "curvature": report.curvature,
        "first_derivative_signs": list(report.first_derivative_signs),
        "ratios": [round12(r) for r in report.ratios],
        "flux_slope_sign": report.flux_slope_sign,
    }
    if args.format == "json":
        text = _dump_json({"report": report_obj, "table": json.loads(table_to_json(table))})
        _write_output(text, args.out)
    else:
        _write_output(table_to_csv(table), args.out)
        sys.stderr.write(json.dumps(report_obj) + "\n")
    if args.svg:
        _write_svg(_tendency_svg(table), args.svg)
    return 0


def _tendency_svg(table: SpectrumTable) -> str:
    panel = svg.Panel(
        title=f"E(n) by q, |k+mu0|={fmt12(abs(table.rows[0].k + table.mu0))}",
        xlabel="n",
        ylabel=f"E [{table.unit.label}]",
    )
    by_q: dict[int, list] = {}
    for r in table.rows:
        by_q.setdefault(r.q, []).append(r)
    for q, rows in sorted(by_q.items()):
        rows.sort(key=lambda r: r.n)
        panel.series.append(svg.Series(f"q={q}", [float(r.n) for r in rows], [r.energy for r in rows]))
    return svg.render_svg([panel])


def _cmd_verify_action(args, config: dict) -> int:
    potential = PowerLaw(args.lam, args.nu)
    quad_tol = _cfg_value(args, config, "quad_rel_tol", "quad-rel-tol", float, 1e-12)
    numeric = action_mod.action_integral_numeric(args.energy, potential, rel_tol=quad_tol)
    closed = action_mod.action_integral_closed(args.energy, args.lam, args.nu)
    rel = abs(numeric - closed) / abs(closed)
    _write_output(
        _dump_json(
            {
                "nu": round12(args.nu),
                "lambda": round12(args.lam),
                "energy": round12(args.energy),
                "numeric": round12(numeric),
                "closed": round12(closed),
                "rel_err": float(f"{rel:.3g}"),
            }
        ),
        args.out,
    )
    return 0


def _cmd_quantize(args, config: dict) -> int:
    potential = _potential_from_args(args)
    setup = action_mod.QuantizationSetup(
        potential,
        args.gamma,
        maslov=_MASLOV_NAMES[args.maslov] if args.maslov else None,
        quad_rel_tol=_cfg_value(args, config, "quad_rel_tol", "quad-rel-tol", float, 1e-12),
        root_rel_tol=_cfg_value(args, config, "root_rel_tol", "root-rel-tol", float, 1e-11),
    )
    energy = action_mod.quantize_energy(setup, args.n)
    _write_output(
        _dump_json(
            {
                "nu": "inf" if args.nu == math.inf else round12(args.nu),
                "lambda": None if args.lam is None else round12(args.lam),
                "gamma": round12(args.gamma),
                "n": args.n,
                "constant": round12(setup.constant),
                "energy": round12(energy),
            }
        ),
        args.out,
    )
    return 0


def _cmd_shoot(args, config: dict) -> int:
    potential = PowerLaw(args.lam, args.nu)
    cfg = oracles.ShootingConfig(
        step=_cfg_value(args, config, "step", "shoot-step", float, 0.01),
        min_points=_cfg_value(args, config, "min_points", "shoot-min-points", int, 2000),
        energy_tol=_cfg_value(args, config, "energy_tol", "shoot-energy-tol", float, 1e-9),
        max_iterations=_cfg_value(args, config, "max_iterations", "shoot-max-iterations", int, 260),
    )
    energy = oracles.shoot_eigenvalue(potential, args.gamma, args.n, cfg)
    _write_output(
        _dump_json(
            {
                "nu": round12(args.nu),
                "lambda": round12(args.lam),
                "gamma": round12(args.gamma),
                "n": args.n,
                "energy": round12(energy),
                "backend": BACKEND,
            }
        ),
        args.out,
    )
    return 0


def _cmd_zeros(args, config: dict) -> int:
    from .special_functions import bessel_j_zeros

    zeros = bessel_j_zeros(args.order, args.count)
    _write_output(
        _dump_json(
            {"order": round12(args.order), "count": args.count, "zeros": [round12(z) for z in zeros]}
        ),
        args.out,
    )
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, *, fmt: bool = True) -> None:
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.add_argument("--config", help="key=value config file for tolerances")
    if fmt:
        p.add_argument("--format", choices=("csv", "json"), default="csv")


def _add_potential(p: argparse.ArgumentParser) -> None:
    p.add_argument("--nu", type=_parse_nu, required=True, help="exponent; 'inf' selects the well")
    p.add_argument("--lambda", dest="lam", type=float, help="coupling (sign must match nu range)")
    p.add_argument("--radius", type=float, default=1.0, help="well radius for --nu inf")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abwkb",
        description="Semiclassical spectra for power-law potentials under an Aharonov-Bohm flux",
    )
    parser.add_argument("--version", action="version", version="abwkb 0.1.0")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="closed-form level grid over (n, q, k)")
    _add_potential(p)
    p.add_argument("--mu0", type=float, default=0.0)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--k-range", type=_parse_k_range, metavar="LO..HI")
    p.add_argument("--units", choices=("reduced", "fig1", "fig2a", "fig2b", "fig2c", "fig2d"))
    p.add_argument("--svg", help="also write an SVG plot to this path")
    _add_common(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("compare-well", help="exact vs semiclassical well levels")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--svg", help="two-panel SVG (levels, difference)")
    _add_common(p)
    p.set_defaults(func=_cmd_compare_well)

    p = sub.add_parser("tendency", help="E(n, q) grid plus a tendency report")
    _add_potential(p)
    p.add_argument("--mu0", type=float, default=0.0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--units", choices=("reduced", "fig1", "fig2a", "fig2b", "fig2c", "fig2d"))
    p.add_argument("--svg")
    _add_common(p)
    p.set_defaults(func=_cmd_tendency)

    p = sub.add_parser("verify-action", help="numeric vs closed-form action integral")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--energy", type=float, required=True)
    p.add_argument("--quad-rel-tol", dest="quad_rel_tol", type=float)
    _add_common(p, fmt=False)
    p.set_defaults(func=_cmd_verify_action)

    p = sub.add_parser("quantize", help="energy from the quantization condition")
    _add_potential(p)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--maslov", choices=sorted(_MASLOV_NAMES))
    p.add_argument("--quad-rel-tol", dest="quad_rel_tol", type=float)
    p.add_argument("--root-rel-tol", dest="root_rel_tol", type=float)
    _add_common(p, fmt=False)
    p.set_defaults(func=_cmd_quantize)

    p = sub.add_parser("shoot", help="Numerov shooting eigenvalue")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--step", type=float)
    p.add_argument("--min-points", dest="min_points", type=int)
    p.add_argument("--energy-tol", dest="energy_tol", type=float)
    p.add_argument("--max-iterations", dest="max_iterations", type=int)
    _add_common(p, fmt=False)
    p.set_defaults(func=_cmd_shoot)

    p = sub.add_parser("zeros", help="positive zeros of J_order")
    p.add_argument("--order", type=float, required=True)
    p.add_argument("--count", type=int, required=True)
    _add_common(p, fmt=False)
    p.set_defaults(func=_cmd_zeros)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config)
        return args.func(args, config)
    except (ValueError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"did not converge: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
