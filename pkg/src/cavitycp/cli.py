"""Command-line front end: parameter scans emitted as CSV or JSON tables.

Subcommands: profile, depth, bragg, heating, asym.  Exit codes: 0 on
success, 2 for configuration/usage errors, 3 for numerical failures.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .config import ConfigError, Registry, load_registry, parse_quantity
from .constants import C
from .greens import CavityGeometry
from .materials import ConstantR
from .molecules import ThermalEnvironment
from .potential import heating_rate_free, heating_rate_profile, \
    heating_rate_single_plate, potential_components, potential_depth, \
    resonance_width
from .quadrature import QuadratureError, QuadratureSpec
from . import asymptotics
from .molecules import photon_number
from .constants import EPSILON_0

__all__ = ["main"]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _emit(rows, header, args):
    if args.format == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps([dict(zip(header, row)) for row in rows],
                          indent=2) + "\n"
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _registry(args) -> Registry:
    if args.config:
        with open(args.config) as fh:
            return load_registry(fh.read())
    return load_registry("")


def _lookup(table, name, kind):
    if name not in table:
        raise ConfigError(f"unknown {kind} {name!r}; available: "
                          f"{', '.join(sorted(table))}")
    return table[name]


def _resolve_width(text, molecule):
    if text.startswith("resonance:"):
        nu = int(text.split(":", 1)[1])
        return resonance_width(molecule.transitions[0], nu)
    width = parse_quantity(text)
    if width <= 0:
        raise ConfigError(f"cavity width must be positive, got {text!r}")
    return width


def _thread_map(func, items, args):
    threads = int(os.environ.get("CAVITYCP_THREADS", args.threads))
    if threads <= 1:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))


def _quad_spec(args) -> QuadratureSpec:
    return QuadratureSpec(rel_tol=args.rel_tol)


def _z_grid(width, points):
    edge = width / 2.0 - width / 1000.0
    if points < 2:
        raise ConfigError("grid needs at least 2 points")
    step = 2.0 * edge / (points - 1)
    return [-edge + i * step for i in range(points)]


def cmd_profile(args) -> int:
    reg = _registry(args)
    mol = _lookup(reg.molecules, args.molecule, "molecule")
    mirror = _lookup(reg.mirrors, args.mirror, "mirror")
    width = _resolve_width(args.width, mol)
    env = ThermalEnvironment(parse_quantity(args.temperature))
    cavity = CavityGeometry(width=width, mirror=mirror)
    spec = _quad_spec(args)

    comps = _thread_map(
        lambda z: potential_components(z, mol, cavity, env, spec),
        _z_grid(width, args.points), args)
    if args.raw:
        off = (0.0, 0.0, 0.0)
    else:
        center = potential_components(0.0, mol, cavity, env, spec)
        off = (center.U_nr, center.U_pr, center.U_ev)
    rows = [(c.z, c.U_nr - off[0], c.U_pr - off[1], c.U_ev - off[2],
             c.U_total - sum(off)) for c in comps]
    _emit(rows, ["z_m", "U_nr_J", "U_pr_J", "U_ev_J", "U_total_J"], args)
    return EXIT_OK


def cmd_depth(args) -> int:
    reg = _registry(args)
    mol = _lookup(reg.molecules, args.molecule, "molecule")
    mirror = _lookup(reg.mirrors, args.mirror, "mirror")
    env = ThermalEnvironment(parse_quantity(args.temperature))
    spec = _quad_spec(args)
    nus = [int(s) for s in args.nu.split(",") if s.strip()]
    if not nus or any(nu < 1 for nu in nus):
        raise ConfigError("--nu needs a comma-separated list of integers >= 1")

    rows = []
    for nu in nus:
        rep = potential_depth(mol, mirror, nu, env, spec)
        z_min = rep.minima_positions[0] if rep.minima_positions else math.nan
        rows.append((nu, rep.width, rep.depth, z_min,
                     ";".join(_fmt(z) for z in rep.maxima_positions),
                     "well_depth" if rep.is_well_depth else "peak_height"))
    _emit(rows, ["nu", "a_m", "depth_J", "z_min_m", "z_maxima_m", "kind"],
          args)
    return EXIT_OK


def cmd_bragg(args) -> int:
    from .materials import quarter_wave_stack, multilayer_reflection
    import numpy as np
    reg = _registry(args)
    mat_a = _lookup(reg.materials, args.material_a, "material")
    mat_b = _lookup(reg.materials, args.material_b, "material")
    omega0 = float(args.design_frequency)
    if args.n_min > args.n_max or args.n_min < 0:
        raise ConfigError("need 0 <= n-min <= n-max")

    rows = []
    prev = None
    for n_pairs in range(args.n_min, args.n_max + 1):
        layers = quarter_wave_stack(mat_a, mat_b, n_pairs, omega0)
        r = complex(multilayer_reflection(layers, omega0, np.array([0.0]),
                                          "p")[0])
        one_minus = 1.0 - r.real
        saturated = prev is not None and \
            abs(one_minus - prev) <= 0.01 * abs(prev)
        rows.append((n_pairs, one_minus, abs(r), saturated))
        prev = one_minus
    _emit(rows, ["n_pairs", "one_minus_re_r", "abs_r", "saturated"], args)
    return EXIT_OK


def cmd_heating(args) -> int:
    reg = _registry(args)
    mol = _lookup(reg.molecules, args.molecule, "molecule")
    mirror = _lookup(reg.mirrors, args.mirror, "mirror")
    width = _resolve_width(args.width, mol)
    env = ThermalEnvironment(parse_quantity(args.temperature))
    spec = _quad_spec(args)
    gamma_free = heating_rate_free(mol, env)

    if args.single_plate:
        lam = 2.0 * math.pi * C / mol.transitions[0].omega
        lo, hi = lam / 100.0, width
        step = (hi - lo) / (args.points - 1)
        grid = [lo + i * step for i in range(args.points)]
        gammas = _thread_map(
            lambda d: heating_rate_single_plate(d, mol, mirror, env, spec),
            grid, args)
    else:
        cavity = CavityGeometry(width=width, mirror=mirror)
        grid = _z_grid(width, args.points)
        gammas = _thread_map(
            lambda z: heating_rate_profile(z, mol, cavity, env, spec),
            grid, args)
    rows = [(z, g, gamma_free) for z, g in zip(grid, gammas)]
    _emit(rows, ["z_m", "gamma_per_s", "gamma_free_per_s"], args)
    return EXIT_OK


def cmd_asym(args) -> int:
    reg = _registry(args)
    mol = _lookup(reg.molecules, args.molecule, "molecule")
    env = ThermalEnvironment(parse_quantity(args.temperature))
    spec = _quad_spec(args)
    t = mol.transitions[0]
    lam = 2.0 * math.pi * C / t.omega
    coupling = photon_number(t.omega, env) * t.d_squared / (3.0 * EPSILON_0)
    nus = list(range(args.nu_min, args.nu_max + 1))
    deltas = [float(s) for s in args.delta.split(",") if s.strip()] \
        if args.delta else []
    if not nus:
        raise ConfigError("empty nu range")
    if any(nu < 2 for nu in nus):
        raise ConfigError("asym requires nu >= 2")

    rows = []
    for nu in nus:
        phi = asymptotics.phi_nu(nu)
        if not deltas:
            rows.append((nu, math.nan, math.nan, math.nan, math.nan,
                         phi, asymptotics.phi_asymptote(nu)))
            continue
        for delta in deltas:
            cfg = asymptotics.ConstantRCavity(r=1.0 - delta, nu=nu, lam=lam)
            series = coupling * (
                asymptotics.I_phi_series(cfg, 0.5 - 1.5 / nu)
                - asymptotics.I_phi_series(cfg, 0.5 - 1.0 / nu))
            rep = potential_depth(mol, ConstantR(1.0 - delta), nu, env, spec)
            rows.append((nu, delta, rep.depth, series,
                         asymptotics.depth_scaling(nu, delta, lam, coupling),
                         phi, asymptotics.phi_asymptote(nu)))
    _emit(rows, ["nu", "delta", "depth_quadrature_J", "depth_series_J",
                 "depth_scaling_J", "phi_nu", "phi_asymptote"], args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cavitycp",
        description="Thermal Casimir-Polder potentials, well depths, and "
                    "heating rates for polar molecules in planar cavities.")
    parser.add_argument("--config", default=None,
                        help="path to a molecules/materials/mirrors config")
    parser.add_argument("--out", default=None, help="output path (default "
                        "stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--rel-tol", type=float, default=1e-9,
                        help="quadrature relative tolerance")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for grid evaluation "
                        "(env CAVITYCP_THREADS overrides)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="potential components on a z grid")
    p.add_argument("--molecule", default="LiH")
    p.add_argument("--mirror", default="gold")
    p.add_argument("--width", required=True,
                   help="cavity width (e.g. 500um) or resonance:NU")
    p.add_argument("--temperature", default="300K")
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--raw", action="store_true",
                   help="emit constant-dropped values without the "
                   "vanish-at-center shift")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("depth", help="well depths at cavity resonances")
    p.add_argument("--molecule", default="LiH")
    p.add_argument("--mirror", default="gold")
    p.add_argument("--nu", required=True, help="comma-separated resonance "
                   "orders")
    p.add_argument("--temperature", default="300K")
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("bragg", help="Bragg mirror reflectivity vs layer "
                       "count")
    p.add_argument("--material-a", required=True)
    p.add_argument("--material-b", required=True)
    p.add_argument("--n-min", type=int, default=0)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--design-frequency", required=True,
                   help="stack design angular frequency, rad/s")
    p.set_defaults(func=cmd_bragg)

    p = sub.add_parser("heating", help="heating-rate profile")
    p.add_argument("--molecule", default="LiH")
    p.add_argument("--mirror", default="gold")
    p.add_argument("--width", required=True)
    p.add_argument("--temperature", default="300K")
    p.add_argument("--points", type=int, default=100)
    p.add_argument("--single-plate", action="store_true",
                   help="distance scan from a single plate instead of a "
                   "cavity profile")
    p.set_defaults(func=cmd_heating)

    p = sub.add_parser("asym", help="compare quadrature depths with the "
                       "constant-reflectivity asymptotics")
    p.add_argument("--molecule", default="LiH")
    p.add_argument("--temperature", default="300K")
    p.add_argument("--nu-min", type=int, default=2)
    p.add_argument("--nu-max", type=int, required=True)
    p.add_argument("--delta", default="",
                   help="comma-separated list of 1-r values (optional)")
    p.set_defaults(func=cmd_asym)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ConfigError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (QuadratureError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
