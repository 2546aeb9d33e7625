"""Deterministic command-line front end emitting CSV/JSON tables.

Identical flags produce byte-identical output: floats are printed with 12
significant digits (scientific notation below 1e-4), rows keep a fixed column
order, and every row carries a provenance tag (EXACT, ASYMPTOTIC, SERIES,
BETHE, ED, SEARCH, or WARNING for skipped singular grid points).

Exit codes: 0 success, 2 invalid configuration, 3 numerical non-convergence,
4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import bethe, correlators, ed, field_theory, le_search, quantum
from .model import Family, make_model
from .numerics import NonConvergenceError


def fmt(x) -> str:
    """Deterministic float formatting: 12 significant digits."""
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if x != x or x in (float("inf"), float("-inf")):
        return repr(x)
    if x == 0.0:
        return "0"
    if abs(x) < 1e-4:
        return f"{x:.11e}"
    return f"{x:.12g}"


def _emit(columns: list[str], rows: list[tuple], config) -> None:
    text_rows = [[fmt(v) for v in row] for row in rows]
    if config.format == "json":
        payload = {name: [row[k] for row in text_rows] for k, name in enumerate(columns)}
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        lines = [",".join(columns)]
        lines += [",".join(row) for row in text_rows]
        out = "\n".join(lines) + "\n"
    _write(out, config.out)


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_grid(text: str) -> np.ndarray:
    try:
        start, stop, count = text.split(":")
        grid = np.linspace(float(start), float(stop), int(count))
    except (ValueError, TypeError) as exc:
        raise SystemExit(2) from exc
    if grid.size == 0 or np.any(np.diff(grid) <= 0):
        sys.stderr.write("grid must be nonempty and strictly increasing\n")
        raise SystemExit(2)
    return grid


def _model_from_args(args) -> object:
    try:
        if args.model == "xxx":
            return make_model(Family.XXX, 1.0, getattr(args, "field", 0.0))
        return make_model(Family.XXZ, args.eta, getattr(args, "field", 0.0))
    except ValueError as exc:
        sys.stderr.write(f"invalid model: {exc}\n")
        raise SystemExit(2) from exc


def cmd_correlators(args) -> None:
    model = _model_from_args(args)
    columns = ["n", "value", "kind", "le_lower", "provenance"]
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        if model.family is Family.XXX:
            cv = correlators.xxx_zz(n)
            lower = abs(cv.value)
        else:
            cv = correlators.xxz_xx_asymptotic(model, n)
            lower = cv.value
        rows.append((n, cv.value, cv.kind.value, lower, cv.kind.value.upper()))
    _emit(columns, rows, args)


def cmd_figure(args) -> None:
    which = args.which
    columns = ["x", "y", "series", "provenance"]
    rows: list[tuple] = []
    if which in (1, 2, 3):
        grid = _parse_grid(args.grid or "0.05:0.95:19")
        for eta in grid:
            eta = float(eta)
            try:
                if which == 1:
                    rows.append((eta, correlators.amplitude_F(eta), "F", "EXACT"))
                elif which == 2:
                    rows.append((eta, field_theory.susceptibility(eta), "chi", "EXACT"))
                else:
                    if eta < 2.0 / 3.0:
                        rows.append((eta, field_theory.alpha1(eta), "alpha1", "EXACT"))
                    else:
                        rows.append((eta, field_theory.alpha2(eta), "alpha2", "EXACT"))
            except ValueError:
                rows.append((eta, "", "skipped-singular-point", "WARNING"))
    elif which == 4:
        model = _model_from_args(args)
        hc = model.critical_field
        grid = _parse_grid(args.grid or f"{0.05 * hc}:{0.999 * hc}:12")
        for h in grid:
            h = float(h)
            if not 0.0 < h <= hc:
                rows.append((h, "", "skipped-singular-point", "WARNING"))
                continue
            sol = bethe.theta_exact(model, h, order=args.order)
            rows.append((h, sol.theta, f"eta={fmt(model.eta)}", "BETHE"))
    else:
        sys.stderr.write("figure index must be 1..4\n")
        raise SystemExit(2)
    _emit(columns, rows, args)


def cmd_le_search(args) -> None:
    if args.sites > 14:
        sys.stderr.write("chains are capped at 14 sites\n")
        raise SystemExit(2)
    if args.state == "ghz":
        state = le_search.ghz_state(args.sites)
    else:
        model = _model_from_args(args)
        chain = ed.FiniteChain(model=model, n_sites=args.sites, boundary=ed.Boundary(args.boundary))
        state = ed.ground_state(chain).vector
    i, j = args.pair
    result = le_search.optimize_le(state, (i, j), restarts=args.restarts, seed=args.seed)

    gs = ed.GroundState(energy=0.0, vector=state, sz_sector=None)
    q = {alpha: ed.correlator(gs, alpha, i, j) for alpha in ("x", "y", "z")}
    sigma_i = ed.expectation_sigma(gs, "z", i)
    sigma_j = ed.expectation_sigma(gs, "z", j)
    lower = quantum.le_lower_bound(q["x"].connected, q["y"].connected, q["z"].connected)
    upper = quantum.le_upper_bound(q["z"].raw, sigma_i, sigma_j)
    pre = quantum.wootters_concurrence(ed.reduced_density(gs, i, j))
    report = {
        "pair": [i, j],
        "sites": args.sites,
        "state": args.state,
        "le": fmt(result.value),
        "lower_bound": fmt(lower),
        "upper_bound": fmt(upper),
        "pre_measurement_concurrence": fmt(pre),
        "converged": result.converged,
        "restarts": result.restarts_used,
        "plan_theta": [fmt(t) for t in result.plan.theta],
        "plan_phi": [fmt(p) for p in result.plan.phi],
        "oracle_correlators": {a: {"raw": fmt(v.raw), "connected": fmt(v.connected)} for a, v in q.items()},
        "provenance": "SEARCH+ED",
    }
    _write(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)


def cmd_concurrence_table(args) -> None:
    model = _model_from_args(args)
    columns = ["n", "concurrence_before", "le_lower", "vanishing_distance", "provenance"]
    rows = []
    if model.family is Family.XXZ:
        vanish = fmt(quantum.vanishing_distance_xxz(model.eta))
    else:
        vanish = ""
    for n in range(args.n_min, args.n_max + 1):
        if model.family is Family.XXX:
            conc = quantum.concurrence_xxx(n)
            lower = abs(correlators.xxx_zz(n).value)
            provenance = "EXACT" if n <= 4 else "SERIES"
        else:
            gx = correlators.xxz_xx_asymptotic(model, n).value
            gz = correlators.xxz_zz_asymptotic(model, n).value
            triple = quantum.CorrelatorTriple(gx=gx, big_g=gz, sigma=0.0)
            conc = quantum.wootters_concurrence(quantum.density_from_correlators(triple))
            lower = gx
            provenance = "ASYMPTOTIC"
        rows.append((n, conc, lower, vanish, provenance))
    _emit(columns, rows, args)


def _pair_type(text: str) -> tuple[int, int]:
    try:
        i, j = (int(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError("pair must look like 0,1") from exc
    return i, j


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lechain", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, model=True):
        if model:
            p.add_argument("--model", choices=["xxx", "xxz"], default="xxx")
            p.add_argument("--eta", type=float, default=0.5, help="anisotropy parameter for xxz")
            p.add_argument("--field", type=float, default=0.0)
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--order", type=int, default=200, help="quadrature order")

    p = sub.add_parser("correlators", help="correlator table with entanglement lower bounds")
    add_common(p)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=8)
    p.set_defaults(func=cmd_correlators)

    p = sub.add_parser("figure", help="figure data: 1 amplitude, 2 susceptibility, 3 weak-field coefficients, 4 exponent vs field")
    p.add_argument("which", type=int, choices=[1, 2, 3, 4])
    add_common(p)
    p.add_argument("--grid", default=None, help="start:stop:count")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("le-search", help="measurement optimization on a small chain")
    add_common(p)
    p.add_argument("--state", choices=["ghz", "ed"], default="ed")
    p.add_argument("--sites", type=int, default=6)
    p.add_argument("--pair", type=_pair_type, default=(0, 1))
    p.add_argument("--boundary", choices=["open", "periodic"], default="periodic")
    p.add_argument("--restarts", type=int, default=8)
    p.set_defaults(func=cmd_le_search)

    p = sub.add_parser("concurrence-table", help="pre-measurement concurrence vs entanglement lower bound")
    add_common(p)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_concurrence_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except NonConvergenceError as exc:
        sys.stderr.write(f"non-convergence: {exc}\n")
        return 3
    except OSError as exc:
        sys.stderr.write(f"i/o failure: {exc}\n")
        return 4
    except ValueError as exc:
        sys.stderr.write(f"invalid configuration: {exc}\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
