"""Command-line front end.

Exit codes: 0 pass, 1 verification fail, 2 usage or input error.

Sampled-curve CSV input: comma separated, UTF-8, header ``s,g1,g2,g3,w1,w2,w3``,
strictly increasing s, at least 8 rows.  Jets come from not-a-knot cubic
splines (C^2), so second derivatives are piecewise linear.

Mesh output: ``<out>.obj`` triangulates the (s, t) grid row-major with two
triangles per cell; cells touching an excluded vertex are omitted.
``<out>.csv`` has one row per vertex with columns MESH_COLUMNS, and
``<out>.summary.csv`` holds the vertex, cell and exclusion counts.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from urllib.parse import urlencode

import numpy as np

from . import __version__
from .catalog import CATALOG_IDS, UnknownFamily, family_names, parse_id, resolve
from .errors import GeometryError, IndeterminateAlpha
from .minkowski import mink_dot
from .ruled import RuledChart, chart_from_samples, classify_ruled, read_samples, write_samples
from .surface import fit_alpha, mean_curvature
from .verifier import (
    DEFAULT_SEED,
    OdeBranchSpec,
    ode_branch_explore,
    residual_scan,
    transport_family,
)

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

REPORT_COLUMNS = ["family", "alpha", "grid", "max_residual", "fitted_alpha_mean", "fitted_alpha_std",
                  "exclusions", "verdict", "seed", "version"]
MESH_COLUMNS = ["i", "j", "s", "t", "x1", "x2", "x3", "q", "H", "alpha", "status"]
FAMILY_FLAGS = ["n", "r", "c", "c1", "c2", "part", "side", "sign", "shifted", "rapidity", "s0"]
# spline jets carry O(h^4) interpolation error, so sampled input gets looser bands
SAMPLED_RTOL = 1e-4
SAMPLED_CLASS_TOL = 1e-6
_RANGE_FLAGS = {"--s", "--t", "--c", "--alpha", "--k"}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    target: str | None = None
    alpha: float | None = None
    grid: list | None = None
    tol: float = 1e-8
    rtol: float = 1e-6
    delta: float | None = None
    seed: int = DEFAULT_SEED
    out: str | None = None
    fmt: str = "json"
    family_params: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.tol <= 0 or self.rtol <= 0:
            raise UsageError("tolerances must be positive")
        if self.grid is not None and min(self.grid) < 2:
            raise UsageError("grid sizes must be >= 2")
        if self.fmt not in ("json", "csv", "obj"):
            raise UsageError(f"unknown format {self.fmt!r}")


# ---------------------------------------------------------------- parsing helpers


def parse_range(text: str, need_count: bool = True) -> tuple:
    """``a:b:k`` (or ``a:b`` when the count is optional)."""
    parts = text.split(":")
    try:
        if len(parts) == 3:
            lo, hi, k = float(parts[0]), float(parts[1]), int(parts[2])
        elif len(parts) == 2 and not need_count:
            lo, hi, k = float(parts[0]), float(parts[1]), None
        else:
            raise ValueError
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected a:b:k") from None
    if not hi > lo:
        raise UsageError(f"empty range {text!r}")
    if k is not None and k < 2:
        raise UsageError("grid sizes must be >= 2")
    return lo, hi, k


def parse_floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad number list {text!r}") from None


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-2:2:32" as an option; fuse it with its flag
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in _RANGE_FLAGS and i + 1 < len(argv) and re.match(r"^-[\d.]", argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def family_id(target: str, params: dict) -> str:
    base, given = parse_id(target)
    given.update({k: v for k, v in params.items() if v is not None})
    return base + ("?" + urlencode(given) if given else "")


def write_atomic(path: str | Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        return v if np.isfinite(v) else None
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if hasattr(obj, "value") and not isinstance(obj, (str, int)):
        return obj.value
    return obj


def _csv_text(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    wr = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    wr.writeheader()
    for r in rows:
        wr.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    return buf.getvalue()


def emit(cfg: RunConfig, payload: dict, rows: list[dict] | None = None, columns: list[str] | None = None) -> None:
    payload = _jsonable(payload)
    if cfg.fmt == "csv":
        text = _csv_text(_jsonable(rows if rows is not None else [payload]), columns or list(payload))
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if cfg.out:
        write_atomic(cfg.out, text)
    else:
        sys.stdout.write(text)


def envelope(command: str, cfg: RunConfig, verdict: str, result) -> dict:
    return {"command": command, "version": __version__, "seed": cfg.seed, "verdict": verdict, "result": result}


# ---------------------------------------------------------------- commands


def cmd_verify(cfg: RunConfig) -> int:
    fid = family_id(cfg.target, cfg.family_params)
    fam = resolve(fid)
    alpha = fam.spec.claimed_alpha if cfg.alpha is None else cfg.alpha
    rep = residual_scan(fam.chart, 0.0 if alpha is None else alpha, cfg.grid, cfg.tol, fam.spec.id)
    rep.seed = cfg.seed
    emit(cfg, rep.to_dict(), columns=REPORT_COLUMNS)
    return EXIT_PASS if rep.passed else EXIT_FAIL


def _sampled_chart(cfg: RunConfig) -> RuledChart:
    try:
        s, g, w = read_samples(cfg.target)
    except FileNotFoundError:
        raise UsageError(f"no such file: {cfg.target}") from None
    t_range = cfg.extra.get("t") or (-0.5, 0.5)
    return chart_from_samples(s, g, w, t_range[:2])


def cmd_classify(cfg: RunConfig) -> int:
    chart = _sampled_chart(cfg)
    rep = classify_ruled(chart, tol=cfg.extra.get("class_tol") or SAMPLED_CLASS_TOL, rtol=cfg.rtol)
    d = rep.to_dict()
    d["source"] = str(cfg.target)
    emit(cfg, envelope("classify", cfg, rep.verdict, d))
    return EXIT_PASS


def cmd_sample(cfg: RunConfig) -> int:
    fam = resolve(family_id(cfg.target, cfg.family_params))
    chart = fam.chart
    if not isinstance(chart, RuledChart):
        raise UsageError(f"{fam.spec.id} is not a ruled chart")
    lo, hi, k = cfg.extra.get("s") or (*chart.s_range, 64)
    s = np.linspace(lo, hi, k)
    if not cfg.out:
        raise UsageError("sample needs --out")
    tmp = Path(cfg.out).with_name(Path(cfg.out).name + ".partial")
    write_samples(tmp, s, [chart.gamma(x) for x in s], [chart.w(x) for x in s])
    os.replace(tmp, cfg.out)
    return EXIT_PASS


def _invert_ids(cfg: RunConfig) -> list[str]:
    base, given = parse_id(cfg.target)
    params = {**given, **{k: v for k, v in cfg.family_params.items() if v is not None}}
    if base in ("plane-x3", "plane-x1") and "part" not in params:
        return [family_id(base, {**params, "part": p}) for p in ("minus", "plus")]
    return [family_id(base, params)]


def cmd_invert(cfg: RunConfig) -> int:
    method = cfg.extra.get("method") or "exact"
    reports = [transport_family(fid, cfg.grid, method).to_dict() for fid in _invert_ids(cfg)]
    constant = all(r["fitted_alpha_image_std"] is not None and r["fitted_alpha_image_std"] <= 1e-6 for r in reports)
    emit(cfg, envelope("invert", cfg, "pass" if constant else "fail", reports), rows=reports,
         columns=["source", "source_alpha", "source_region", "fitted_alpha_image_mean", "fitted_alpha_image_std",
                  "hausdorff", "hv_discrepancy_max", "remark_discrepancy_max", "flags"])
    return EXIT_PASS if constant else EXIT_FAIL


def cmd_branch(cfg: RunConfig) -> int:
    mu, k, c = cfg.extra.get("mu"), cfg.extra.get("k"), cfg.extra.get("c")
    if mu not in (1, -1) or k is None or c is None or len(c) != 4:
        raise UsageError("branch needs --mu +-1, --k and --c c1,c2,c3,c4")
    s = cfg.extra.get("s")
    grid = np.linspace(*s) if s else None
    rep = ode_branch_explore(OdeBranchSpec(mu, k, tuple(c), bool(cfg.extra.get("printed"))), grid)
    emit(cfg, envelope("branch", cfg, rep.verdict, rep.to_dict()))
    return EXIT_FAIL if rep.verdict.startswith("solution") else EXIT_PASS


def cmd_scan_catalog(cfg: RunConfig) -> int:
    rows = []
    for fid in CATALOG_IDS:
        fam = resolve(fid)
        a = fam.spec.claimed_alpha
        rep = residual_scan(fam.chart, 0.0 if a is None else a, None, cfg.tol, fam.spec.id)
        rep.seed = cfg.seed
        d = rep.to_dict()
        d["expect_stationary"] = fam.spec.expect_stationary
        d["as_expected"] = rep.passed == fam.spec.expect_stationary
        rows.append(d)
    ok = all(r["as_expected"] for r in rows)
    emit(cfg, envelope("scan-catalog", cfg, "pass" if ok else "fail", rows), rows=rows,
         columns=REPORT_COLUMNS + ["expect_stationary", "as_expected"])
    return EXIT_PASS if ok else EXIT_FAIL


def mesh_data(chart, s_axis, t_axis) -> tuple[list[dict], list[tuple]]:
    """Per-vertex records and 1-based triangle indices for a 2-parameter chart."""
    if chart.n != 2:
        raise UsageError("mesh needs a 2-parameter chart")
    rows, ok = [], np.zeros((len(s_axis), len(t_axis)), bool)
    for i, s in enumerate(s_axis):
        for j, t in enumerate(t_axis):
            X = chart.position(s, t)
            row = {"i": i, "j": j, "s": s, "t": t, "x1": X[0], "x2": X[1], "x3": X[2],
                   "q": float(mink_dot(X, X)), "H": "", "alpha": "", "status": "ok"}
            try:
                jet = chart.jet(s, t)
                row["H"] = mean_curvature(jet)
                ok[i, j] = True
                row["alpha"] = fit_alpha(jet)
            except IndeterminateAlpha:
                row["status"] = "alpha_indeterminate"
            except GeometryError as exc:
                row["status"] = type(exc).__name__
            rows.append(row)
    nt = len(t_axis)
    faces = []
    for i in range(len(s_axis) - 1):
        for j in range(nt - 1):
            if ok[i, j] and ok[i + 1, j] and ok[i, j + 1] and ok[i + 1, j + 1]:
                a, b, c, d = i * nt + j + 1, (i + 1) * nt + j + 1, (i + 1) * nt + j + 2, i * nt + j + 2
                faces += [(a, b, c), (a, c, d)]
    return rows, faces


def cmd_mesh(cfg: RunConfig) -> int:
    fam = resolve(family_id(cfg.target, cfg.family_params))
    chart = fam.chart
    if chart.n != 2:
        raise UsageError("mesh needs a 2-parameter chart")
    (s0, s1), (t0, t1) = chart.domain
    s = cfg.extra.get("s") or (s0, s1, 33)
    t = cfg.extra.get("t") or (t0, t1, 17)
    rows, faces = mesh_data(chart, np.linspace(*s), np.linspace(*t))
    base = Path(cfg.out or fam.spec.id.split("?")[0])
    base = base.with_suffix("") if base.suffix in (".obj", ".csv") else base
    obj = [f"# {fam.spec.id}"] + [f"v {r['x1']:.17g} {r['x2']:.17g} {r['x3']:.17g}" for r in rows]
    obj += [f"f {a} {b} {c}" for a, b, c in faces]
    write_atomic(base.with_suffix(".obj"), "\n".join(obj) + "\n")
    write_atomic(base.with_suffix(".csv"), _csv_text(rows, MESH_COLUMNS))
    n_cells = (s[2] - 1) * (t[2] - 1)
    excluded = sum(r["status"] not in ("ok", "alpha_indeterminate") for r in rows)
    summary = {"family": fam.spec.id, "vertices": len(rows), "cells": n_cells, "triangles": len(faces),
               "excluded_vertices": excluded, "omitted_cells": n_cells - len(faces) // 2}
    write_atomic(base.with_name(base.name + ".summary.csv"), _csv_text([summary], list(summary)))
    sys.stdout.write(json.dumps(envelope("mesh", cfg, "pass", summary), indent=2) + "\n")
    return EXIT_PASS


def cmd_families(cfg: RunConfig) -> int:
    rows = [resolve(fid).spec.to_dict() for fid in CATALOG_IDS]
    emit(cfg, envelope("families", cfg, "pass", {"builders": family_names(), "catalog": rows}))
    return EXIT_PASS


COMMANDS = {
    "verify": cmd_verify, "classify": cmd_classify, "sample": cmd_sample, "invert": cmd_invert,
    "branch": cmd_branch, "scan-catalog": cmd_scan_catalog, "mesh": cmd_mesh, "families": cmd_families,
}


# ---------------------------------------------------------------- argparse and config


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lorentz-stationary", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp_, target: str | None = None, target_help: str = ""):
        if target:
            sp_.add_argument(target, help=target_help)
        sp_.add_argument("--config", help="TOML file with defaults; flags win")
        sp_.add_argument("--out", help="output path (stdout when omitted)")
        sp_.add_argument("--format", dest="fmt", choices=["json", "csv", "obj"])
        sp_.add_argument("--seed", type=int)
        sp_.add_argument("--tol", type=float)
        sp_.add_argument("--rtol", type=float)
        sp_.add_argument("--delta", type=float)
        sp_.add_argument("--grid", help="grid sizes, e.g. 64,16")

    def fam_flags(sp_):
        for name in FAMILY_FLAGS:
            if name != "c":
                sp_.add_argument(f"--{name}", help="family parameter")
        sp_.add_argument("--c", help="family parameter (plane offset)")

    v = sub.add_parser("verify", help="residual scan of a catalog family")
    common(v, "family", "catalog id, e.g. pr1-3a or 'thnli-1b?c1=1&c2=0'")
    fam_flags(v)
    v.add_argument("--alpha", type=float)

    c = sub.add_parser("classify", help="classify a sampled ruled surface (CSV)")
    common(c, "input", "CSV with header s,g1,g2,g3,w1,w2,w3")
    c.add_argument("--t", help="ruling parameter range a:b")
    c.add_argument("--class-tol", dest="class_tol", type=float,
                   help=f"relative band for null tests (default {SAMPLED_CLASS_TOL:g})")

    s = sub.add_parser("sample", help="write CSV samples of a ruled catalog family")
    common(s, "family", "ruled catalog id")
    fam_flags(s)
    s.add_argument("--s", help="a:b:k")

    i = sub.add_parser("invert", help="push a catalog family through the inversion")
    common(i, "family", "catalog id")
    fam_flags(i)
    i.add_argument("--method", choices=["exact", "fd"])

    b = sub.add_parser("branch", help="explore a closed-form ODE branch")
    common(b)
    b.add_argument("--mu", type=int)
    b.add_argument("--k", type=float)
    b.add_argument("--c", help="c1,c2,c3,c4")
    b.add_argument("--s", help="grid a:b:k")
    b.add_argument("--printed", action="store_true", default=None, help="use the printed case (f) particular solution")

    sc = sub.add_parser("scan-catalog", help="residual scan of every catalog family")
    common(sc)

    m = sub.add_parser("mesh", help="OBJ mesh plus per-vertex CSV of a 2-parameter family")
    common(m, "family", "catalog id")
    fam_flags(m)
    m.add_argument("--s", help="a:b:k")
    m.add_argument("--t", help="a:b:k")

    f = sub.add_parser("families", help="list the catalog")
    common(f)
    return p


def load_config(path: str | None, command: str) -> dict:
    if not path:
        return {}
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except (OSError, tomllib.TOMLDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    merged = {k: v for k, v in data.items() if not isinstance(v, dict)}
    merged.update(data.get(command, {}))
    return merged


def make_config(ns: argparse.Namespace) -> RunConfig:
    raw = {k: v for k, v in vars(ns).items() if v is not None}
    conf = load_config(raw.pop("config", None), ns.command)
    opts = {**conf, **raw}
    cmd = opts.pop("command")
    target = opts.pop("family", None) or opts.pop("input", None)

    def pop_range(name, need_count=True):
        v = opts.pop(name, None)
        if v is None:
            return None
        if isinstance(v, (list, tuple)):
            return tuple(v)
        return parse_range(str(v), need_count)

    extra = {}
    if cmd == "branch":
        extra["mu"] = int(opts.pop("mu")) if "mu" in opts else None
        extra["k"] = float(opts.pop("k")) if "k" in opts else None
        cv = opts.pop("c", None)
        extra["c"] = parse_floats(cv) if isinstance(cv, str) else cv
        extra["printed"] = opts.pop("printed", False)
        extra["s"] = pop_range("s")
    else:
        extra["s"] = pop_range("s")
        extra["t"] = pop_range("t", need_count=cmd == "mesh")
    extra["method"] = opts.pop("method", None)
    extra["class_tol"] = opts.pop("class_tol", None)
    if cmd == "classify":
        opts.setdefault("rtol", SAMPLED_RTOL)
    fam = {k: opts.pop(k) for k in FAMILY_FLAGS if k in opts}
    grid = opts.pop("grid", None)
    if isinstance(grid, str):
        try:
            grid = [int(x) for x in grid.split(",")]
        except ValueError:
            raise UsageError(f"bad grid {grid!r}") from None
    known = {"alpha", "tol", "rtol", "delta", "seed", "out", "fmt"}
    unknown = set(opts) - known
    if unknown:
        raise UsageError(f"unknown option(s): {', '.join(sorted(unknown))}")
    return RunConfig(command=cmd, target=target, grid=grid, family_params=fam, extra=extra,
                     **{k: v for k, v in opts.items()})


def main(argv: list[str] | None = None) -> int:
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        cfg = make_config(ns)
        return COMMANDS[cfg.command](cfg)
    except UnknownFamily as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
