"""Command line front end: ``gauss-interleave {roots,slices,scan,trace,verify}``.

Exit codes: 0 success, 1 bad input, 2 search failure, 3 oracle failure,
4 roots did not match the oracle.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .circle import circle_zeros, dominance_radius
from .curves import trace
from .descent import GAP_TOL, RES_TOL, S_TOL, SearchFailure, find_all_roots, find_one_root
from .line import line_zeros
from .oracle import OracleFailure, aberth_roots, match_root_sets, min_separation
from .polynomial import PolyFormatError, is_real, monicize, read_poly, realify, strip_zero_roots
from .sampling import random_monic

SCHEMA_VERSION = 1
# circle slices go through the power basis; past this degree its conditioning shows
VALIDATED_DEGREE = 32
EXIT_OK, EXIT_INPUT, EXIT_SEARCH, EXIT_ORACLE, EXIT_MISMATCH = 0, 1, 2, 3, 4

log = logging.getLogger("gauss_interleave")


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    method: str = "circle"
    gap_tol: float = GAP_TOL
    s_tol: float = S_TOL
    res_tol: float = RES_TOL
    fmt: str = "plain"
    seed: int = 0

    def __post_init__(self):
        if self.method not in ("circle", "line", "both"):
            raise InputError(f"unknown method {self.method!r}")
        for name in ("gap_tol", "s_tol", "res_tol"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise InputError(f"{name} must be positive, got {v}")

    @property
    def methods(self) -> tuple[str, ...]:
        return ("circle", "line") if self.method == "both" else (self.method,)

    @property
    def tolerances(self) -> dict:
        return {"gap_tol": self.gap_tol, "s_tol": self.s_tol, "res_tol": self.res_tol}


def _setup_logging() -> None:
    level = os.environ.get("GAUSS_INTERLEAVE_LOG", "info").lower()
    levels = {"quiet": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
    if level not in levels:
        level = "info"
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(levels[level])
    log.propagate = False


def _json(doc: dict) -> str:
    def clean(v):
        if isinstance(v, float) and not math.isfinite(v):
            return None
        if isinstance(v, dict):
            return {k: clean(x) for k, x in v.items()}
        if isinstance(v, (list, tuple)):
            return [clean(x) for x in v]
        return v

    return json.dumps(clean(doc), indent=2, allow_nan=False) + "\n"


def _document(command: str, **body) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, **body}


def _load(path: str) -> np.ndarray:
    try:
        f = read_poly(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except PolyFormatError as exc:
        raise InputError(f"{path}: {exc}") from None
    if len(f) < 2:
        raise InputError("nonconstant polynomial required")
    if len(f) - 1 > VALIDATED_DEGREE:
        log.warning("degree %d is beyond the validated range (<= %d); slices may lose zeros",
                    len(f) - 1, VALIDATED_DEGREE)
    return f


def _slice_poly(f: np.ndarray, family: str) -> np.ndarray:
    """Monic, zero-root-free polynomial to slice; realified for complex circles."""
    m, g = strip_zero_roots(f)
    if m:
        log.info("removed %d zero root(s) before slicing", m)
    if len(g) < 2:
        raise InputError("nothing left to slice after removing zero roots")
    g = monicize(g)
    if family == "circle" and not is_real(g):
        log.info("complex coefficients: slicing f * conj(f) for the circle family")
        g = realify(g)
    if family == "circle":
        g = np.real(g).astype(float)
    elif len(g) < 3:
        raise InputError("line slices need degree >= 2")
    return g


def _section(g: np.ndarray, family: str, value: float):
    if family == "circle":
        if not value > 0:
            raise InputError(f"radius must be positive, got {value}")
        return circle_zeros(g, value)
    return line_zeros(g, value)


# -- commands -------------------------------------------------------------


def cmd_roots(args, cfg: RunConfig, out) -> int:
    f = _load(args.poly)
    results = {}
    for method in cfg.methods:
        results[method] = find_all_roots(f, method, **cfg.tolerances)
    if cfg.fmt == "json":
        out.write(_json(_document(
            "roots",
            degree=len(f) - 1,
            tolerances=cfg.tolerances,
            results={m: [r.to_dict() for r in reps] for m, reps in results.items()},
        )))
    elif cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["method", "index", "re", "im", "residual", "iterations"])
        for m, reps in results.items():
            for k, r in enumerate(reps):
                w.writerow([m, k, repr(r.root.real), repr(r.root.imag), repr(r.residual), r.polish_iterations])
    else:
        for m, reps in results.items():
            out.write(f"{m}: {len(reps)} roots\n")
            for r in reps:
                out.write(f"  {r.root.real:+.15g} {r.root.imag:+.15g}i   |f| = {r.residual:.3e}\n")
    return EXIT_OK


def cmd_slices(args, cfg: RunConfig, out) -> int:
    f = _load(args.poly)
    docs = []
    for family in cfg.methods:
        g = _slice_poly(f, family)
        docs.append(_section(g, family, args.value).to_dict())
    if cfg.fmt == "json":
        out.write(_json(_document("slices", sections=docs)))
    else:
        for d in docs:
            param = "r" if d["family"] == "circle" else "y"
            out.write(f"{d['family']} {param}={d[param]!r} N={d['N']} interleaving={d['interleaving']} "
                      f"min_gap={d['min_gap']!r}\n")
            out.write(f"  alphas: {' '.join(f'{a:.12g}' for a in d['alphas'])}\n")
            out.write(f"  betas:  {' '.join(f'{b:.12g}' for b in d['betas'])}\n")
            if "degenerate" in d:
                out.write(f"  degenerate: {d['degenerate']}\n")
    return EXIT_OK


def cmd_scan(args, cfg: RunConfig, out) -> int:
    if not args.lo < args.hi:
        raise InputError(f"empty range [{args.lo}, {args.hi}]")
    if args.steps < 2:
        raise InputError("at least 2 steps required")
    f = _load(args.poly)
    rows = []
    for family in cfg.methods:
        g = _slice_poly(f, family)
        if family == "circle" and not args.lo > 0:
            raise InputError("radii must be positive")
        for s in np.linspace(args.lo, args.hi, args.steps).tolist():
            sec = _section(g, family, s)
            rows.append({"family": family, "parameter": s, "interleaving": sec.interleaving,
                         "min_gap": sec.min_gap})
    if cfg.fmt == "json":
        out.write(_json(_document("scan", rows=rows)))
    elif cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["family", "parameter", "interleaving", "min_gap"])
        for r in rows:
            w.writerow([r["family"], repr(r["parameter"]), r["interleaving"], repr(r["min_gap"])])
    else:
        for r in rows:
            out.write(f"{r['family']:6s} {r['parameter']:.10g}  {'yes' if r['interleaving'] else 'no '}  "
                      f"{r['min_gap']:.6g}\n")
    return EXIT_OK


def cmd_trace(args, cfg: RunConfig, out) -> int:
    f = _load(args.poly)
    x0, x1, y0, y1 = args.bbox
    try:
        cs = trace(f, (x0, x1, y0, y1), args.resolution)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    meta = {"rstar": None, "bbox": [x0, x1, y0, y1], "resolution": args.resolution, "boundary": None}
    h = monicize(f)
    meta["rstar"] = dominance_radius(np.real(h if is_real(h) else realify(h)).astype(float))
    _, g = strip_zero_roots(h)
    if len(g) >= 2:
        g = np.real(g if is_real(g) else realify(g)).astype(float)
        try:
            rep = find_one_root(g, "circle", **cfg.tolerances)
            meta["boundary"] = {"r0": rep.bracket[1] if rep.bracket else abs(rep.root),
                                "root": [rep.root.real, rep.root.imag]}
        except SearchFailure as exc:
            log.info("no descent boundary for the metadata: %s", exc)
    if cfg.fmt == "csv":
        body = cs.to_csv()
    else:
        body = _json(_document("trace", metadata=meta, **cs.to_dict()))
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
        with open(args.out + ".meta.json", "w", encoding="utf-8") as fh:
            fh.write(_json(_document("trace-metadata", **meta)))
    except OSError as exc:
        raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
    out.write(f"wrote {len(cs.curves)} polylines to {args.out}\n")
    return EXIT_OK


def _verify_one(f: np.ndarray, cfg: RunConfig, tol: float) -> dict:
    oracle = aberth_roots(f)
    entry = {"degree": len(f) - 1, "oracle_min_separation": min_separation(oracle), "methods": {}}
    for method in cfg.methods:
        roots = [r.root for r in find_all_roots(f, method, **cfg.tolerances)]
        entry["methods"][method] = match_root_sets(roots, oracle, tol).to_dict()
    entry["matched"] = all(m["matched"] for m in entry["methods"].values())
    return entry


def cmd_verify(args, cfg: RunConfig, out) -> int:
    if not args.tol >= 0:
        raise InputError(f"tolerance must be non-negative, got {args.tol}")
    if args.poly is None and args.random is None:
        raise InputError("give a polynomial file or --random COUNT")
    if args.poly is not None:
        polys = [("file", _load(args.poly))]
    else:
        if args.random < 1 or args.degree < 1:
            raise InputError("--random and --degree must be positive")
        rng = np.random.default_rng(cfg.seed)
        polys = [(f"random[{k}]", random_monic(rng, args.degree)) for k in range(args.random)]
    entries = []
    for name, f in polys:
        entry = {"name": name, **_verify_one(f, cfg, args.tol)}
        entries.append(entry)
    matched = all(e["matched"] for e in entries)
    if cfg.fmt == "json":
        out.write(_json(_document("verify", seed=cfg.seed, tol=args.tol, matched=matched, cases=entries)))
    else:
        for e in entries:
            for m, r in e["methods"].items():
                out.write(f"{e['name']} {m}: matched={r['matched']} max_distance={r['max_distance']:.3e}\n")
        out.write(f"overall: {'matched' if matched else 'NOT matched'}\n")
    return EXIT_OK if matched else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gauss-interleave",
        description="Polynomial roots from the interleaving of Re f and Im f zeros.",
        epilog="exit codes: 0 ok, 1 bad input, 2 search failure, 3 oracle failure, 4 not matched",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--method", choices=["circle", "line", "both"], default=None,
                        help="slice family (default: both for verify, circle otherwise)")
    common.add_argument("--gap-tol", type=float, default=GAP_TOL, help="smallest alpha-beta gap still counted as interleaving")
    common.add_argument("--s-tol", type=float, default=S_TOL, help="bracket width at which bisection stops")
    common.add_argument("--res-tol", type=float, default=RES_TOL, help="scaled residual needed to accept a root")
    common.add_argument("--format", choices=["json", "csv", "plain"], default="plain")
    common.add_argument("--seed", type=int, default=0, help="seed for --random batches")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="all roots with residuals")
    p.add_argument("poly", help="polynomial file: one coefficient per line, constant term first")
    p.set_defaults(func=cmd_roots, default_method="circle")

    p = sub.add_parser("slices", parents=[common], help="dump one circle or line section")
    p.add_argument("poly")
    p.add_argument("value", type=float, help="radius (circle) or height (line)")
    p.set_defaults(func=cmd_slices, default_method="circle")

    p = sub.add_parser("scan", parents=[common], help="interleaving verdicts over a parameter range")
    p.add_argument("poly")
    p.add_argument("lo", type=float)
    p.add_argument("hi", type=float)
    p.add_argument("--steps", type=int, default=16)
    p.set_defaults(func=cmd_scan, default_method="circle")

    p = sub.add_parser("trace", parents=[common], help="export the curves Re f = 0 and Im f = 0")
    p.add_argument("poly")
    p.add_argument("--bbox", type=float, nargs=4, metavar=("XMIN", "XMAX", "YMIN", "YMAX"),
                   default=[-2.0, 2.0, -2.0, 2.0])
    p.add_argument("--resolution", type=int, default=400)
    p.add_argument("--out", required=True, help="curve file; metadata goes to OUT.meta.json")
    p.set_defaults(func=cmd_trace, default_method="circle")

    p = sub.add_parser("verify", parents=[common], help="compare against the Aberth oracle")
    p.add_argument("poly", nargs="?")
    p.add_argument("--random", type=int, default=None, metavar="COUNT")
    p.add_argument("--degree", type=int, default=8)
    p.add_argument("--tol", type=float, default=1e-6, help="root matching tolerance")
    p.set_defaults(func=cmd_verify, default_method="both")
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            method=args.method or args.default_method,
            gap_tol=args.gap_tol,
            s_tol=args.s_tol,
            res_tol=args.res_tol,
            fmt=args.format,
            seed=args.seed,
        )
        return args.func(args, cfg, out)
    except InputError as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except SearchFailure as exc:
        log.error("search failure: %s (%s)", exc, exc.diagnostics.get("stage", "-"))
        return EXIT_SEARCH
    except OracleFailure as exc:
        log.error("oracle failure: %s", exc)
        return EXIT_ORACLE


if __name__ == "__main__":
    sys.exit(main())
