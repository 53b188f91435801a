"""Command-line front end.

    specball analyze DATA.json [--json] [--grid N] [--rings K] ...
    specball repro {ex1,obs2,sharpness} [params]
    specball gn member S
    specball gn pn S T

Exit codes: 0 pass, 1 input error, 2 fail, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import checks, matspec, poly, symm
from .errors import DomainError, RankAmbiguity, SpecballError

EXIT_PASS, EXIT_INPUT, EXIT_FAIL, EXIT_INCONCLUSIVE = 0, 1, 2, 3
REPRO_TOL = 1e-6

_EXIT = {
    checks.Verdict.PASS: EXIT_PASS,
    checks.Verdict.FAIL: EXIT_FAIL,
    checks.Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


def _c(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _fmt(z) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.10g}"
    return f"{z.real:.10g}{z.imag:+.10g}j"


def _emit(doc: dict, as_json: bool, lines: list, out=None):
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _settings(args) -> dict:
    return {
        "grid": args.grid,
        "rings": args.rings,
        "psd_tol": args.psd_tol,
        "cluster_tol": args.cluster_tol,
        "rank_tol": args.rank_tol,
        "seed": args.seed,
        "serial": args.serial,
    }


def _node_summary(i, zeta, W, args) -> dict:
    entry = {"index": i, "zeta": _c(zeta)}
    try:
        s = matspec.spectral_summary(W, args.cluster_tol, args.rank_tol)
    except RankAmbiguity as exc:
        entry["error"] = f"RankAmbiguity: {exc}"
        entry["spectral_radius"] = matspec.spectral_radius(W, args.cluster_tol)
        return entry
    entry.update(
        eigenvalues=[{"value": _c(e.value), "alg_mult": e.alg_mult, "index": e.index} for e in s.eigen],
        min_poly_degree=s.min_poly_degree,
        non_derogatory=s.is_non_derogatory,
        spectral_radius=s.spectral_radius,
        diagnostics=s.diagnostics(),
    )
    return entry


def cmd_analyze(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            doc = json.load(fh)
        data = checks.InterpolationDataset.from_json(doc, args.cluster_tol)
    except (OSError, json.JSONDecodeError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    nodes = [_node_summary(i, z, W, args) for i, (z, W) in enumerate(data)]
    reports = checks.run_all(
        data, args.grid, args.rings, args.psd_tol, args.cluster_tol, args.rank_tol, args.serial
    )
    verdict = checks.overall_verdict(reports)
    out = {
        "settings": _settings(args),
        "nodes": nodes,
        "checks": [r.to_dict() for r in reports],
        "verdict": verdict.value,
        "note": checks.NOT_SUFFICIENT,
    }
    lines = [f"dataset {args.path}: M = {data.M}, n = {data.dim}"]
    for node in nodes:
        lines.append(f"node {node['index']}: zeta = {_fmt(complex(*node['zeta']))}, r(W) = {node['spectral_radius']:.10g}")
        if "error" in node:
            lines.append(f"  {node['error']}")
            continue
        for e in node["eigenvalues"]:
            lines.append(
                f"  eigenvalue {_fmt(complex(*e['value']))}: algebraic multiplicity {e['alg_mult']}, index {e['index']}"
            )
        lines.append(
            f"  minimal polynomial degree {node['min_poly_degree']}, "
            f"{'non-derogatory' if node['non_derogatory'] else 'derogatory'}"
        )
        lines.extend(f"  {d}" for d in node["diagnostics"])
    for r in reports:
        margin = "n/a" if r.margin is None else f"{r.margin:.6g}"
        lines.append(f"{r.name}: {r.verdict.value} (margin {margin})")
        if r.witness and r.verdict is not checks.Verdict.PASS:
            lines.append(f"  witness: {json.dumps(checks._jsonable(r.witness), sort_keys=True)}")
        lines.extend(f"  {d}" for d in r.diagnostics)
    lines.append(f"overall: {verdict.value} ({checks.NOT_SUFFICIENT})")
    _emit(out, args.json, lines)
    return _EXIT[verdict]


def _table(rows):
    # rows: (quantity, expected, computed)
    out, lines, ok = [], [], True
    width = max(len(r[0]) for r in rows)
    lines.append(f"{'quantity'.ljust(width)}  {'expected':>16}  {'computed':>16}  {'deviation':>10}")
    for name, expected, computed in rows:
        dev = abs(computed - expected)
        ok = ok and dev < REPRO_TOL
        out.append({"quantity": name, "expected": expected, "computed": computed, "deviation": dev})
        lines.append(f"{name.ljust(width)}  {expected:16.12f}  {computed:16.12f}  {dev:10.2e}")
    return out, lines, ok


def _repro_ex1(args):
    n, d, zeta = args.n, args.d, complex(args.zeta)
    W1 = matspec.example_Fd(n, d, 0)
    W2 = matspec.example_Fd(n, d, zeta)
    data = checks.InterpolationDataset([(0, W1), (zeta, W2)], args.cluster_tol)
    rep = checks.check_schwarz(data, cluster_tol=args.cluster_tol, rank_tol=args.rank_tol)
    w = rep.witness
    rows = [
        ("product over sigma(W1), max on sigma(W2)", abs(zeta), w["left"]),
        ("product over sigma(W2), max on sigma(W1)", abs(zeta) ** 2, w["right"]),
        ("schwarz margin", 0.0, rep.margin),
    ]
    return {"n": n, "d": d, "zeta": _c(zeta)}, rows, [rep]


def obs2_data(m: int, alpha: complex, zeta2: complex | None = None, cluster_tol=poly.DEFAULT_CLUSTER_TOL):
    """Two nilpotent m-blocks at 0 and the companion matrix of z^(2m) - alpha z^m at zeta2.

    zeta2 defaults to the midpoint of the window m|a|/(2m - m|a|) < |zeta2| < |a|.
    """
    if m < 1 or not 0 < abs(alpha) < 1:
        raise DomainError(f"need m >= 1 and 0 < |alpha| < 1, got m={m}, alpha={alpha}")
    n = 2 * m
    W1 = np.zeros((n, n), dtype=complex)
    for b in range(2):
        for i in range(1, m):
            W1[b * m + i, b * m + i - 1] = 1.0
    coeffs = [0j] * (n + 1)
    coeffs[n] = 1.0
    coeffs[m] = -alpha
    W2 = matspec.companion(poly.ComplexPolynomial(coeffs))
    low = m * abs(alpha) / (2 * m - m * abs(alpha))
    if zeta2 is None:
        zeta2 = (low + abs(alpha)) / 2
    return checks.InterpolationDataset([(0, W1), (zeta2, W2)], cluster_tol), low


def _repro_obs2(args):
    m, alpha = args.m, complex(args.alpha)
    data, low = obs2_data(m, alpha, None if args.zeta2 is None else complex(args.zeta2), args.cluster_tol)
    tp = checks.check_necc_two_point(data, args.grid, cluster_tol=args.cluster_tol, rank_tol=args.rank_tol)
    necc = checks.check_necc(data, args.grid, args.rings, args.psd_tol, args.cluster_tol, args.rank_tol, args.serial)
    sch = checks.check_schwarz(data, cluster_tol=args.cluster_tol, rank_tol=args.rank_tol)
    rows = [
        ("two-point boundary supremum", low, tp.witness["sup"]),
        ("product over sigma(W1), max on sigma(W2)", abs(alpha), sch.witness["left"]),
        ("product over sigma(W2), max on sigma(W1)", 0.0, sch.witness["right"]),
    ]
    params = {"m": m, "alpha": _c(alpha), "zeta2": _c(data.zetas[1]), "window": [low, abs(alpha)]}
    return params, rows, [tp, necc, sch]


def sharpness_matrix(n: int, lam: complex) -> np.ndarray:
    """lam I plus the full nilpotent shift: a single eigenvalue of multiplicity n."""
    A = lam * np.eye(n, dtype=complex)
    A[np.arange(1, n), np.arange(n - 1)] = 1.0
    return A


def _repro_sharpness(args):
    n, d, lam = args.n, args.d, complex(args.lam)
    if not 0 < abs(lam) < 1:
        raise DomainError(f"need 0 < |lam| < 1, got {lam}")
    A = sharpness_matrix(n, lam)

    def G(X):
        return matspec.sharpness_map(d, n, X)

    rep = checks.check_selfmap_bound(G, A, cluster_tol=args.cluster_tol, rank_tol=args.rank_tol)
    w = rep.witness
    target = abs(lam) ** (1.0 / d)
    rows = [
        ("degree of minimal polynomial of G(0)", float(d), float(w["d_G"])),
        ("r(G(A))", target, w["r_GX"]),
        ("right-hand side of the bound", target, w["rhs"]),
        ("margin", 0.0, rep.margin),
    ]
    return {"n": n, "d": d, "lam": _c(lam)}, rows, [rep]


_REPRO = {"ex1": _repro_ex1, "obs2": _repro_obs2, "sharpness": _repro_sharpness}


def cmd_repro(args) -> int:
    try:
        params, rows, reports = _REPRO[args.example](args)
    except (DomainError, RankAmbiguity) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    table, lines, ok = _table(rows)
    for r in reports:
        margin = "n/a" if r.margin is None else f"{r.margin:.6g}"
        lines.append(f"{r.name}: {r.verdict.value} (margin {margin})")
    lines.append("all deviations < 1e-06" if ok else "some deviation >= 1e-06")
    doc = {
        "example": args.example,
        "params": params,
        "rows": table,
        "checks": [r.to_dict() for r in reports],
        "ok": ok,
        "settings": _settings(args),
    }
    _emit(doc, args.json, [f"repro {args.example} {json.dumps(params, sort_keys=True)}"] + lines)
    return EXIT_PASS if ok else EXIT_FAIL


def parse_point(text: str) -> np.ndarray:
    """Comma-separated complex coordinates, e.g. '0.5,-0.1+0.2j'."""
    try:
        vals = [complex(t.strip().replace(" ", "")) for t in text.split(",")]
    except ValueError:
        raise DomainError(f"cannot parse point {text!r}") from None
    if not vals or not all(math.isfinite(abs(v)) for v in vals):
        raise DomainError(f"cannot parse point {text!r}")
    return np.array(vals, dtype=complex)


def cmd_gn(args) -> int:
    try:
        if args.gn_command == "member":
            S = parse_point(args.S)
            inside, margin = symm.in_Gn(S, args.cluster_tol)
            doc = {"point": [_c(s) for s in S], "member": bool(inside), "margin": margin}
            _emit(doc, args.json, [f"in G_{S.size}: {inside} (margin {margin:.10g})"])
            return EXIT_PASS if inside else EXIT_FAIL
        S, T = parse_point(args.S), parse_point(args.T)
        # a lone 0 stands for the origin of the other point's space
        if S.size == 1 and S[0] == 0:
            S = np.zeros(T.size, dtype=complex)
        if T.size == 1 and T[0] == 0:
            T = np.zeros(S.size, dtype=complex)
        res = symm.pn_distance_report(S, T, args.grid, refine=not args.no_refine, serial=args.serial)
    except (DomainError, SpecballError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    doc = res.to_dict()
    lines = [
        f"p_n = {res.value:.12g}",
        "argmax Z = (" + ", ".join(_fmt(z) for z in res.argmax) + ")",
        f"grid {res.grid} per angle, {res.nodes} nodes, {res.skipped} skipped, refined: {res.refined}",
    ] + res.warnings
    _emit(doc, args.json, lines)
    return EXIT_PASS


def _common(parser, grid_default):
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--grid", type=int, default=grid_default, help="boundary grid size")
    parser.add_argument("--rings", type=int, default=checks.DEFAULT_RINGS, help="interior sampling rings")
    parser.add_argument("--psd-tol", type=float, default=checks.DEFAULT_PSD_TOL)
    parser.add_argument("--cluster-tol", type=float, default=poly.DEFAULT_CLUSTER_TOL)
    parser.add_argument("--rank-tol", type=float, default=matspec.DEFAULT_RANK_TOL)
    parser.add_argument("--seed", type=int, default=0, help="recorded in reports; no command draws random numbers")
    parser.add_argument("--serial", action="store_true", help="disable thread-parallel grid evaluation")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="specball", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="spectral summaries and condition checks for a dataset")
    a.add_argument("path")
    _common(a, checks.DEFAULT_GRID)
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("repro", help="reproduce the worked examples")
    r.add_argument("example", choices=sorted(_REPRO))
    r.add_argument("--n", type=int, default=None)
    r.add_argument("--d", type=int, default=None)
    r.add_argument("--zeta", default="0.4")
    r.add_argument("--m", type=int, default=3)
    r.add_argument("--alpha", default="0.5")
    r.add_argument("--zeta2", default=None)
    r.add_argument("--lam", default="0.49")
    _common(r, 4096)
    r.set_defaults(func=cmd_repro)

    g = sub.add_parser("gn", help="symmetrized polydisc queries")
    gsub = g.add_subparsers(dest="gn_command", required=True)
    m = gsub.add_parser("member", help="membership in G_n")
    m.add_argument("S", help="comma-separated coordinates")
    _common(m, None)
    pn = gsub.add_parser("pn", help="the distance p_n on G_n")
    pn.add_argument("S")
    pn.add_argument("T")
    pn.add_argument("--no-refine", action="store_true")
    _common(pn, None)
    g.set_defaults(func=cmd_gn)
    return p


_REPRO_DEFAULTS = {"ex1": (5, 3), "sharpness": (4, 2)}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "repro" and args.example in _REPRO_DEFAULTS:
        dn, dd = _REPRO_DEFAULTS[args.example]
        args.n = dn if args.n is None else args.n
        args.d = dd if args.d is None else args.d
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
