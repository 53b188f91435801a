"""Necessary-condition checkers for matricial interpolation from the disc into Omega_n.

Each checker returns a CheckReport.  A Pass never certifies that an
interpolant exists; only a Fail is conclusive.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import hypgeom, matspec, poly, symm
from .errors import DatasetError, DegenerateDraw, DomainError, NotInBall, RankAmbiguity
from .numerics import golden_max, min_eigvalsh

DEFAULT_GRID = 2048
DEFAULT_RINGS = 8
DEFAULT_PSD_TOL = 1e-9
DEFAULT_SLACK = 1e-9
MIN_NODE_GAP = 1e-10
GENERATOR_GRID = 1024
GENERATOR_TARGET = 0.9
MAX_REDRAWS = 10
SKIP_WARN_FRACTION = 0.01
# sample points per parallel task in check_necc
NECC_CHUNK = 4096

NOT_SUFFICIENT = "a Pass does not certify that an interpolant exists"


class Verdict(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    INCONCLUSIVE = "Inconclusive"


def _jsonable(x):
    if isinstance(x, complex) or isinstance(x, np.complexfloating):
        return [float(x.real), float(x.imag)]
    if isinstance(x, (float, np.floating)):
        return float(x) if math.isfinite(x) else None
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class CheckReport:
    """Verdict with a signed margin and a witness, plus diagnostics.

    ``margin`` is positive on the passing side of the decision boundary and
    is None when the check is vacuous or could not be evaluated.
    """

    name: str
    verdict: Verdict
    margin: float | None = None
    witness: dict | None = None
    diagnostics: list = field(default_factory=list)

    def __post_init__(self):
        if self.verdict is Verdict.FAIL and not self.witness:
            raise ValueError("a Fail report needs a witness")
        if self.verdict is Verdict.INCONCLUSIVE and not self.diagnostics:
            raise ValueError("an Inconclusive report needs a diagnostic")

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "verdict": self.verdict.value,
            "margin": _jsonable(self.margin),
            "witness": _jsonable(self.witness),
            "diagnostics": list(self.diagnostics),
        }


def _inconclusive(name, message, margin=None, witness=None):
    return CheckReport(name, Verdict.INCONCLUSIVE, margin, witness, [message])


class InterpolationDataset:
    """Nodes (zeta_j, W_j) with distinct zeta_j in the disc and W_j in Omega_n.

    Invalid data raises DatasetError naming the offending node.
    """

    def __init__(self, nodes, cluster_tol: float = poly.DEFAULT_CLUSTER_TOL):
        nodes = list(nodes)
        if not nodes:
            raise DatasetError("a dataset needs at least one node")
        zetas, mats = [], []
        for i, (zeta, W) in enumerate(nodes):
            zeta = complex(zeta)
            try:
                W = matspec.as_matrix(W)
            except DomainError as exc:
                raise DatasetError(f"node {i}: {exc}", node=i) from None
            if not np.all(np.isfinite(W)) or not math.isfinite(abs(zeta)):
                raise DatasetError(f"node {i}: non-finite entries", node=i)
            if not abs(zeta) < 1:
                raise DatasetError(f"node {i}: zeta = {zeta} is not in the open unit disc", node=i)
            if mats and W.shape != mats[0].shape:
                raise DatasetError(
                    f"node {i}: matrix is {W.shape[0]}x{W.shape[1]}, expected {mats[0].shape[0]}x{mats[0].shape[1]}",
                    node=i,
                )
            r = matspec.spectral_radius(W, cluster_tol)
            if not r < 1:
                raise DatasetError(f"node {i}: spectral radius {r:.6g} is not < 1", node=i)
            for j, z in enumerate(zetas):
                if abs(z - zeta) <= MIN_NODE_GAP:
                    raise DatasetError(f"node {i}: zeta coincides with node {j}", node=i)
            zetas.append(zeta)
            mats.append(W)
        self.zetas = tuple(zetas)
        self.matrices = tuple(mats)

    @property
    def M(self) -> int:
        return len(self.zetas)

    @property
    def dim(self) -> int:
        return self.matrices[0].shape[0]

    def __iter__(self):
        return iter(zip(self.zetas, self.matrices))

    @classmethod
    def from_json(cls, doc: dict, cluster_tol: float = poly.DEFAULT_CLUSTER_TOL) -> "InterpolationDataset":
        """Parse {version, n, nodes: [{zeta: [re, im], W: [[[re, im], ...], ...]}]}."""
        if not isinstance(doc, dict):
            raise DatasetError("dataset must be a JSON object")
        if doc.get("version") != 1:
            raise DatasetError(f"unsupported dataset version {doc.get('version')!r}")
        n = doc.get("n")
        raw = doc.get("nodes")
        if not isinstance(n, int) or n < 1:
            raise DatasetError(f"'n' must be a positive integer, got {n!r}")
        if not isinstance(raw, list):
            raise DatasetError("'nodes' must be a list")
        nodes = []
        for i, node in enumerate(raw):
            try:
                zeta = _parse_complex(node["zeta"])
                rows = node["W"]
                if len(rows) != n or any(len(row) != n for row in rows):
                    raise DatasetError(f"node {i}: W must be {n}x{n}", node=i)
                W = np.array([[_parse_complex(x) for x in row] for row in rows], dtype=complex)
            except DatasetError:
                raise
            except (KeyError, TypeError, ValueError) as exc:
                raise DatasetError(f"node {i}: malformed entry ({exc})", node=i) from None
            nodes.append((zeta, W))
        return cls(nodes, cluster_tol)

    def to_json(self) -> dict:
        return {
            "version": 1,
            "n": self.dim,
            "nodes": [
                {
                    "zeta": [z.real, z.imag],
                    "W": [[[x.real, x.imag] for x in row] for row in W.tolist()],
                }
                for z, W in self
            ],
        }


def _parse_complex(x) -> complex:
    if isinstance(x, (list, tuple)) and len(x) == 2:
        re, im = x
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in (re, im)):
            return complex(re, im)
    raise ValueError(f"expected [re, im], got {x!r}")


def _structure(data, cluster_tol, rank_tol):
    # per-node summaries; the first RankAmbiguity is returned as a message
    out = []
    for i, W in enumerate(data.matrices):
        try:
            out.append(matspec.spectral_summary(W, cluster_tol, rank_tol))
        except RankAmbiguity as exc:
            return None, f"RankAmbiguity at node {i}: {exc}"
    return out, None


def _derogatory_note(summaries):
    bad = [i for i, s in enumerate(summaries) if not s.is_non_derogatory]
    if not bad:
        return None
    return (
        f"NotNonDerogatory: node(s) {bad} derogatory; the condition is stated only for "
        "non-derogatory data and was evaluated formally"
    )


def _sample_points(grid, rings):
    theta = 2 * np.pi * np.arange(grid) / grid
    circle = np.exp(1j * theta)
    pts = [circle]
    for k in range(1, rings + 1):
        pts.append(k / (rings + 1) * circle)
    pts.append(np.zeros(1, dtype=complex))
    return np.concatenate(pts)


def _f_values(points, data):
    # rows: nodes; columns: sample points; NaN where the denominator vanishes
    vals = np.empty((data.M, points.size), dtype=complex)
    for j, W in enumerate(data.matrices):
        num, den = symm._f_parts(points, symm.pi_n(W))
        bad = np.abs(den) <= symm.DENOM_TOL
        with np.errstate(divide="ignore", invalid="ignore"):
            vals[j] = np.where(bad, np.nan, num / den)
    return vals


def _formal_verdict(name, ok, margin, witness, note):
    # derogatory data: only a formal pass is reported, a formal failure proves nothing
    if note is None:
        if ok:
            return CheckReport(name, Verdict.PASS, margin, witness)
        return CheckReport(name, Verdict.FAIL, margin, witness)
    if ok:
        return CheckReport(name, Verdict.PASS, margin, witness, [note])
    return _inconclusive(name, note + "; formal evaluation fails", margin, witness)


def check_necc(
    data: InterpolationDataset,
    boundary_grid: int = DEFAULT_GRID,
    interior_rings: int = DEFAULT_RINGS,
    psd_tol: float = DEFAULT_PSD_TOL,
    cluster_tol: float = poly.DEFAULT_CLUSTER_TOL,
    rank_tol: float = matspec.DEFAULT_RANK_TOL,
    serial: bool = False,
) -> CheckReport:
    """Positivity of the Pick-type matrix [(1 - conj(f_j) f_k) / (1 - conj(zeta_j) zeta_k)].

    f_j = f(z; W_j) is sampled on the unit circle, on ``interior_rings``
    concentric circles of radii k/(rings+1) and at 0.  The margin is the
    smallest eigenvalue found; the witness is where it occurs.
    """
    name = "necc"
    summaries, amb = _structure(data, cluster_tol, rank_tol)
    if amb:
        return _inconclusive(name, amb)
    note = _derogatory_note(summaries)
    points = _sample_points(boundary_grid, interior_rings)
    f = _f_values(points, data)
    skip = np.any(np.isnan(f), axis=0)
    z = np.array(data.zetas)
    kernel = 1.0 / (1.0 - np.conj(z)[:, None] * z[None, :])
    keep = np.nonzero(~skip)[0]
    diags = []
    if skip.sum():
        msg = f"{int(skip.sum())} of {points.size} sample points skipped (vanishing denominator)"
        diags.append(msg)
    if keep.size == 0:
        return _inconclusive(name, "every sample point was skipped")

    def work(lo):
        idx = keep[lo : lo + NECC_CHUNK]
        fv = f[:, idx].T
        P = (1.0 - np.conj(fv)[:, :, None] * fv[:, None, :]) * kernel[None]
        w = min_eigvalsh(P)
        k = int(np.argmin(w))
        return float(w[k]), int(idx[k])

    starts = list(range(0, keep.size, NECC_CHUNK))
    if serial or len(starts) == 1:
        parts = [work(lo) for lo in starts]
    else:
        with ThreadPoolExecutor(max_workers=min(len(starts), os.cpu_count() or 1)) as ex:
            parts = list(ex.map(work, starts))
    margin, at = min(parts, key=lambda p: (p[0], p[1]))
    witness = {"z": complex(points[at]), "min_eigenvalue": margin}
    rep = _formal_verdict(name, margin >= -psd_tol, margin, witness, note)
    rep.diagnostics.extend(diags)
    return rep


def _two_point_ratio(z, s1, s2):
    f1 = symm.f_scalar(z, s1)
    f2 = symm.f_scalar(z, s2)
    return np.abs(f1 - f2) / np.abs(1 - np.conj(f2) * f1)


def two_point_sup(W1, W2, boundary_grid: int = DEFAULT_GRID, refine: bool = True):
    """(sup over the circle of |f1 - f2| / |1 - conj(f2) f1|, arg-sup z, skipped nodes)."""
    s1, s2 = symm.pi_n(W1), symm.pi_n(W2)
    theta = 2 * np.pi * np.arange(boundary_grid) / boundary_grid
    pts = np.exp(1j * theta)
    n1, d1 = symm._f_parts(pts, s1)
    n2, d2 = symm._f_parts(pts, s2)
    skip = (np.abs(d1) <= symm.DENOM_TOL) | (np.abs(d2) <= symm.DENOM_TOL)
    with np.errstate(divide="ignore", invalid="ignore"):
        f1, f2 = n1 / d1, n2 / d2
        vals = np.abs(f1 - f2) / np.abs(1 - np.conj(f2) * f1)
    vals = np.where(skip | ~np.isfinite(vals), -np.inf, vals)
    k = int(np.argmax(vals))
    best_t, best = theta[k], float(vals[k])
    if refine and math.isfinite(best):
        step = 2 * np.pi / boundary_grid

        def g(t):
            try:
                return float(_two_point_ratio(complex(np.exp(1j * t)), s1, s2))
            except ZeroDivisionError:
                return -math.inf

        t, v = golden_max(g, best_t - step, best_t + step, tol=1e-14)
        if v > best:
            best_t, best = t, v
    return best, complex(np.exp(1j * best_t)), int(skip.sum())


def check_necc_two_point(
    data: InterpolationDataset,
    boundary_grid: int = DEFAULT_GRID,
    slack: float = DEFAULT_SLACK,
    cluster_tol: float = poly.DEFAULT_CLUSTER_TOL,
    rank_tol: float = matspec.DEFAULT_RANK_TOL,
    refine: bool = True,
) -> CheckReport:
    """Two-node form: sup_z |f1 - f2| / |1 - conj(f2) f1| <= pseudo_dist(zeta_1, zeta_2)."""
    name = "necc_two_point"
    if data.M != 2:
        raise DomainError(f"the two-point check needs exactly 2 nodes, got {data.M}")
    summaries, amb = _structure(data, cluster_tol, rank_tol)
    if amb:
        return _inconclusive(name, amb)
    note = _derogatory_note(summaries)
    sup, z, skipped = two_point_sup(*data.matrices, boundary_grid, refine)
    if not math.isfinite(sup):
        return _inconclusive(name, "every boundary node was skipped")
    dist = hypgeom.pseudo_dist(*data.zetas)
    margin = dist - sup
    witness = {"z": z, "sup": sup, "pseudo_dist": dist}
    rep = _formal_verdict(name, sup <= dist + slack, margin, witness, note)
    if skipped:
        rep.diagnostics.append(f"{skipped} of {boundary_grid} boundary nodes skipped")
    return rep


def schwarz_products(S1: matspec.SpectralSummary, S2: matspec.SpectralSummary):
    """The two sides of the Schwarz-type bound.

    left = max over mu in sigma(W2) of prod over lam in sigma(W1) of M(mu, lam)^index(lam),
    right is the same with the roles swapped.  Returns (left, right, witness).
    """

    def side(inner, outer):
        best, arg = -1.0, None
        for mu in outer.eigen:
            prod = 1.0
            for lam in inner.eigen:
                prod *= hypgeom.pseudo_dist(mu.value, lam.value) ** lam.index
            if prod > best:
                best, arg = prod, mu.value
        return best, arg

    left, mu = side(S1, S2)
    right, lam = side(S2, S1)
    witness = {"left_eigenvalue": mu, "right_eigenvalue": lam}
    return left, right, witness


def _schwarz_pair(S1, S2, z1, z2, slack):
    left, right, w = schwarz_products(S1, S2)
    L = max(left, right)
    dist = hypgeom.pseudo_dist(z1, z2)
    if left >= right:
        witness = {"side": "W2 over W1", "eigenvalue": w["left_eigenvalue"]}
    else:
        witness = {"side": "W1 over W2", "eigenvalue": w["right_eigenvalue"]}
    witness.update(L=L, left=left, right=right, pseudo_dist=dist)
    return L <= dist + slack, dist - L, witness


def check_schwarz(
    data: InterpolationDataset,
    slack: float = DEFAULT_SLACK,
    cluster_tol: float = poly.DEFAULT_CLUSTER_TOL,
    rank_tol: float = matspec.DEFAULT_RANK_TOL,
) -> CheckReport:
    """Schwarz-type eigenvalue bound max(left, right) <= pseudo_dist(zeta_1, zeta_2).

    Valid for derogatory data too.  With more than two nodes every pair is
    checked and the pair with the smallest margin is reported.
    """
    name = "schwarz"
    if data.M == 1:
        return CheckReport(name, Verdict.PASS, None, None, ["single node: vacuous"])
    summaries, amb = _structure(data, cluster_tol, rank_tol)
    if amb:
        return _inconclusive(name, amb)
    worst = None
    for i, j in combinations(range(data.M), 2):
        ok, margin, witness = _schwarz_pair(summaries[i], summaries[j], data.zetas[i], data.zetas[j], slack)
        if worst is None or margin < worst[1]:
            witness["nodes"] = [i, j]
            worst = (ok, margin, witness)
    ok, margin, witness = worst
    return CheckReport(name, Verdict.PASS if ok else Verdict.FAIL, margin, witness)


def _selfmap_rhs(rX, r0, d):
    root = rX ** (1.0 / d)
    return (root + r0) / (1 + r0 * root)


def check_selfmap_bound(
    G,
    X,
    slack: float = DEFAULT_SLACK,
    cluster_tol: float = poly.DEFAULT_CLUSTER_TOL,
    rank_tol: float = matspec.DEFAULT_RANK_TOL,
) -> CheckReport:
    """r(G(X)) <= (r(X)^(1/d) + r(G(0))) / (1 + r(G(0)) r(X)^(1/d)), d = deg minpoly of G(0).

    ``X`` must lie in Omega_n (NotInBall otherwise).  Holomorphy of G on
    Omega_n is the caller's responsibility; only G(0) and G(X) are checked.
    """
    name = "selfmap_bound"
    X = matspec.as_matrix(X)
    rX = matspec.spectral_radius(X, cluster_tol)
    if not rX < 1:
        raise NotInBall(f"r(X) = {rX:.6g} is not < 1", radius=rX)
    n = X.shape[0]
    G0 = matspec.as_matrix(G(np.zeros((n, n), dtype=complex)))
    GX = matspec.as_matrix(G(X))
    try:
        summary0 = matspec.spectral_summary(G0, cluster_tol, rank_tol)
    except RankAmbiguity as exc:
        return _inconclusive(name, f"RankAmbiguity at G(0): {exc}")
    r0 = summary0.spectral_radius
    rGX = matspec.spectral_radius(GX, cluster_tol)
    if not r0 < 1:
        return _inconclusive(name, f"G(0) is not in the spectral unit ball (r = {r0:.6g})")
    if not rGX < 1:
        return _inconclusive(name, f"G(X) is not in the spectral unit ball (r = {rGX:.6g})")
    d = summary0.min_poly_degree
    rhs = _selfmap_rhs(rX, r0, d)
    margin = rhs - rGX
    witness = {"r_GX": rGX, "rhs": rhs, "r_X": rX, "r_G0": r0, "d_G": d}
    return CheckReport(name, Verdict.PASS if margin >= -slack else Verdict.FAIL, margin, witness)


def _batched_radius(mats):
    # LAPACK eigenvalues for the many-matrix scaling step of the generator
    return np.abs(np.linalg.eigvals(mats)).max(axis=-1)


class MatrixPolynomialMap:
    """F(zeta) = scale * sum_j C_j zeta^j."""

    def __init__(self, coeffs, scale: float = 1.0):
        cs = [matspec.as_matrix(C) for C in coeffs]
        if not cs or any(C.shape != cs[0].shape for C in cs):
            raise DomainError("coefficients must be a non-empty list of equal-size square matrices")
        if not scale > 0:
            raise DomainError("scale must be positive")
        self.coeffs = tuple(cs)
        self.scale = float(scale)

    @property
    def dim(self) -> int:
        return self.coeffs[0].shape[0]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, zeta) -> np.ndarray:
        zeta = np.asarray(zeta, dtype=complex)
        acc = np.broadcast_to(self.coeffs[-1], zeta.shape + self.coeffs[-1].shape).copy()
        for C in reversed(self.coeffs[:-1]):
            acc = acc * zeta[..., None, None] + C
        return self.scale * acc

    def boundary_radius(self, grid: int = GENERATOR_GRID) -> float:
        """max over ``grid`` points of the unit circle of r(F)."""
        pts = np.exp(2j * np.pi * np.arange(grid) / grid)
        return float(_batched_radius(self(pts)).max())


def generate_map(dim: int, degree: int, seed: int, target: float = GENERATOR_TARGET) -> MatrixPolynomialMap:
    """Random polynomial map with boundary spectral radius scaled to ``target``.

    Entries are uniform in [-1, 1] + i[-1, 1]; all coefficients are scaled by
    target / s with s the maximum of r(F) over 1024 boundary points.  By
    subharmonicity of r o F the whole disc is then mapped into Omega_n.
    """
    if dim < 2 or degree < 0:
        raise DomainError(f"need dim >= 2 and degree >= 0, got dim={dim}, degree={degree}")
    rng = np.random.default_rng(seed)
    for _ in range(MAX_REDRAWS):
        shape = (degree + 1, dim, dim)
        C = rng.uniform(-1, 1, shape) + 1j * rng.uniform(-1, 1, shape)
        F = MatrixPolynomialMap(list(C))
        s = F.boundary_radius()
        if s > 0:
            return MatrixPolynomialMap(list(C), target / s)
        if degree == 0:
            return F
    raise DegenerateDraw(f"{MAX_REDRAWS} draws gave a map with zero boundary spectral radius")


def _random_disc_points(rng, count, radius=1.0):
    r = radius * np.sqrt(rng.uniform(0, 1, count))
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, count))


def verify_lemma_key(
    F: MatrixPolynomialMap,
    samples: int,
    seed: int = 0,
    slack: float = 1e-7,
    cluster_tol: float = poly.DEFAULT_CLUSTER_TOL,
    rank_tol: float = matspec.DEFAULT_RANK_TOL,
) -> CheckReport:
    """|B(mu)| <= |zeta| for every eigenvalue mu of F(zeta), B built from F(0).

    B has zeros at the eigenvalues of F(0) with their indices as exponents.
    ``samples`` points zeta are drawn uniformly from the disc.
    """
    name = "lemma_key"
    try:
        B = hypgeom.BlaschkeProduct.from_summary(matspec.spectral_summary(F(0), cluster_tol, rank_tol))
    except RankAmbiguity as exc:
        return _inconclusive(name, f"RankAmbiguity at F(0): {exc}")
    rng = np.random.default_rng(seed)
    worst = None
    for zeta in _random_disc_points(rng, samples):
        for cl in matspec.eigenvalues(F(zeta), cluster_tol):
            excess = abs(hypgeom.blaschke_eval(B, cl.center)) - abs(zeta)
            if worst is None or excess > worst[0]:
                worst = (excess, complex(zeta), cl.center)
    excess, zeta, mu = worst
    witness = {"zeta": zeta, "mu": mu, "excess": excess}
    return CheckReport(name, Verdict.PASS if excess <= slack else Verdict.FAIL, -excess, witness)


def trace_surrogate(F: MatrixPolynomialMap, eta: complex):
    """G(X) = F(eta tr(X) / n), holomorphic from Omega_n into Omega_n for |eta| <= 1."""
    eta = complex(eta)
    if not abs(eta) <= 1:
        raise DomainError(f"|eta| must be <= 1, got {eta}")

    def G(X):
        X = matspec.as_matrix(X)
        return F(eta * np.trace(X) / X.shape[0])

    return G


def ransford_white_map(G, n: int, cluster_tol: float = poly.DEFAULT_CLUSTER_TOL, rank_tol: float = matspec.DEFAULT_RANK_TOL):
    """H = B o G with B the matrix Blaschke product of G(0), so that H(0) = 0."""
    G0 = matspec.as_matrix(G(np.zeros((n, n), dtype=complex)))
    B = hypgeom.BlaschkeProduct.from_summary(matspec.spectral_summary(G0, cluster_tol, rank_tol))

    def H(X):
        return hypgeom.blaschke_matrix(B, G(X))

    return H


def random_ball_matrix(rng, n: int, radius: float) -> np.ndarray:
    """Random n x n matrix rescaled to spectral radius ``radius``."""
    A = rng.uniform(-1, 1, (n, n)) + 1j * rng.uniform(-1, 1, (n, n))
    r = matspec.spectral_radius(A)
    return A * (radius / r)


def run_all(
    data: InterpolationDataset,
    grid: int = DEFAULT_GRID,
    rings: int = DEFAULT_RINGS,
    psd_tol: float = DEFAULT_PSD_TOL,
    cluster_tol: float = poly.DEFAULT_CLUSTER_TOL,
    rank_tol: float = matspec.DEFAULT_RANK_TOL,
    serial: bool = False,
) -> list:
    """Every checker that applies to ``data``."""
    reports = [check_necc(data, grid, rings, psd_tol, cluster_tol, rank_tol, serial)]
    if data.M == 2:
        reports.append(check_necc_two_point(data, grid, cluster_tol=cluster_tol, rank_tol=rank_tol))
    reports.append(check_schwarz(data, cluster_tol=cluster_tol, rank_tol=rank_tol))
    return reports


def overall_verdict(reports) -> Verdict:
    verdicts = {r.verdict for r in reports}
    if Verdict.FAIL in verdicts:
        return Verdict.FAIL
    if Verdict.INCONCLUSIVE in verdicts:
        return Verdict.INCONCLUSIVE
    return Verdict.PASS
