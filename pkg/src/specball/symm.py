"""The symmetrized polydisc G_n.

A point S = (s_1, ..., s_n) stands for the monic polynomial
z^n + sum_j (-1)^j s_j z^(n-j); S lies in G_n when all its roots are in the
open unit disc.  Matrices enter through Pi_n, which sends W to the
coefficients of its characteristic polynomial.
"""

from __future__ import annotations

import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import matspec, poly
from .errors import DenominatorVanishes, DomainError
from .numerics import golden_max

DENOM_TOL = 1e-14
SKIP_WARN_FRACTION = 0.01
# nodes per chunk of the final torus stage
CHUNK = 1 << 18


def as_point(S) -> np.ndarray:
    s = np.atleast_1d(np.asarray(S, dtype=complex))
    if s.ndim != 1 or s.size < 1:
        raise DomainError(f"a point of C^n needs n >= 1 coordinates, got shape {s.shape}")
    return s


def pi_n(W) -> np.ndarray:
    """(s_1(W), ..., s_n(W)) from the characteristic polynomial."""
    return matspec.symmetric_functions(W)


def point_poly(S) -> poly.ComplexPolynomial:
    """The monic polynomial z^n + sum_j (-1)^j s_j z^(n-j) attached to S."""
    s = as_point(S)
    n = s.size
    coeffs = [0j] * (n + 1)
    coeffs[n] = 1 + 0j
    for j in range(1, n + 1):
        coeffs[n - j] = (-1) ** j * s[j - 1]
    return poly.ComplexPolynomial(coeffs)


def _f_parts(z, s):
    n = s.size
    z = np.asarray(z, dtype=complex)
    num = np.zeros_like(z)
    den = np.zeros_like(z)
    full = np.concatenate(([1 + 0j], s))
    # Horner in z for both sums
    for j in range(n, 0, -1):
        num = num * z + j * full[j] * (-1) ** j
    for j in range(n - 1, -1, -1):
        den = den * z + (n - j) * full[j] * (-1) ** j
    return num, den


def f_scalar(z, S):
    """sum_j j s_j (-1)^j z^(j-1) / sum_{j<n} (n-j) s_j (-1)^j z^j with s_0 = 1.

    ``z`` may be an array.  Raises DenominatorVanishes when some denominator
    has modulus <= 1e-14.
    """
    s = as_point(S)
    num, den = _f_parts(z, s)
    bad = np.abs(den) <= DENOM_TOL
    if np.any(bad):
        zb = np.asarray(z, dtype=complex)[bad] if np.ndim(z) else complex(z)
        raise DenominatorVanishes(f"denominator of f vanishes at z = {np.ravel(zb)[0]:.6g}", z=zb)
    out = num / den
    return complex(out) if np.ndim(out) == 0 else out


def f_matrix(z, W):
    """The rational function attached to a matrix: f_scalar(z, pi_n(W))."""
    return f_scalar(z, pi_n(W))


def _coord_map_arrays(z, s):
    # s has shape (n, ...) broadcasting against z
    n = s.shape[0]
    den = n - z * s[0]
    out = np.stack([((n - j) * s[j - 1] - z * (j + 1) * s[j]) / den for j in range(1, n)])
    return out, den


def coord_map(z, S) -> np.ndarray:
    """f_n(z; S) = (s~_1, ..., s~_(n-1)), s~_j = ((n-j) s_j - z (j+1) s_(j+1)) / (n - z s_1)."""
    s = as_point(S)
    if s.size < 2:
        raise DomainError("coord_map needs n >= 2")
    z = complex(z)
    with np.errstate(divide="ignore", invalid="ignore"):
        out, den = _coord_map_arrays(z, s)
    if abs(den) <= DENOM_TOL:
        raise DenominatorVanishes(f"n - z s_1 vanishes at z = {z:.6g}", z=z, stage=s.size)
    return out


def chain_F(Z, S) -> complex:
    """F(Z; S) = f_2(z_1; .) o ... o f_n(z_(n-1); S).

    f_n(z_(n-1); .) acts first; the value is the lone coordinate left after
    f_2.  DenominatorVanishes carries the failing stage k of f_k.
    """
    s = as_point(S)
    Z = np.atleast_1d(np.asarray(Z, dtype=complex))
    n = s.size
    if Z.size != n - 1:
        raise DomainError(f"F on C^{n} needs {n - 1} arguments, got {Z.size}")
    cur = s
    for k in range(n, 1, -1):
        z = Z[k - 2]
        with np.errstate(divide="ignore", invalid="ignore"):
            out, den = _coord_map_arrays(z, cur)
        if abs(den) <= DENOM_TOL:
            raise DenominatorVanishes(
                f"denominator of f_{k} vanishes at z = {z:.6g}", z=complex(z), stage=k
            )
        cur = out
    return complex(cur[0])


def in_Gn(S, cluster_tol: float = poly.DEFAULT_CLUSTER_TOL):
    """(all roots of the attached polynomial in the open disc, 1 - max root modulus)."""
    p = point_poly(S)
    top = max(abs(cl.center) for cl in poly.roots(p, cluster_tol))
    return top < 1.0, 1.0 - top


def boundary_sup(S, grid: int = 2048):
    """(max over the grid on the unit circle of |f(z; S)|, number of poles of f in the disc).

    The pole count is the winding number of the denominator of f around the
    circle, so it does not use the root finder.
    """
    s = as_point(S)
    z = np.exp(2j * np.pi * np.arange(grid) / grid)
    num, den = _f_parts(z, s)
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.abs(num) / np.abs(den)
    phase = np.unwrap(np.angle(np.append(den, den[0])))
    winding = int(round((phase[-1] - phase[0]) / (2 * np.pi)))
    return float(np.max(vals)), winding


def in_Gn_sup(S, grid: int = 2048, threshold: float = 1 - 1e-9) -> bool:
    """Membership through sup over the closed disc of |f(z; S)| < 1.

    f is holomorphic on the closed disc exactly when its denominator has no
    zero there; the supremum is then attained on the circle.
    """
    if as_point(S).size == 1:
        return abs(as_point(S)[0]) < 1
    top, poles = boundary_sup(S, grid)
    return poles == 0 and top < threshold


def default_grid(n: int) -> int:
    if n <= 3:
        return 4096
    if n == 4:
        return 512
    return 128


@dataclass
class PnResult:
    value: float
    argmax: tuple
    grid: int
    nodes: int
    skipped: int
    refined: bool
    warnings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "argmax": [[z.real, z.imag] for z in self.argmax],
            "grid": self.grid,
            "nodes": self.nodes,
            "skipped": self.skipped,
            "refined": self.refined,
            "warnings": list(self.warnings),
        }


def _pdist(x, y):
    with np.errstate(divide="ignore", invalid="ignore"):
        m = np.abs(x - y) / np.abs(1 - np.conj(y) * x)
        return np.arctanh(np.minimum(m, 1.0))


def _stage_values(s, thetas):
    # apply f_n(z_(n-1)), ..., f_3(z_2) over the grid in all but z_1;
    # returns coordinates of shape (2, grid**(n-2)) and the skip mask
    n = s.size
    z = np.exp(1j * thetas)
    cur = s.reshape(n, 1)
    bad = np.zeros(1, dtype=bool)
    for k in range(n, 2, -1):
        # z_(k-1) becomes the fastest-varying index of the flattened grid
        with np.errstate(divide="ignore", invalid="ignore"):
            out, den = _coord_map_arrays(z, cur[:, :, None])
        hit = np.abs(den) <= DENOM_TOL
        bad = (bad[:, None] | hit).reshape(-1)
        cur = out.reshape(k - 1, -1)
    return cur, bad


def _last_stage(cs, ct, V, w):
    # f_2(z_1; (a, b)) = (a - 2 z_1 b) / (2 - z_1 a).  With w = -z_1 on the
    # circle the pseudohyperbolic distance between the S and T values is
    # |P(w)| / |Q(w)| for the quadratics below; returned squared.
    a1, b1, a2, b2 = cs[0], cs[1], ct[0], ct[1]
    P = np.stack([2 * (a1 - a2), 4 * (b1 - b2), 2 * (b1 * a2 - b2 * a1)], axis=1)
    Q = np.stack(
        [
            2 * (np.conj(a2) - np.conj(b2) * a1),
            4 * (1 - np.conj(b2) * b1),
            2 * (a1 - np.conj(a2) * b1),
        ],
        axis=1,
    )
    top = P @ V
    bot = Q @ V
    with np.errstate(divide="ignore", invalid="ignore"):
        m2 = (top.real**2 + top.imag**2) / (bot.real**2 + bot.imag**2)
    skip = np.zeros(m2.shape, dtype=bool)
    # 2 + w a can only vanish when |a| is close to 2
    rows = np.nonzero((np.abs(a1) >= 2 - 1e-3) | (np.abs(a2) >= 2 - 1e-3))[0]
    if rows.size:
        d1 = 2 + w[None, :] * a1[rows, None]
        d2 = 2 + w[None, :] * a2[rows, None]
        skip[rows] = (np.abs(d1) <= DENOM_TOL) | (np.abs(d2) <= DENOM_TOL)
    return m2, skip


def pn_distance_report(S, T, grid: int | None = None, refine: bool = True, serial: bool = False) -> PnResult:
    """max over the (n-1)-torus of the Poincare distance between F(Z; S) and F(Z; T).

    The maximum is taken over ``grid`` equally spaced angles per coordinate,
    then optionally polished by coordinate-wise golden-section search from
    the best node.  Nodes where some denominator vanishes are skipped and
    counted.
    """
    s, t = as_point(S), as_point(T)
    if s.size != t.size:
        raise DomainError("points must have the same dimension")
    for name, p in (("S", s), ("T", t)):
        ok, _ = in_Gn(p)
        if not ok:
            raise DomainError(f"{name} is not in G_{p.size}")
    n = s.size
    if n == 1:
        return PnResult(float(_pdist(s[0], t[0])), (), 0, 1, 0, False)
    grid = default_grid(n) if grid is None else int(grid)
    if grid < 1:
        raise DomainError("grid must be positive")
    thetas = 2 * np.pi * np.arange(grid) / grid
    z1 = np.exp(1j * thetas)
    V = np.vander(-z1, 3, increasing=True).T.copy()
    cs, bs = _stage_values(s, thetas)
    ct, bt = _stage_values(t, thetas)
    bad_outer = bs | bt
    rows = cs.shape[1]
    step = max(1, CHUNK // grid)
    starts = list(range(0, rows, step))

    def work(lo):
        hi = min(rows, lo + step)
        m2, skip = _last_stage(cs[:, lo:hi], ct[:, lo:hi], V, -z1)
        skip |= bad_outer[lo:hi, None] | ~np.isfinite(m2)
        m2[skip] = -np.inf
        k = int(np.argmax(m2))
        return m2.flat[k], lo * grid + k, int(skip.sum())

    if serial or len(starts) == 1:
        parts = [work(lo) for lo in starts]
    else:
        with ThreadPoolExecutor(max_workers=min(len(starts), os.cpu_count() or 1)) as ex:
            parts = list(ex.map(work, starts))
    # deterministic reduction: largest value, earliest node on ties
    best, best_idx, _ = max(parts, key=lambda p: (p[0], -p[1]))
    skipped = sum(p[2] for p in parts)
    nodes = rows * grid
    notes = []
    if skipped > SKIP_WARN_FRACTION * nodes:
        msg = f"{skipped} of {nodes} grid nodes skipped (vanishing denominator)"
        notes.append(msg)
        warnings.warn(msg, RuntimeWarning, stacklevel=2)
    if not np.isfinite(best):
        raise DenominatorVanishes("every grid node was skipped")
    # node index = outer * grid + j1; outer encodes (z_2, ..., z_(n-1)) with
    # z_(n-1) slowest
    j1 = best_idx % grid
    outer = best_idx // grid
    idx = [j1]
    for _ in range(n - 2):
        idx.append(outer % grid)
        outer //= grid
    angles = [thetas[i] for i in idx]
    value = float(np.arctanh(min(math.sqrt(best), 1.0)))
    if refine:
        angles, value = _refine(s, t, angles, value, 2 * np.pi / grid)
    argmax = tuple(complex(np.exp(1j * a)) for a in angles)
    return PnResult(value, argmax, grid, nodes, skipped, refine, notes)


def _torus_value(s, t, angles):
    Z = np.exp(1j * np.asarray(angles))
    try:
        return float(_pdist(chain_F(Z, s), chain_F(Z, t)))
    except DenominatorVanishes:
        return -math.inf


def _refine(s, t, angles, value, width, cycles: int = 4):
    angles = list(angles)
    for _ in range(cycles):
        before = value
        for i in range(len(angles)):
            def g(x, i=i):
                trial = list(angles)
                trial[i] = x
                return _torus_value(s, t, trial)

            x, fx = golden_max(g, angles[i] - width, angles[i] + width, tol=1e-13)
            if fx > value:
                angles[i], value = x, fx
        if value - before <= 1e-15:
            break
    return angles, value


def pn_distance(S, T, grid: int | None = None, refine: bool = True, serial: bool = False) -> float:
    return pn_distance_report(S, T, grid, refine, serial).value
