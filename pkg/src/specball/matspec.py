"""Spectral analysis of small dense complex matrices.

Eigenvalues come from the roots of the characteristic polynomial (computed by
the Faddeev-LeVerrier trace recurrence), so algebraic multiplicities fall out
of root clustering.  The index of an eigenvalue (size of its largest Jordan
block) is read off the rank sequence of powers of ``A - lam*I``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import poly
from .errors import DomainError, NotMonic, RankAmbiguity
from .poly import ComplexPolynomial, RootCluster

DEFAULT_RANK_TOL = 1e-8
# singular values of B^k below this fraction of ||A|| * sigma_max(B^(k-1)) are rounding noise
NOISE_FLOOR = 3e-10
# ||A^d|| / ||A||^d below this is rounding noise of the repeated product
KRYLOV_ZERO = 1e-13


def as_matrix(A) -> np.ndarray:
    M = np.asarray(A, dtype=complex)
    if M.ndim == 0:
        M = M.reshape(1, 1)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise DomainError(f"expected a non-empty square matrix, got shape {M.shape}")
    return M


@dataclass(frozen=True)
class Eigen:
    value: complex
    alg_mult: int
    index: int
    spread: float = 0.0


@dataclass(frozen=True)
class SpectralSummary:
    eigen: tuple
    spectral_radius: float
    min_poly: ComplexPolynomial
    char_poly: ComplexPolynomial
    merged: tuple = field(default=())

    @property
    def dim(self) -> int:
        return self.char_poly.degree

    @property
    def min_poly_degree(self) -> int:
        return self.min_poly.degree

    @property
    def is_non_derogatory(self) -> bool:
        return self.min_poly_degree == self.dim

    def diagnostics(self) -> list:
        return [
            f"merged eigenvalue cluster at {e.value:.6g} (multiplicity {e.alg_mult}, spread {e.spread:.2e})"
            for e in self.eigen
            if e.value in self.merged
        ]


def char_poly(A) -> ComplexPolynomial:
    """Monic characteristic polynomial det(zI - A) by Faddeev-LeVerrier."""
    A = as_matrix(A)
    n = A.shape[0]
    coeffs = [0j] * (n + 1)
    coeffs[n] = 1 + 0j
    eye = np.eye(n, dtype=complex)
    M = np.zeros_like(A)
    for k in range(1, n + 1):
        M = A @ M + coeffs[n - k + 1] * eye
        coeffs[n - k] = complex(-np.trace(A @ M) / k)
    return ComplexPolynomial(coeffs)


def symmetric_functions(A) -> np.ndarray:
    """(s_1, ..., s_n) with chi(z) = z^n + sum_j (-1)^j s_j z^(n-j)."""
    c = char_poly(A).coeffs
    n = len(c) - 1
    return np.array([(-1) ** j * c[n - j] for j in range(1, n + 1)], dtype=complex)


def eigenvalues(A, cluster_tol: float = poly.DEFAULT_CLUSTER_TOL) -> list:
    """Clustered eigenvalues of ``A`` as RootCluster objects."""
    A = as_matrix(A)
    if A.shape[0] == 1:
        return [RootCluster(complex(A[0, 0]), 1, 0.0)]
    return poly.roots(char_poly(A), cluster_tol)


def spectral_radius(A, cluster_tol: float = poly.DEFAULT_CLUSTER_TOL) -> float:
    return max(abs(cl.center) for cl in eigenvalues(A, cluster_tol))


def _refine_eigenvalue(A, lam, mult, sweeps=2):
    # two-sided Rayleigh quotient on the near-null spaces of (A - lam I)^mult;
    # the error drops quadratically in the subspace error
    n = A.shape[0]
    eye = np.eye(n)
    for _ in range(sweeps):
        Bm = np.linalg.matrix_power(A - lam * eye, mult)
        U, _, Vh = np.linalg.svd(Bm)
        V = Vh.conj().T[:, n - mult:]
        W = U[:, n - mult:]
        G = W.conj().T @ V
        if np.linalg.cond(G) > 1e8:
            break
        new = complex(np.trace(np.linalg.solve(G, W.conj().T @ A @ V)) / mult)
        if not np.isfinite(new) or abs(new - lam) > 1e-3:
            break
        lam = new
    return lam


def _numerical_rank(sv, floor, rank_tol, lam):
    top = sv[0] if sv.size else 0.0
    thr = max(rank_tol * top, floor)
    if thr == 0.0:
        return 0
    near = (sv > thr / 10) & (sv < thr * 10)
    if near.any():
        raise RankAmbiguity(
            f"singular value {sv[near][0]:.3e} within a factor 10 of rank threshold "
            f"{thr:.3e} for eigenvalue {lam:.6g}",
            eigenvalue=lam,
        )
    return int((sv > thr).sum())


def eigen_index(A, lam, alg_mult, rank_tol: float = DEFAULT_RANK_TOL) -> int:
    """Index of ``lam``: smallest k >= 1 with rank(B^k) == rank(B^(k+1)), B = A - lam I.

    The rank sequence of powers only stabilizes once it reaches n - alg_mult,
    so the search stops at the first power with that rank instead of forming
    one more (noisier) power.  A sequence that undershoots n - alg_mult or
    never reaches it raises RankAmbiguity.
    """
    A = as_matrix(A)
    n = A.shape[0]
    if alg_mult == 1:
        return 1
    B = A - lam * np.eye(n)
    scale = max(np.linalg.norm(A, 2), np.linalg.norm(B, 2))
    target = n - alg_mult
    power = np.eye(n, dtype=complex)
    prev_top = 1.0
    ranks = []
    for k in range(1, alg_mult + 1):
        power = power @ B
        sv = np.linalg.svd(power, compute_uv=False)
        rank = _numerical_rank(sv, NOISE_FLOOR * scale * prev_top, rank_tol, lam)
        ranks.append(rank)
        if rank == target:
            return k
        if rank < target or (len(ranks) > 1 and rank >= ranks[-2]):
            break
        prev_top = sv[0]
    raise RankAmbiguity(
        f"rank sequence {ranks} of powers at {lam:.6g} is inconsistent with "
        f"algebraic multiplicity {alg_mult}",
        eigenvalue=lam,
    )


def spectral_summary(
    A,
    cluster_tol: float = poly.DEFAULT_CLUSTER_TOL,
    rank_tol: float = DEFAULT_RANK_TOL,
) -> SpectralSummary:
    """Eigenvalues with algebraic multiplicity and index, plus the minimal polynomial.

    Raises RankAmbiguity when the Jordan structure cannot be decided at
    ``rank_tol``.
    """
    A = as_matrix(A)
    chi = char_poly(A)
    clusters = eigenvalues(A, cluster_tol)
    eigen = []
    merged = []
    for cl in clusters:
        lam = cl.center
        if cl.multiplicity > 1:
            lam = _refine_eigenvalue(A, lam, cl.multiplicity)
            if cl.spread > 0:
                merged.append(lam)
        idx = eigen_index(A, lam, cl.multiplicity, rank_tol)
        eigen.append(Eigen(complex(lam), cl.multiplicity, idx, cl.spread))
    mp = poly.from_roots([RootCluster(e.value, e.index) for e in eigen])
    radius = max(abs(e.value) for e in eigen)
    return SpectralSummary(tuple(eigen), float(radius), mp, chi, tuple(merged))


def min_poly_krylov(A, rank_tol: float = DEFAULT_RANK_TOL) -> ComplexPolynomial:
    """Minimal polynomial from the first linear dependence among I, A, A^2, ...

    The vectorized powers are normalized to unit length; the dependence test
    is on the smallest singular value of that Krylov matrix and the
    coefficients come from least squares in the normalized basis.
    """
    A = as_matrix(A)
    n = A.shape[0]
    s = np.linalg.norm(A, 2)
    if s == 0.0:
        return ComplexPolynomial([0, 1])
    cols = [np.eye(n, dtype=complex).ravel()]
    power = np.eye(n, dtype=complex)
    for d in range(1, n + 1):
        power = power @ A
        v = power.ravel()
        K = np.column_stack(cols + [v])
        norms = np.linalg.norm(K, axis=0)
        if norms[-1] <= KRYLOV_ZERO * s**d:
            # A^d vanishes outright
            return ComplexPolynomial.monomial(d)
        Kn = K / norms
        if K.shape[1] > K.shape[0]:
            ratio = 0.0
        else:
            sv = np.linalg.svd(Kn, compute_uv=False)
            ratio = sv[-1] / sv[0]
        if rank_tol / 10 < ratio < rank_tol * 10:
            raise RankAmbiguity(
                f"Krylov dependence test at degree {d} is ambiguous (ratio {ratio:.3e})"
            )
        if ratio <= rank_tol:
            y, *_ = np.linalg.lstsq(Kn[:, :-1], -Kn[:, -1], rcond=None)
            coef = y * norms[-1] / norms[:-1]
            return ComplexPolynomial(list(coef) + [1])
        cols.append(v)
    raise RankAmbiguity("no linear dependence found up to degree n")


def matrix_poly_eval(p: ComplexPolynomial, A) -> np.ndarray:
    """Horner evaluation of ``p`` at a square matrix."""
    A = as_matrix(A)
    eye = np.eye(A.shape[0], dtype=complex)
    acc = p.coeffs[-1] * eye
    for c in reversed(p.coeffs[:-1]):
        acc = acc @ A + c * eye
    return acc


def is_in_spectral_ball(A, cluster_tol: float = poly.DEFAULT_CLUSTER_TOL):
    """(r(A) < 1, 1 - r(A))."""
    r = spectral_radius(A, cluster_tol)
    return r < 1.0, 1.0 - r


def is_non_derogatory(A, cluster_tol=poly.DEFAULT_CLUSTER_TOL, rank_tol=DEFAULT_RANK_TOL) -> bool:
    return spectral_summary(A, cluster_tol, rank_tol).is_non_derogatory


def companion(p: ComplexPolynomial) -> np.ndarray:
    """Companion matrix with unit subdiagonal and last column -a_0, ..., -a_(n-1)."""
    if p.degree < 1:
        raise DomainError("companion matrix needs degree >= 1")
    if p.leading != 1:
        raise NotMonic(f"companion matrix needs a monic polynomial, leading coefficient {p.leading}")
    n = p.degree
    C = np.zeros((n, n), dtype=complex)
    C[np.arange(1, n), np.arange(n - 1)] = 1.0
    C[:, n - 1] = [-c for c in p.coeffs[:-1]]
    return C


def _shift_block(d, corner):
    block = np.zeros((d, d), dtype=complex)
    block[np.arange(1, d), np.arange(d - 1)] = 1.0
    block[0, d - 1] = corner
    return block


def example_Fd(n: int, d: int, zeta: complex) -> np.ndarray:
    """Block map: d x d shift block with ``zeta`` in the top-right corner, then zeta*I."""
    if n < 3 or not 2 <= d <= n - 1:
        raise DomainError(f"need n >= 3 and 2 <= d <= n-1, got n={n}, d={d}")
    if not abs(zeta) < 1:
        raise DomainError(f"|zeta| must be < 1, got {zeta}")
    out = np.zeros((n, n), dtype=complex)
    out[:d, :d] = _shift_block(d, zeta)
    out[d:, d:] = zeta * np.eye(n - d)
    return out


def sharpness_map(d: int, n: int, X) -> np.ndarray:
    """The trace-driven map X -> M_d(tr X / n) (+) (tr X / n) I_(n-d)."""
    X = as_matrix(X)
    if X.shape[0] != n:
        raise DomainError(f"X must be {n}x{n}, got {X.shape}")
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got d={d}, n={n}")
    t = complex(np.trace(X)) / n
    out = np.zeros((n, n), dtype=complex)
    if d == 1:
        out[0, 0] = t
    else:
        out[:d, :d] = _shift_block(d, t)
    out[d:, d:] = t * np.eye(n - d)
    return out
