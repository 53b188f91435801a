"""Small numerical kernels: batched Hermitian Jacobi and golden-section search."""

from __future__ import annotations

import math

import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
JACOBI_MAX_SWEEPS = 60


def jacobi_eigvalsh(H, tol: float = 1e-15, max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues (ascending) of a stack of Hermitian matrices by cyclic Jacobi.

    ``H`` has shape (..., M, M); only the Hermitian part is used.  Each
    rotation is applied to the whole batch at once.
    """
    H = np.asarray(H, dtype=complex)
    shape = H.shape
    M = shape[-1]
    A = H.reshape(-1, M, M)
    A = 0.5 * (A + np.conj(np.swapaxes(A, -1, -2)))
    scale = np.linalg.norm(A, axis=(1, 2))
    scale[scale == 0] = 1.0
    offmask = ~np.eye(M, dtype=bool)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.abs(A[:, offmask]) ** 2, axis=1))
        if np.all(off <= tol * scale):
            break
        for p in range(M - 1):
            for q in range(p + 1, M):
                _rotate(A, p, q, 1e-17 * scale)
    w = np.sort(np.diagonal(A, axis1=1, axis2=2).real, axis=1)
    return w.reshape(shape[:-1])


def _rotate(A, p, q, negligible):
    apq = A[:, p, q]
    r = np.abs(apq)
    # entries this small cannot move any eigenvalue at working precision
    active = r > negligible
    if not active.any():
        return
    phase = np.where(active, apq / np.where(active, r, 1.0), 1.0)
    app = A[:, p, p].real
    aqq = A[:, q, q].real
    tau = np.where(active, (aqq - app) / (2.0 * np.where(active, r, 1.0)), 0.0)
    t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
    t = np.where(active, t, 0.0)
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    pc = np.conj(phase)
    # U = diag(1, conj(phase)) @ [[c, s], [-s, c]] acting on (p, q)
    u_pp, u_pq = c, s
    u_qp, u_qq = -s * pc, c * pc
    colp = A[:, :, p].copy()
    colq = A[:, :, q].copy()
    A[:, :, p] = colp * u_pp[:, None] + colq * u_qp[:, None]
    A[:, :, q] = colp * u_pq[:, None] + colq * u_qq[:, None]
    rowp = A[:, p, :].copy()
    rowq = A[:, q, :].copy()
    A[:, p, :] = np.conj(u_pp)[:, None] * rowp + np.conj(u_qp)[:, None] * rowq
    A[:, q, :] = np.conj(u_pq)[:, None] * rowp + np.conj(u_qq)[:, None] * rowq
    A[active, p, q] = 0.0
    A[active, q, p] = 0.0


def min_eigvalsh(H, **kwargs) -> np.ndarray:
    """Smallest eigenvalue of each Hermitian matrix in a stack."""
    return jacobi_eigvalsh(H, **kwargs)[..., 0]


def golden_max(f, a: float, b: float, tol: float = 1e-12, max_iter: int = 200):
    """Maximize a unimodal scalar function on [a, b] by golden-section search.

    Returns (x, f(x)) for the best point evaluated, endpoints included.
    """
    best = max(((a, f(a)), (b, f(b))), key=lambda t: t[1])
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if abs(b - a) <= tol * max(1.0, abs(a) + abs(b)):
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    for x, fx in ((c, fc), (d, fd)):
        if fx > best[1]:
            best = (x, fx)
    return best
