"""Complex polynomials, Horner evaluation and simultaneous root finding.

Coefficients are stored in ascending degree order.  Roots are found with
the Aberth-Ehrlich iteration and then grouped into clusters, so a root of
multiplicity m shows up once with ``multiplicity == m``.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NonConvergence, ZeroPolynomial

EPS = sys.float_info.epsilon
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))

DEFAULT_CLUSTER_TOL = 1e-6
# normwise backward error under which a group of roots counts as one multiple root
DEFAULT_MULT_TOL = 1e-12
MAX_SWEEPS = 500
RESIDUAL_TOL = 1e-10


class ComplexPolynomial:
    """Polynomial with complex coefficients, ``coeffs[k]`` multiplying ``z**k``.

    Trailing zero coefficients are dropped (exact comparison with 0).  The zero
    polynomial keeps a single zero coefficient and reports ``is_zero``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[complex]):
        c = [complex(x) for x in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0j]
        self._coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coefficient: complex = 1.0) -> "ComplexPolynomial":
        return cls([0j] * degree + [coefficient])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.degree == 0 and self._coeffs[0] == 0

    @property
    def leading(self) -> complex:
        return self._coeffs[-1]

    def to_array(self) -> np.ndarray:
        return np.array(self._coeffs, dtype=complex)

    def monic(self) -> "ComplexPolynomial":
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no monic normalization")
        lead = self.leading
        return ComplexPolynomial(c / lead for c in self._coeffs)

    def derivative(self) -> "ComplexPolynomial":
        return ComplexPolynomial(k * c for k, c in enumerate(self._coeffs) if k > 0)

    def __call__(self, z):
        return evaluate(self, z)

    def __mul__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        a, b = self._coeffs, other._coeffs
        out = [0j] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return ComplexPolynomial(out)

    def __sub__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        n = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (0j,) * (n - len(self._coeffs))
        b = other._coeffs + (0j,) * (n - len(other._coeffs))
        return ComplexPolynomial(x - y for x, y in zip(a, b))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"ComplexPolynomial({list(self._coeffs)!r})"


@dataclass(frozen=True)
class RootCluster:
    """A group of numerically coincident roots.

    ``spread`` is the largest distance of a raw root in the group to ``center``.
    """

    center: complex
    multiplicity: int
    spread: float = 0.0


def evaluate(p: ComplexPolynomial, z):
    """Horner evaluation; ``z`` may be a scalar or a numpy array."""
    coeffs = p.coeffs
    acc = coeffs[-1] + 0 * z
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def from_roots(clusters: Sequence[RootCluster]) -> ComplexPolynomial:
    """Monic polynomial with the given roots and multiplicities."""
    out = [1 + 0j]
    for cl in clusters:
        for _ in range(cl.multiplicity):
            # multiply by (z - center)
            nxt = [0j] * (len(out) + 1)
            for k, c in enumerate(out):
                nxt[k + 1] += c
                nxt[k] -= cl.center * c
            out = nxt
    return ComplexPolynomial(out)


def _aberth(a: list, max_sweeps: int) -> list:
    """Aberth-Ehrlich sweeps (Gauss-Seidel order) for monic ``a`` with a[0] != 0."""
    n = len(a) - 1
    if n == 1:
        return [-a[0]]
    absa = [abs(c) for c in a]
    radius = 1.0 + max(absa[:-1])
    z = [radius * cmath.exp(1j * (GOLDEN_ANGLE * k + 0.5)) for k in range(n)]
    done = [False] * n
    rev = list(zip(reversed(a[:-1]), reversed(absa[:-1])))
    for _ in range(max_sweeps):
        moved = False
        for k in range(n):
            if done[k]:
                continue
            zk = z[k]
            azk = abs(zk)
            p, dp, bound = 1 + 0j, 0j, 1.0
            for c, ac in rev:
                dp = dp * zk + p
                p = p * zk + c
                bound = bound * azk + ac
            if abs(p) <= 2 * n * EPS * bound:
                done[k] = True
                continue
            sigma = 0j
            for j in range(n):
                if j != k:
                    diff = zk - z[j]
                    if diff == 0:
                        diff = EPS * (1.0 + azk)
                    sigma += 1.0 / diff
            # Aberth step p / (p' - p * sigma), free of divisions by p
            denom = dp - p * sigma
            if denom == 0:
                w = EPS * (1.0 + azk)
            else:
                w = p / denom
            if not cmath.isfinite(w):
                w = EPS * (1.0 + azk)
            z[k] = zk - w
            moved = True
            if abs(w) <= EPS * abs(z[k]):
                done[k] = True
        if not moved:
            break
    return z


def raw_roots(p: ComplexPolynomial, max_sweeps: int = MAX_SWEEPS) -> list:
    """All ``degree`` roots of ``p`` (with repetition), unclustered.

    Exactly-zero low-order coefficients are split off as exact roots at 0.
    """
    if p.degree < 1:
        raise ZeroPolynomial(f"root finding needs degree >= 1, got {p!r}")
    a = list(p.monic().coeffs)
    nzero = 0
    while a[nzero] == 0:
        nzero += 1
    rest = a[nzero:]
    found = [0j] * nzero
    if len(rest) > 1:
        found += _aberth(rest, max_sweeps)
    mono = ComplexPolynomial(a)
    for r in found:
        res = abs(evaluate(mono, r)) / (1.0 + abs(r)) ** p.degree
        if not res <= RESIDUAL_TOL:
            raise NonConvergence(
                f"root {r} has residual {res:.3e} after {max_sweeps} sweeps"
            )
    return found


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def _taylor(coeffs, c, k):
    # first k Taylor coefficients of the polynomial about c (repeated Horner)
    a = list(coeffs)
    out = []
    for _ in range(k):
        acc = 0j
        q = []
        for x in reversed(a):
            acc = acc * c + x
            q.append(acc)
        out.append(q.pop())
        a = q[::-1]
    return out


def _is_multiple_root(group, others, coeffs, mult_tol):
    # Accept a group of k roots as one k-fold root when moving its Taylor
    # coefficients of order < k about the refined centre to zero is a
    # perturbation of normwise size at most mult_tol.
    k = len(group)
    c = sum(group) / k
    rho = max(abs(r - c) for r in group)
    if any(abs(c - r) <= 2.0 * rho for r in others):
        return False
    c = _refine_center(coeffs, c, k, rho)
    t = _taylor(coeffs, c, k)
    shift = 1.0 + abs(c)
    change = sum(abs(tj) * shift**j for j, tj in enumerate(t))
    return change <= mult_tol * sum(abs(a) for a in coeffs)


def _refine_center(coeffs, center, k, rho):
    # a k-fold root is a simple root of the (k-1)-th derivative
    d = ComplexPolynomial(coeffs)
    for _ in range(k - 1):
        d = d.derivative()
    dd = d.derivative()
    z = center
    for _ in range(30):
        slope = evaluate(dd, z)
        if slope == 0:
            break
        step = evaluate(d, z) / slope
        z = z - step
        if abs(z - center) > 2.0 * rho + 1e-12:
            return center
        if abs(step) <= 4 * EPS * max(abs(z), 1e-300):
            break
    return z


def cluster_roots(
    found: Sequence[complex],
    coeffs: Sequence[complex] | None = None,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    mult_tol: float = DEFAULT_MULT_TOL,
) -> list:
    """Group raw roots into clusters.

    Roots closer than ``cluster_tol`` are always joined (single linkage).  When
    the polynomial's coefficients are supplied, neighbouring groups are further
    joined while the union is consistent with a single multiple root under a
    normwise backward error of ``mult_tol``; this catches the ``eps**(1/m)``
    scatter of an m-fold root that a fixed absolute tolerance cannot.
    """
    n = len(found)
    edges = sorted(
        (abs(found[i] - found[j]), i, j) for i in range(n) for j in range(i + 1, n)
    )
    accepted = _UnionFind(n)
    linked = _UnionFind(n)
    for dist, i, j in edges:
        if dist <= cluster_tol:
            accepted.union(i, j)
            linked.union(i, j)
            continue
        if coeffs is None:
            break
        # single-linkage components nest as the threshold grows; test each
        # newly formed component as a candidate multiple root
        if linked.find(i) == linked.find(j):
            continue
        linked.union(i, j)
        root = linked.find(i)
        members = [k for k in range(n) if linked.find(k) == root]
        if len({accepted.find(k) for k in members}) == 1:
            continue
        inside = set(members)
        if _is_multiple_root(
            [found[k] for k in members],
            [found[k] for k in range(n) if k not in inside],
            coeffs,
            mult_tol,
        ):
            for k in members[1:]:
                accepted.union(members[0], k)
    groups = {}
    for i in range(n):
        groups.setdefault(accepted.find(i), []).append(i)
    groups = list(groups.values())

    clusters = []
    for g in groups:
        pts = [found[i] for i in g]
        center = sum(pts) / len(pts)
        if coeffs is not None and len(pts) > 1:
            center = _refine_center(coeffs, center, len(pts), max(abs(r - center) for r in pts))
        spread = max(abs(r - center) for r in pts)
        clusters.append(RootCluster(complex(center), len(pts), float(spread)))
    clusters.sort(key=lambda cl: (round(cl.center.real, 9), round(cl.center.imag, 9)))
    return clusters


def roots(
    p: ComplexPolynomial,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    mult_tol: float = DEFAULT_MULT_TOL,
    max_sweeps: int = MAX_SWEEPS,
) -> list:
    """Clustered roots of ``p``; multiplicities sum to ``p.degree``.

    Raises ZeroPolynomial for degree < 1 and NonConvergence when a root's
    scaled residual stays above 1e-10.
    """
    found = raw_roots(p, max_sweeps)
    return cluster_roots(found, p.monic().coeffs, cluster_tol, mult_tol)
