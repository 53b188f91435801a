"""Hyperbolic geometry of the unit disc.

Pseudohyperbolic and Poincare distances, finite Blaschke products (scalar and
matrix-valued) and the image of the unit circle under a Mobius map.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import matspec
from .errors import DomainError, LineImage, NotInBall, OutsideDisc, SingularFactor

# construction margin for Blaschke zeros
ZERO_MARGIN = 1e-12
MAX_FACTOR_COND = 1e12


def _check_in_disc(*zs):
    for z in zs:
        if not abs(z) < 1:
            raise OutsideDisc(f"point {z} is not in the open unit disc")


def pseudo_dist(z1: complex, z2: complex) -> float:
    """|z1 - z2| / |1 - conj(z2) z1| for z1, z2 in the open disc."""
    _check_in_disc(z1, z2)
    z1, z2 = complex(z1), complex(z2)
    return abs(z1 - z2) / abs(1 - z2.conjugate() * z1)


def poincare_dist(z1: complex, z2: complex) -> float:
    return math.atanh(pseudo_dist(z1, z2))


def disc_automorphism(a: complex, theta: float = 0.0):
    """z -> e^{i theta} (z - a) / (1 - conj(a) z)."""
    _check_in_disc(a)
    a = complex(a)
    rot = cmath.exp(1j * theta)

    def phi(z):
        return rot * (z - a) / (1 - a.conjugate() * z)

    return phi


class BlaschkeProduct:
    """Finite Blaschke product prod ((z - lam) / (1 - conj(lam) z))**m."""

    def __init__(self, factors):
        fs = []
        for lam, m in factors:
            lam = complex(lam)
            m = int(m)
            if not abs(lam) < 1 - ZERO_MARGIN:
                raise OutsideDisc(f"Blaschke zero {lam} is not inside the disc")
            if m < 1:
                raise DomainError(f"Blaschke exponent must be positive, got {m}")
            fs.append((lam, m))
        self.factors = tuple(fs)

    @classmethod
    def from_summary(cls, summary: matspec.SpectralSummary) -> "BlaschkeProduct":
        """Zeros at the eigenvalues, exponents equal to their indices."""
        return cls((e.value, e.index) for e in summary.eigen)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.factors)

    def __call__(self, z):
        return blaschke_eval(self, z)

    def __repr__(self) -> str:
        return f"BlaschkeProduct({list(self.factors)!r})"


def blaschke_eval(B: BlaschkeProduct, z):
    """Evaluate on the closed disc; ``z`` may be a numpy array."""
    out = 1.0 + 0 * z
    for lam, m in B.factors:
        out = out * ((z - lam) / (1 - lam.conjugate() * z)) ** m
    return out


def blaschke_matrix(B: BlaschkeProduct, A) -> np.ndarray:
    """prod over factors of (I - conj(lam) A)^(-m) (A - lam I)^m, factors in order.

    Requires r(A) < 1.  Raises SingularFactor if some I - conj(lam) A has
    condition number above 1e12.
    """
    A = matspec.as_matrix(A)
    inside, margin = matspec.is_in_spectral_ball(A)
    if not inside:
        raise NotInBall(f"spectral radius {1 - margin:.6g} >= 1", radius=1 - margin)
    n = A.shape[0]
    eye = np.eye(n, dtype=complex)
    out = eye.copy()
    for lam, m in B.factors:
        D = eye - lam.conjugate() * A
        cond = np.linalg.cond(D)
        if not cond <= MAX_FACTOR_COND:
            raise SingularFactor(
                f"I - conj({lam:.6g}) A has condition number {cond:.3e}"
            )
        N = np.linalg.matrix_power(A - lam * eye, m)
        factor = np.linalg.solve(np.linalg.matrix_power(D, m), N)
        out = out @ factor
    return out


@dataclass(frozen=True)
class MobiusMap:
    """z -> (a z + b) / (c z + d)."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, complex(getattr(self, name)))
        size = abs(self.a) + abs(self.b) + abs(self.c) + abs(self.d)
        if not abs(self.a * self.d - self.b * self.c) > 1e-14 * size**2:
            raise DomainError("Mobius map is degenerate (ad - bc = 0)")

    def __call__(self, z):
        return (self.a * z + self.b) / (self.c * z + self.d)


def mobius_circle_image(T: MobiusMap):
    """Centre and radius of T(unit circle).

    centre = (b conj(d) - a conj(c)) / (|d|^2 - |c|^2),
    radius = |ad - bc| / ||d|^2 - |c|^2|.
    """
    a, b, c, d = T.a, T.b, T.c, T.d
    gap = abs(d) ** 2 - abs(c) ** 2
    if abs(gap) < 1e-12 * (abs(c) ** 2 + abs(d) ** 2):
        raise LineImage("|c| = |d|: the unit circle is mapped to a line")
    centre = (b * d.conjugate() - a * c.conjugate()) / gap
    radius = abs(a * d - b * c) / abs(gap)
    return centre, radius
