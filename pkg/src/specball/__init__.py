"""Numerical checks for matricial interpolation from the unit disc into the spectral unit ball."""

from .errors import (
    DatasetError,
    DegenerateDraw,
    DenominatorVanishes,
    DomainError,
    LineImage,
    NonConvergence,
    NotInBall,
    NotMonic,
    OutsideDisc,
    RankAmbiguity,
    SingularFactor,
    SpecballError,
    ZeroPolynomial,
)
from .poly import ComplexPolynomial, RootCluster

__version__ = "0.1.0"
