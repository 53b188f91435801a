import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _helpers import disc_points, random_similarity
from specball import checks, hypgeom, matspec
from specball.errors import DomainError, LineImage, NotInBall, OutsideDisc, SingularFactor
from specball.hypgeom import BlaschkeProduct, MobiusMap

disc = st.builds(
    lambda r, t: r * cmath.exp(1j * t), st.floats(0, 0.999), st.floats(0, 2 * math.pi)
)


def test_pseudo_dist_examples():
    assert hypgeom.pseudo_dist(0.3j, 0.3j) == 0
    assert hypgeom.pseudo_dist(0, 0.6 - 0.2j) == pytest.approx(abs(0.6 - 0.2j), abs=1e-15)
    assert hypgeom.pseudo_dist(0.5, -0.5) == pytest.approx(0.8, abs=1e-15)
    with pytest.raises(OutsideDisc):
        hypgeom.pseudo_dist(1.0, 0)


def test_poincare_dist_examples():
    assert hypgeom.poincare_dist(0.2, 0.2) == 0
    assert hypgeom.poincare_dist(0, 0.8) == pytest.approx(0.5 * math.log(1.8 / 0.2), abs=1e-14)
    with pytest.raises(OutsideDisc):
        hypgeom.poincare_dist(0, -1.5)


@settings(max_examples=200, deadline=None)
@given(disc, disc)
def test_distance_symmetry(a, b):
    assert hypgeom.pseudo_dist(a, b) == pytest.approx(hypgeom.pseudo_dist(b, a), abs=1e-14)
    assert 0 <= hypgeom.pseudo_dist(a, b) < 1


@settings(max_examples=200, deadline=None)
@given(disc, disc, st.floats(0, 0.95), st.floats(0, 2 * math.pi))
def test_automorphism_invariance(z1, z2, ra, ta):
    phi = hypgeom.disc_automorphism(ra * cmath.exp(1j * ta), theta=0.7)
    w1, w2 = phi(z1), phi(z2)
    if max(abs(w1), abs(w2)) >= 1 - 1e-9:
        return
    assert hypgeom.pseudo_dist(w1, w2) == pytest.approx(hypgeom.pseudo_dist(z1, z2), abs=1e-12)


def test_blaschke_eval_examples():
    lam = 0.3 - 0.4j
    assert abs(BlaschkeProduct([(lam, 1)])(lam)) == 0
    z = 0.2 + 0.7j
    assert BlaschkeProduct([(0, 3)])(z) == pytest.approx(z**3, abs=1e-15)
    with pytest.raises(OutsideDisc):
        BlaschkeProduct([(1.0, 1)])
    with pytest.raises(DomainError):
        BlaschkeProduct([(0.1, 0)])


def test_blaschke_unimodular_on_circle():
    rng = np.random.default_rng(0)
    for _ in range(100):
        zeros = disc_points(rng, int(rng.integers(1, 5)), 0.95)
        B = BlaschkeProduct((z, int(rng.integers(1, 4))) for z in zeros)
        theta = rng.uniform(0, 2 * np.pi, 50)
        np.testing.assert_allclose(np.abs(B(np.exp(1j * theta))), 1.0, atol=1e-12)
        inner = disc_points(rng, 50, 0.999)
        assert np.all(np.abs(B(inner)) < 1)


def test_blaschke_matrix_annihilates():
    rng = np.random.default_rng(1)
    for _ in range(30):
        F = checks.generate_map(int(rng.integers(2, 6)), 2, seed=int(rng.integers(1 << 30)))
        A = F(0.3)
        B = BlaschkeProduct.from_summary(matspec.spectral_summary(A))
        assert np.linalg.norm(hypgeom.blaschke_matrix(B, A), 2) < 1e-8
    A = matspec.example_Fd(5, 3, 0)
    B = BlaschkeProduct([(0, 3)])
    assert np.linalg.norm(hypgeom.blaschke_matrix(B, A)) == 0


def test_blaschke_matrix_identity_factor():
    A = np.array([[0.2, 1.0], [0.0, -0.4j]])
    np.testing.assert_allclose(hypgeom.blaschke_matrix(BlaschkeProduct([(0, 1)]), A), A, atol=1e-15)


def _multiset_close(got, want, tol):
    # greedy nearest pairing
    left = list(got)
    assert len(left) == len(want)
    for w in want:
        k = int(np.argmin([abs(w - g) for g in left]))
        assert abs(w - left.pop(k)) < tol


def test_blaschke_matrix_spectral_mapping():
    rng = np.random.default_rng(2)
    for _ in range(50):
        n = int(rng.integers(1, 7))
        A = checks.random_ball_matrix(rng, n, rng.uniform(0.05, 0.8))
        zeros = disc_points(rng, int(rng.integers(1, 4)), 0.9)
        B = BlaschkeProduct((z, int(rng.integers(1, 3))) for z in zeros)
        BA = hypgeom.blaschke_matrix(B, A)
        want = [B(c.center) for c in matspec.eigenvalues(A) for _ in range(c.multiplicity)]
        got = [c.center for c in matspec.eigenvalues(BA) for _ in range(c.multiplicity)]
        _multiset_close(got, want, 1e-6)
        # LAPACK as a second, independent eigenvalue oracle
        _multiset_close(np.linalg.eigvals(BA), B(np.linalg.eigvals(A)), 1e-6)


def test_blaschke_matrix_similarity_covariance():
    rng = np.random.default_rng(3)
    for _ in range(30):
        n = int(rng.integers(2, 6))
        A = checks.random_ball_matrix(rng, n, 0.7)
        P = random_similarity(rng, n, 10.0)
        B = BlaschkeProduct([(z, 2) for z in disc_points(rng, 2, 0.8)])
        lhs = hypgeom.blaschke_matrix(B, np.linalg.solve(P, A @ P))
        rhs = np.linalg.solve(P, hypgeom.blaschke_matrix(B, A) @ P)
        assert np.linalg.norm(lhs - rhs) <= 1e-8 * np.linalg.norm(rhs)


def test_blaschke_matrix_errors():
    with pytest.raises(NotInBall):
        hypgeom.blaschke_matrix(BlaschkeProduct([(0.1, 1)]), np.eye(2))
    # strongly non-normal: I - conj(lam) A is nearly singular in norm
    A = np.array([[0.99, 1e5], [0.0, 0.99]])
    with pytest.raises(SingularFactor):
        hypgeom.blaschke_matrix(BlaschkeProduct([(0.99, 1)]), A)


def test_lemma_conclusion_on_generated_maps():
    rng = np.random.default_rng(4)
    for k in range(20):
        F = checks.generate_map(int(rng.integers(2, 5)), int(rng.integers(1, 4)), seed=k)
        B = BlaschkeProduct.from_summary(matspec.spectral_summary(F(0)))
        for zeta in disc_points(rng, 20):
            for c in matspec.eigenvalues(F(zeta)):
                assert abs(B(c.center)) <= abs(zeta) + 1e-7


def test_mobius_examples():
    assert hypgeom.mobius_circle_image(MobiusMap(1, 0, 0, 1)) == (0, 1)
    lam = 0.4 - 0.3j
    c, r = hypgeom.mobius_circle_image(MobiusMap(1, -lam, -lam.conjugate(), 1))
    assert abs(c) < 1e-15 and r == pytest.approx(1, abs=1e-15)
    with pytest.raises(LineImage):
        hypgeom.mobius_circle_image(MobiusMap(1, 0, 1, 1))
    with pytest.raises(DomainError):
        MobiusMap(1, 2, 2, 4)


def test_mobius_proof_map_min_distance():
    mu, lam = 0.6, 0.3
    T = MobiusMap(abs(mu), -lam, -lam * abs(mu), 1)
    theta = 2 * np.pi * np.arange(10_000) / 10_000
    sampled = np.min(np.abs(T(np.exp(1j * theta))))
    centre, radius = hypgeom.mobius_circle_image(T)
    expected = abs(abs(mu) - abs(lam)) / (1 - abs(mu) * abs(lam))
    assert sampled == pytest.approx(expected, abs=1e-9)
    assert abs(abs(centre) - radius) == pytest.approx(expected, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(*(st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False) for _ in range(4)))
def test_mobius_circle_consistency(a, b, c, d):
    try:
        T = MobiusMap(a, b, c, d)
        centre, radius = hypgeom.mobius_circle_image(T)
    except (DomainError, LineImage):
        return
    # keep the image at a reasonable size
    if radius > 1e3 or abs(abs(d) ** 2 - abs(c) ** 2) < 1e-3 * (abs(c) ** 2 + abs(d) ** 2):
        return
    z = np.exp(2j * np.pi * np.arange(1000) / 1000)
    assert np.max(np.abs(np.abs(T(z) - centre) - radius)) < 1e-9 * max(1.0, radius + abs(centre))
