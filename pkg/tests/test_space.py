import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.polynomial import polynomial as P

from coercive_kit.exceptions import UnsupportedDerivative, UnsupportedForBasis, ZeroMeasureRegion
from coercive_kit.space import (
    BILAPLACIAN,
    LAPLACIAN,
    BasisSpec,
    BoundaryIntegral,
    BoundaryRegion,
    DomainBox,
    DomainIntegralOfDerivative,
    MeanValue,
    PeriodicMatch,
    PointValue,
    TraceCoefficient,
    assemble_gram,
    assemble_operator_form,
    boundary_mass_matrix,
    build_subspace,
    constraint_vector,
    enumerate_multi_indices,
    eval_basis,
    polynomial_subspace,
    quadrature_rule,
)

SQUARE = DomainBox.unit(2)


def fit(spec, f):
    """Coefficients of ``f`` in ``spec`` by least squares on a fine grid (exact for members)."""
    rule = quadrature_rule(spec.box, max(spec.degree) + 4, periodic=spec.periodic)
    x = rule[0]
    A = eval_basis(spec, (0,) * spec.d, x)
    c, *_ = np.linalg.lstsq(A, f(*x.T), rcond=None)
    assert np.abs(A @ c - f(*x.T)).max() < 1e-11
    return c


class TestDomain:
    def test_multi_indices_exact(self):
        assert enumerate_multi_indices(2, 2, "exact") == [(0, 2), (1, 1), (2, 0)]

    def test_multi_indices_up_to(self):
        assert enumerate_multi_indices(1, 3, "up-to") == [(0,), (1,), (2,), (3,)]
        assert len(enumerate_multi_indices(3, 2, "up-to")) == math.comb(5, 3)

    def test_box_parse(self):
        box = DomainBox.parse("0:2,-1:1")
        assert box.d == 2 and box.volume == pytest.approx(4.0)

    def test_region_parse_and_measure(self):
        assert BoundaryRegion.parse("full", 2).measure(SQUARE) == pytest.approx(4.0)
        assert BoundaryRegion.parse("face:1", 2).measure(SQUARE) == pytest.approx(1.0)
        assert BoundaryRegion.parse("face:2:0.5", 2).measure(SQUARE) == pytest.approx(0.5)

    def test_zero_measure(self):
        with pytest.raises(ZeroMeasureRegion):
            BoundaryRegion.face(0, (0.3, 0.3)).measure(SQUARE)

    def test_bad_region_text(self):
        with pytest.raises(ValueError):
            BoundaryRegion.parse("edge:1", 2)


class TestQuadrature:
    def test_midpoint(self):
        x, w = quadrature_rule(DomainBox.unit(1), 1)
        np.testing.assert_allclose(x.ravel(), [0.5])
        np.testing.assert_allclose(w, [1.0])

    def test_quintic(self):
        x, w = quadrature_rule(DomainBox.unit(1), 3)
        assert abs(w @ x[:, 0] ** 5 - 1.0 / 6.0) <= 1e-14

    def test_square_weights(self):
        _, w = quadrature_rule(SQUARE, 2)
        assert w.sum() == pytest.approx(1.0, abs=1e-15)

    @given(st.integers(1, 12), st.integers(0, 2**31 - 1))
    def test_exact_to_degree(self, n, seed):
        coeffs = np.random.default_rng(seed).standard_normal(2 * n)
        x, w = quadrature_rule(DomainBox.parse("-0.5:2"), n)
        anti = P.polyint(coeffs)
        exact = P.polyval(2.0, anti) - P.polyval(-0.5, anti)
        assert abs(w @ P.polyval(x[:, 0], coeffs) - exact) <= 1e-12 * max(1.0, abs(exact), np.abs(coeffs).sum())

    def test_periodic_rule_exact_for_trig(self):
        x, w = quadrature_rule(DomainBox.unit(1), 8, periodic=True)
        assert abs(w @ np.cos(2 * np.pi * 3 * x[:, 0]) ** 2 - 0.5) <= 1e-15


class TestBasis:
    def test_legendre_values(self):
        spec = BasisSpec("legendre", 1, DomainBox.parse("-1:1"))
        np.testing.assert_allclose(eval_basis(spec, (0,), [[0.0]]), [[1.0, 0.0]])

    def test_legendre_second_derivative(self):
        spec = BasisSpec("legendre", 2, DomainBox.parse("-1:1"))
        np.testing.assert_allclose(eval_basis(spec, (2,), [[0.3]])[0, 2], 3.0)

    def test_fourier_derivative(self):
        spec = BasisSpec("fourier", 1, DomainBox.unit(1))
        # order [1, cos, sin]
        np.testing.assert_allclose(eval_basis(spec, (1,), [[0.0]])[0, 2], 2 * np.pi)

    def test_unsupported_derivative(self):
        spec = BasisSpec("legendre", 2, DomainBox.unit(1))
        with pytest.raises(UnsupportedDerivative):
            eval_basis(spec, (4,), [[0.5]])

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_polynomial_subspace_dim(self, k):
        spec = BasisSpec("legendre", 5, SQUARE)
        assert polynomial_subspace(spec, k).shape[1] == math.comb(k + 2, 2)

    def test_fourier_polynomials_are_constants(self):
        assert polynomial_subspace(BasisSpec("fourier", 3, SQUARE), 3).shape[1] == 1


class TestAssembly:
    def test_h1_gram_degree_one(self):
        g = assemble_gram(BasisSpec("legendre", 1, DomainBox.parse("-1:1")), 1)
        np.testing.assert_allclose(g.full, [[2.0, 0.0], [0.0, 8.0 / 3.0]], atol=1e-14)
        np.testing.assert_allclose(g.semi, [[0.0, 0.0], [0.0, 2.0]], atol=1e-14)

    def test_order_zero(self):
        g = assemble_gram(BasisSpec("legendre", 4, SQUARE), 0)
        np.testing.assert_array_equal(g.semi, g.full)

    def test_laplacian_of_affine(self):
        op = assemble_operator_form(BasisSpec("legendre", 1, SQUARE), LAPLACIAN)
        np.testing.assert_allclose(op, 0.0, atol=1e-14)

    def test_fourier_laplacian_mode(self):
        spec = BasisSpec("fourier", 1, SQUARE)
        op = assemble_operator_form(spec, LAPLACIAN)
        j = spec.indices.index((2, 2))  # sin(2 pi x) sin(2 pi y)
        assert op[j, j] == pytest.approx((8 * np.pi**2) ** 2 / 4, rel=1e-13)

    def test_seminorm_mixed_weight(self):
        # u = x^2 y: u_xx = 2y, u_xy = 2x (counted twice), u_yy = 0
        spec = BasisSpec("legendre", 3, SQUARE)
        c = fit(spec, lambda x, y: x**2 * y)
        assert c @ assemble_gram(spec, 2).semi @ c == pytest.approx(4.0 / 3.0 + 2 * 4.0 / 3.0, rel=1e-13)

    def test_full_norm_of_polynomial(self):
        # ||x^2||_{H^2(0,2)}^2 = 32/5 + 32/3 + 8
        spec = BasisSpec("legendre", 4, DomainBox.parse("0:2"))
        c = fit(spec, lambda x: x**2)
        assert c @ assemble_gram(spec, 2).full @ c == pytest.approx(32 / 5 + 32 / 3 + 8, rel=1e-13)

    def test_bilaplacian_matches_squared_laplacian(self):
        # u = x^2 y^2: Lap^2 u = 8
        spec = BasisSpec("legendre", 4, SQUARE)
        c = fit(spec, lambda x, y: x**2 * y**2)
        assert c @ assemble_operator_form(spec, BILAPLACIAN) @ c == pytest.approx(64.0, rel=1e-12)

    def test_fourier_gram_diagonal(self):
        g = assemble_gram(BasisSpec("fourier", 3, SQUARE), 2)
        off = g.full - np.diag(np.diag(g.full))
        assert np.abs(off).max() <= 1e-13 * np.abs(g.full).max()


class TestConstraints:
    def test_mean_row(self):
        spec = BasisSpec("legendre", 1, DomainBox.parse("-1:1"))
        np.testing.assert_allclose(constraint_vector(spec, MeanValue()), [[2.0, 0.0]], atol=1e-15)

    def test_point_row(self):
        spec = BasisSpec("legendre", 2, DomainBox.parse("-1:1"))
        np.testing.assert_allclose(constraint_vector(spec, PointValue((0.0,))), [[1.0, 0.0, -0.5]])

    def test_derivative_integral(self):
        spec = BasisSpec("legendre", 4, SQUARE)
        c = fit(spec, lambda x, y: x**3 * y)
        # int d/dx (x^3 y) = 3/3 * 1/2
        row = constraint_vector(spec, DomainIntegralOfDerivative((1, 0)))[0]
        assert row @ c == pytest.approx(0.5, rel=1e-13)

    def test_boundary_integral(self):
        spec = BasisSpec("legendre", 3, SQUARE)
        c = fit(spec, lambda x, y: y**2 + x)
        assert constraint_vector(spec, BoundaryIntegral(BoundaryRegion.face(0)))[0] @ c == pytest.approx(1 / 3)
        half = BoundaryRegion.face(0, (0.0, 0.5))
        assert constraint_vector(spec, BoundaryIntegral(half))[0] @ c == pytest.approx(1 / 24)
        full = constraint_vector(spec, BoundaryIntegral(BoundaryRegion.full(2)))[0] @ c
        # faces x=0, x=1, y=0, y=1
        assert full == pytest.approx(1 / 3 + 4 / 3 + 1 / 2 + 3 / 2)

    def test_boundary_mass(self):
        spec = BasisSpec("legendre", 3, SQUARE)
        c = fit(spec, lambda x, y: y)
        assert c @ boundary_mass_matrix(spec, BoundaryRegion.face(0)) @ c == pytest.approx(1 / 3)

    def test_zero_measure_integral(self):
        spec = BasisSpec("legendre", 3, SQUARE)
        with pytest.raises(ZeroMeasureRegion):
            constraint_vector(spec, BoundaryIntegral(BoundaryRegion.face(0, (0.5, 0.5))))

    @pytest.mark.parametrize("p", [2, 4, 6])
    def test_trace_rows(self, p, rng):
        spec = BasisSpec("legendre", (p, p + 1), DomainBox.parse("0:2,-1:1"))
        rows = constraint_vector(spec, TraceCoefficient(0, 0))
        assert rows.shape == (p + 2, spec.n)  # one row per face coefficient
        g = assemble_gram(spec, 1)
        V = build_subspace(g, [TraceCoefficient(0, 0)])
        u = V.basis @ rng.standard_normal(V.dim)
        pts = np.column_stack([np.zeros(50), rng.uniform(-1, 1, 50)])
        assert np.abs(eval_basis(spec, (0, 0), pts) @ u).max() <= 1e-12 * np.abs(u).max()

    def test_normal_derivative_trace(self, rng):
        spec = BasisSpec("legendre", 5, SQUARE)
        V = build_subspace(assemble_gram(spec, 1), [TraceCoefficient(3, 1)])
        u = V.basis @ rng.standard_normal(V.dim)
        pts = np.column_stack([rng.uniform(0, 1, 30), np.ones(30)])
        assert np.abs(eval_basis(spec, (0, 1), pts) @ u).max() <= 1e-10 * np.abs(u).max()

    def test_laplacian_trace(self, rng):
        spec = BasisSpec("legendre", 6, SQUARE)
        V = build_subspace(assemble_gram(spec, 2), [TraceCoefficient(1, "laplacian")])
        u = V.basis @ rng.standard_normal(V.dim)
        pts = np.column_stack([np.ones(30), rng.uniform(0, 1, 30)])
        lap = (eval_basis(spec, (2, 0), pts) + eval_basis(spec, (0, 2), pts)) @ u
        assert np.abs(lap).max() <= 1e-9 * np.abs(u).max()

    def test_periodic_match_fourier_rejected(self):
        with pytest.raises(UnsupportedForBasis):
            constraint_vector(BasisSpec("fourier", 2, SQUARE), PeriodicMatch(0, 1))

    def test_periodic_match(self, rng):
        spec = BasisSpec("legendre", 5, SQUARE)
        V = build_subspace(assemble_gram(spec, 1), [PeriodicMatch(0, 2)])
        u = V.basis @ rng.standard_normal(V.dim)
        y = rng.uniform(0, 1, 20)
        for s in [(0, 0), (1, 0)]:
            lo = eval_basis(spec, s, np.column_stack([np.zeros(20), y])) @ u
            hi = eval_basis(spec, s, np.column_stack([np.ones(20), y])) @ u
            np.testing.assert_allclose(lo, hi, atol=1e-10)


class TestBuildSubspace:
    def test_unconstrained(self):
        g = assemble_gram(BasisSpec("legendre", 4, DomainBox.unit(1)), 1)
        assert build_subspace(g).dim == 5

    def test_mean_removes_constants(self):
        g = assemble_gram(BasisSpec("legendre", 1, DomainBox.parse("-1:1")), 1)
        V = build_subspace(g, [MeanValue()])
        assert V.dim == 1 and abs(V.basis[0, 0]) < 1e-15

    def test_two_points(self):
        g = assemble_gram(BasisSpec("legendre", 3, DomainBox.unit(1)), 2)
        V = build_subspace(g, [PointValue((0.0,)), PointValue((1.0,))])
        assert V.dim == 2
        assert V.gram_error() <= 1e-12

    def test_everything_removed(self):
        g = assemble_gram(BasisSpec("legendre", 1, DomainBox.unit(1)), 1)
        V = build_subspace(g, [PointValue((0.0,)), PointValue((1.0,))])
        assert V.dim == 0
