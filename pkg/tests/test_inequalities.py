import math

import numpy as np
import pytest

from coercive_kit.exceptions import DimensionMismatch, HypothesisViolated, UnsupportedForBasis
from coercive_kit.inequalities import (
    CATALOG,
    HYPOTHESIS_FAILED,
    KIND_NAMES,
    VERIFIED,
    VIOLATED,
    ScenarioKind,
    check_points,
    convergence_sweep,
    friedrichs_explicit_form,
    mean_zero_constant,
    polynomial_intersection_dim,
    run,
    run_scenario,
    scenario_subspace,
    sweep,
    verify_identity_matrices,
)
from coercive_kit.space import BasisSpec, BoundaryRegion, DomainBox, assemble_gram, build_subspace, polynomial_subspace

UNIT = DomainBox.unit(1)
SQUARE = DomainBox.unit(2)
CP_1D = 1.0 + 1.0 / math.pi**2


def sine_oracle(lam_of_k, kmax=200):
    return min(l**2 / (1 + l + l**2) for l in (lam_of_k(k) for k in range(1, kmax + 1)))


class TestExamples:
    def test_mean_zero_1d(self):
        res = run_scenario(ScenarioKind("MeanZeroH1"), BasisSpec("legendre", 12, UNIT))
        assert res.verdict == VERIFIED
        assert abs(res.constants["C"] - CP_1D) <= 1e-8

    def test_classical_poincare_1d(self):
        res = run_scenario(ScenarioKind("ClassicalPoincare", m=1), BasisSpec("legendre", 12, UNIT))
        assert abs(res.constants["C"] - (1 + math.pi**2) / math.pi**2) <= 1e-8

    def test_bilaplace_identity_navier(self):
        res = run_scenario(ScenarioKind("BiLaplaceIdentity", tag="navier"), BasisSpec("legendre", 6, SQUARE))
        assert res.verdict == VERIFIED and res.residual <= 1e-10

    def test_point_constraints_1d(self):
        kind = ScenarioKind("PointConstraintsH2", points=((0.0,), (1.0,)))
        res = run_scenario(kind, BasisSpec("legendre", 10, UNIT))
        assert res.gamma_sharp > 0
        assert abs(res.gamma_sharp - sine_oracle(lambda k: (k * math.pi) ** 2)) <= 1e-6

    def test_projected_not_larger_than_classical(self):
        for m in (1, 2):
            res = run_scenario(ScenarioKind("ProjectedPoincare", m=m), BasisSpec("legendre", 10, UNIT))
            assert res.constants["C"] <= res.constants["C_classical"] * (1 + 1e-10)

    def test_classical_poincare_2d_m2(self):
        res = run_scenario(ScenarioKind("ClassicalPoincare", m=2), BasisSpec("legendre", 6, SQUARE))
        assert res.verdict == VERIFIED and res.kernel_dim == 3


class TestIdentity:
    def test_equal_forms(self, rng):
        g = assemble_gram(BasisSpec("legendre", 4, SQUARE), 2)
        V = build_subspace(g)
        assert verify_identity_matrices(g.semi, g.semi, V) == 0.0

    def test_unconstrained_fails(self):
        spec = BasisSpec("legendre", 2, SQUARE)
        g = assemble_gram(spec, 2, op="laplacian")
        assert verify_identity_matrices(g.op, g.semi, build_subspace(g)) > 1e-3

    def test_on_single_functions(self):
        # Lap(x^2) = 2 matches |x^2|_2; Lap(xy) = 0 while |xy|_2^2 = 2
        spec = BasisSpec("legendre", 2, SQUARE)
        g = assemble_gram(spec, 2, op="laplacian")
        x2 = np.zeros(spec.n)
        x2[spec.indices.index((2, 0))] = 1.0  # P2 in x, scaled
        assert x2 @ g.op @ x2 == pytest.approx(x2 @ g.semi @ x2)
        xy = np.zeros(spec.n)
        xy[spec.indices.index((1, 1))] = 1.0
        assert xy @ g.op @ xy == pytest.approx(0.0, abs=1e-12)
        assert xy @ g.semi @ xy > 1.0

    def test_dimension_mismatch(self):
        g = assemble_gram(BasisSpec("legendre", 2, SQUARE), 1)
        with pytest.raises(DimensionMismatch):
            verify_identity_matrices(np.eye(3), np.eye(3), build_subspace(g))

    def test_periodic_quadruple(self):
        res = run_scenario(ScenarioKind("QuadLaplaceIdentity", tag="periodic"), BasisSpec("fourier", 3, SQUARE))
        assert res.residual <= 1e-12


class TestHypotheses:
    def test_zero_measure_gamma(self):
        kind = ScenarioKind("BoundaryIntegralZero", region=BoundaryRegion.face(0, (0.4, 0.4)))
        res = run_scenario(kind, BasisSpec("legendre", 4, SQUARE))
        assert res.verdict == HYPOTHESIS_FAILED
        assert "Gamma" in res.notes[0]

    def test_dependent_points(self):
        with pytest.raises(HypothesisViolated):
            check_points([(0.0, 0.0), (0.5, 0.5), (1.0, 1.0)], 2)

    def test_wrong_count(self):
        with pytest.raises(HypothesisViolated):
            check_points([(0.0, 0.0), (1.0, 0.0)], 2)

    def test_point_outside(self):
        kind = ScenarioKind("PointConstraintsH2", points=((0.0,), (2.0,)))
        assert run_scenario(kind, BasisSpec("legendre", 6, UNIT)).verdict == HYPOTHESIS_FAILED

    def test_fourier_for_navier(self):
        with pytest.raises(UnsupportedForBasis):
            run_scenario(ScenarioKind("BiLaplaceIdentity", tag="navier"), BasisSpec("fourier", 3, SQUARE))

    def test_legendre_for_periodic(self):
        with pytest.raises(UnsupportedForBasis):
            run_scenario(ScenarioKind("BiLaplaceIdentity", tag="periodic"), BasisSpec("legendre", 6, SQUARE))

    def test_degree_too_low(self):
        with pytest.raises(UnsupportedForBasis):
            run_scenario(ScenarioKind("QuadLaplaceIdentity", tag="dirichlet"), BasisSpec("legendre", 3, SQUARE))

    def test_planar_only(self):
        res = run_scenario(ScenarioKind("BiLaplaceIdentity", tag="navier"), BasisSpec("legendre", 4, UNIT))
        assert res.verdict == HYPOTHESIS_FAILED

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            ScenarioKind("Nope")


class TestSweep:
    def test_monotone(self):
        rows = convergence_sweep(ScenarioKind("MeanZeroH1"), [4, 6, 8, 10, 12], UNIT)
        c = [r["constant"] for r in rows]
        assert all(b >= a - 1e-10 for a, b in zip(c, c[1:]))
        assert abs(c[-1] - c[-2]) < 1e-8

    def test_navier_decreasing(self):
        rows = convergence_sweep(ScenarioKind("NavierH2"), [4, 6, 8], SQUARE)
        g = [r["constant"] for r in rows]
        assert all(b <= a + 1e-10 for a, b in zip(g, g[1:]))

    def test_single(self):
        assert len(convergence_sweep(ScenarioKind("MeanZeroH1"), [6], UNIT)) == 1

    def test_descending(self):
        with pytest.raises(ValueError):
            convergence_sweep(ScenarioKind("MeanZeroH1"), [8, 6], UNIT)


class TestFriedrichsExplicit:
    def test_counterexample_near_constants(self):
        # v = 1 + t x with Gamma = {x = 0}: slack is (C - 4/3) t^2 - t < 0 for small t
        spec = BasisSpec("legendre", 4, SQUARE)
        g = assemble_gram(spec, 1)
        c_p = mean_zero_constant(g)
        R = friedrichs_explicit_form(g, BoundaryRegion.face(0), c_p)
        one = polynomial_subspace(spec, 0)[:, 0]
        x = np.zeros(spec.n)
        x[spec.indices.index((1, 0))] = 0.5  # P1 on (0,1) is 2x - 1
        x += 0.5 * one
        t = 0.1
        v = one + t * x
        assert v @ R @ v == pytest.approx((c_p - 4 / 3) * t**2 - t, rel=1e-10)
        assert v @ R @ v < 0

    def test_verdict_follows_worst_case(self):
        res = run("friedrichs-explicit")
        assert res.verdict == VIOLATED
        assert res.constants["sampled_slack"] >= 0
        assert res.constants["worst_slack"] < 0


class TestPolynomialIntersection:
    def test_full_space(self):
        spec = BasisSpec("legendre", 5, SQUARE)
        g = assemble_gram(spec, 1)
        assert polynomial_intersection_dim(build_subspace(g), spec, 3) == 10

    def test_clamped(self):
        gram, V = scenario_subspace(ScenarioKind("BiLaplaceCoercivity", tag="dirichlet"), BasisSpec("legendre", 6, SQUARE))
        assert polynomial_intersection_dim(V, gram.spec, 3) == 0

    def test_one_condition(self):
        # functions vanishing at a point still contain x, y, ... of P1 minus one
        spec = BasisSpec("legendre", 4, SQUARE)
        from coercive_kit.space import PointValue

        V = build_subspace(assemble_gram(spec, 2), [PointValue((0.0, 0.0))])
        assert polynomial_intersection_dim(V, spec, 1) == 2


class TestCatalog:
    def test_size(self):
        assert len(CATALOG) == 28
        assert {e.kind.name for e in CATALOG.values()} == set(KIND_NAMES)

    def test_stable_ids(self):
        for sid in ("mean-zero-h1", "bilaplace-identity-navier", "quadlaplace-coercivity-periodic-domain-mean-zero"):
            assert sid in CATALOG

    def test_deterministic(self):
        a, b = run("boundary-integral-zero"), run("boundary-integral-zero")
        assert a.to_dict() == b.to_dict()

    def test_box_override_moves_points(self):
        res = run("augmented-points-h2", box="0:2,0:1")
        assert res.verdict == VERIFIED

    def test_sweep_by_id(self):
        rows = sweep("classical-poincare-m1", [4, 8])
        assert rows[0]["constant"] <= rows[1]["constant"]
