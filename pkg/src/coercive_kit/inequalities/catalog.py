"""Named, ready-to-run scenarios with sensible default discretizations."""

from dataclasses import dataclass, replace
from typing import Optional, Tuple

from ..space import BasisSpec, BoundaryRegion, DomainBox
from .scenarios import (
    AUGMENTED_POINTS_H2,
    BILAPLACE_COERCIVITY,
    BILAPLACE_IDENTITY,
    BOUNDARY_INTEGRAL_ZERO,
    BOUNDARY_TRACE_ZERO,
    CLASSICAL_POINCARE,
    DELTABC,
    DIRICHLET,
    FRIEDRICHS_EXPLICIT,
    FRIEDRICHS_L2_BOUNDARY,
    IDENTITY_TOL,
    MEAN_ZERO_H1,
    NAVIER,
    NAVIER_H2,
    PERIODIC,
    PERIODIC_BOUNDARY_MEAN_ZERO,
    PERIODIC_DOMAIN_MEAN_ZERO,
    PERIODIC_TAGS,
    POINT_CONSTRAINTS_H2,
    PROJECTED_POINCARE,
    QUADLAPLACE_COERCIVITY,
    QUADLAPLACE_IDENTITY,
    ScenarioKind,
    convergence_sweep,
    run_scenario,
)

INTERVAL = "0:1"
SQUARE = "0:1,0:1"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: ScenarioKind
    description: str
    group: str
    box: str
    degree: int
    family: str = "legendre"

    def spec(self, degree=None, box=None):
        box = DomainBox.parse(box or self.box)
        return BasisSpec(self.family, self.degree if degree is None else degree, box)


def _entries():
    face0 = BoundaryRegion.face(0)
    out = [
        CatalogEntry(
            "classical-poincare-m1",
            ScenarioKind(CLASSICAL_POINCARE, m=1),
            "H^1 norm bounded by the seminorm plus the squared mean",
            "poincare",
            INTERVAL,
            12,
        ),
        CatalogEntry(
            "classical-poincare-m2",
            ScenarioKind(CLASSICAL_POINCARE, m=2),
            "H^2 norm bounded by the seminorm plus squared means of v and Dv",
            "poincare",
            INTERVAL,
            12,
        ),
        CatalogEntry(
            "projected-poincare-m1",
            ScenarioKind(PROJECTED_POINCARE, m=1),
            "distance to constants in H^1 bounded by the seminorm",
            "poincare",
            INTERVAL,
            12,
        ),
        CatalogEntry(
            "projected-poincare-m2",
            ScenarioKind(PROJECTED_POINCARE, m=2),
            "distance to affine functions in H^2 bounded by the seminorm",
            "poincare",
            INTERVAL,
            12,
        ),
        CatalogEntry(
            "mean-zero-h1",
            ScenarioKind(MEAN_ZERO_H1),
            "H^1 coercivity of the seminorm on mean-zero functions",
            "poincare",
            INTERVAL,
            12,
        ),
        CatalogEntry(
            "boundary-integral-zero",
            ScenarioKind(BOUNDARY_INTEGRAL_ZERO, region=face0),
            "H^1 coercivity on functions with zero integral over Gamma",
            "friedrichs",
            SQUARE,
            8,
        ),
        CatalogEntry(
            "boundary-trace-zero",
            ScenarioKind(BOUNDARY_TRACE_ZERO, region=face0),
            "H^1 coercivity on functions vanishing on Gamma",
            "friedrichs",
            SQUARE,
            8,
        ),
        CatalogEntry(
            "friedrichs-explicit",
            ScenarioKind(FRIEDRICHS_EXPLICIT, region=face0),
            "||v||_1^2 <= C_p |v|_1^2 + |Omega|/|Gamma|^2 (int_Gamma v)^2 with the mean-zero constant",
            "friedrichs",
            SQUARE,
            8,
        ),
        CatalogEntry(
            "friedrichs-l2-boundary",
            ScenarioKind(FRIEDRICHS_L2_BOUNDARY, region=face0),
            "||v||_1^2 <= C (|v|_1^2 + ||v||_{L2(Gamma)}^2)",
            "friedrichs",
            SQUARE,
            8,
        ),
        CatalogEntry(
            "point-constraints-h2",
            ScenarioKind(POINT_CONSTRAINTS_H2, points=((0.0,), (1.0,))),
            "H^2 coercivity on functions vanishing at d+1 affinely independent points",
            "points",
            INTERVAL,
            10,
        ),
        CatalogEntry(
            "navier-h2",
            ScenarioKind(NAVIER_H2),
            "H^2 coercivity of the seminorm on H^2 cap H^1_0",
            "points",
            SQUARE,
            10,
        ),
        CatalogEntry(
            "augmented-points-h2",
            ScenarioKind(AUGMENTED_POINTS_H2, points=((0.0, 0.0), (1.0, 0.0), (0.0, 1.0))),
            "H^2 coercivity of |v|_2^2 + sum_i v(p_i)^2",
            "points",
            SQUARE,
            8,
        ),
    ]
    specs = {
        "bilaplace-identity": (BILAPLACE_IDENTITY, (DIRICHLET, NAVIER, PERIODIC), 6, 4),
        "bilaplace-coercivity": (
            BILAPLACE_COERCIVITY,
            (DIRICHLET, NAVIER, PERIODIC_BOUNDARY_MEAN_ZERO, PERIODIC_DOMAIN_MEAN_ZERO),
            6,
            4,
        ),
        "quadlaplace-identity": (QUADLAPLACE_IDENTITY, (DIRICHLET, NAVIER, DELTABC, PERIODIC), 8, 3),
        "quadlaplace-coercivity": (
            QUADLAPLACE_COERCIVITY,
            (DIRICHLET, NAVIER, DELTABC, PERIODIC_BOUNDARY_MEAN_ZERO, PERIODIC_DOMAIN_MEAN_ZERO),
            10,
            3,
        ),
    }
    what = {
        BILAPLACE_IDENTITY: "||Lap v||^2 = |v|_2^2",
        BILAPLACE_COERCIVITY: "H^2 coercivity of ||Lap v||^2",
        QUADLAPLACE_IDENTITY: "||Lap^2 v||^2 = |v|_4^2",
        QUADLAPLACE_COERCIVITY: "H^4 coercivity of ||Lap^2 v||^2",
    }
    where = {
        DIRICHLET: "clamped space",
        NAVIER: "hinged space",
        DELTABC: "space with v = Lap v = 0 on the boundary",
        PERIODIC: "periodic space",
        PERIODIC_BOUNDARY_MEAN_ZERO: "periodic space with zero boundary integral",
        PERIODIC_DOMAIN_MEAN_ZERO: "periodic space with zero mean",
    }
    for prefix, (name, tags, legendre_degree, modes) in specs.items():
        group = prefix.split("-")[0]
        for tag in tags:
            periodic = tag in PERIODIC_TAGS
            out.append(
                CatalogEntry(
                    f"{prefix}-{tag}",
                    ScenarioKind(name, tag=tag),
                    f"{what[name]} on the {where[tag]}",
                    group,
                    SQUARE,
                    modes if periodic else legendre_degree,
                    "fourier" if periodic else "legendre",
                )
            )
    return {e.id: e for e in out}


CATALOG = _entries()


def list_scenarios(filter=None):
    """Catalog entries whose id contains ``filter`` (all when ``None``)."""
    return [e for e in CATALOG.values() if filter is None or filter in e.id]


def get_entry(scenario_id):
    try:
        return CATALOG[scenario_id]
    except KeyError:
        raise KeyError(f"unknown scenario {scenario_id!r}; see `coercive-kit list`") from None


def _override(entry, box, region, points):
    kind = entry.kind
    d = DomainBox.parse(box or entry.box).d
    if region is not None:
        if isinstance(region, str):
            region = BoundaryRegion.parse(region, d)
        kind = replace(kind, region=region)
    elif kind.region is not None and box is not None:
        kind = replace(kind, region=BoundaryRegion.face(0))
    if points is not None:
        kind = replace(kind, points=tuple(tuple(float(x) for x in p) for p in points))
    elif kind.points is not None and box is not None and d != len(kind.points[0]):
        # default points belong to the default box; use the lower corner and
        # the d adjacent corners of the new box
        bx = DomainBox.parse(box)
        lo = tuple(a for a, _ in bx.intervals)
        pts = [lo] + [tuple(bx.intervals[k][1] if j == k else lo[j] for j in range(d)) for k in range(d)]
        kind = replace(kind, points=tuple(pts))
    return kind


def run(scenario_id, degree=None, box=None, region=None, points=None, tol=IDENTITY_TOL, seed=None):
    """Run a catalog scenario, optionally overriding the discretization."""
    entry = get_entry(scenario_id)
    kind = _override(entry, box, region, points)
    result = run_scenario(kind, entry.spec(degree, box), tol=tol, seed=seed)
    result.parameters = {"scenario": scenario_id, "box": box or entry.box, **result.parameters}
    return result


def sweep(scenario_id, degrees, box=None, region=None, points=None, tol=IDENTITY_TOL, seed=None):
    entry = get_entry(scenario_id)
    kind = _override(entry, box, region, points)
    return convergence_sweep(
        kind, degrees, DomainBox.parse(box or entry.box), family=entry.family, tol=tol, seed=seed
    )
