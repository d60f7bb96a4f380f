from __future__ import annotations

import math

import numpy as np
import numpy.testing as npt
import pytest

from osserman import Branch, ParameterError, catalog, registry
from osserman.gauss import gauss_map, hyperquadric_residual
from osserman.geometry import mss_residual


MINIMAL_KEYS = [
    "sigmaN:1",
    "sigmaN:2",
    "sigmaN:3",
    "sigma_alpha_beta:alpha=1,beta=1",
    "sigma_alpha_beta:alpha=1,beta=2",
    "sigma_alpha_beta:alpha=2,beta=1",
    "sigma_alpha_beta:alpha=1,beta=1,side=left",
    "catenoid_annulus",
    "holomorphic:3",
    "lagrangian_scherk",
    "helicoid_deform:lambda=0.3",
    "helicoid_deform:lambda=1",
    "catenoid_deform:lambda=0.3",
    "catenoid_deform:lambda=1",
    "scherk_doubly:lambda=0.3",
    "scherk_doubly:lambda=1",
    "scherk_doubly_sheared:lambda=0.3,rho=1.5,alpha=0.6",
    "scherk_tower:lambda=0.3",
    "scherk_tower:lambda=1",
    "scherk_tower_general:lambda=1,rho=1.3,alpha=0.5",
]

PATCHES = {
    "XN:1":          lambda: catalog.patch_XN(1),
    "XN:2":          lambda: catalog.patch_XN(2),
    "Fplus:0.5":     lambda: catalog.patch_F_plus(0.5),
    "Fplus:0":       lambda: catalog.patch_F_plus(0.0),
    "Fminus:0.5":    lambda: catalog.patch_F_minus(0.5),
    "Fminus:0":      lambda: catalog.patch_F_minus(0.0),
    "flat_patch":    catalog.flat_patch,
}


@pytest.mark.parametrize("key", MINIMAL_KEYS)
def test_catalog_charts_are_minimal(key: str, sample, scaled) -> None:
    chart = registry.resolve_chart(key)
    for point in sample(chart, 200):
        jf, jg = chart.evaluate(*point)
        assert max(scaled(r, jf, jg) for r in mss_residual(jf, jg)) <= 1e-8
        assert hyperquadric_residual(gauss_map(jf, jg)) <= 1e-12


def test_paraboloid_is_the_negative_control(sample) -> None:
    chart = catalog.paraboloid_test()
    assert all(mss_residual(*chart.evaluate(*point))[0] > 1.0 for point in sample(chart, 10))


@pytest.mark.parametrize("N", range(0, 6))
@pytest.mark.parametrize("t", [0.0, 0.4, 1.3])
def test_chebyshev_polynomials_of_cosh(N: int, t: float) -> None:
    assert catalog.chebyshev_T(N, math.cosh(t)) == pytest.approx(math.cosh(N * t), rel=1e-12)


def test_chebyshev_rejects_negative_degree() -> None:
    with pytest.raises(ParameterError):
        catalog.chebyshev_T(-1, 0.5)


@pytest.mark.parametrize("name", PATCHES)
def test_patches_are_conformal_and_harmonic(name: str) -> None:
    patch = PATCHES[name]()
    for u in np.linspace(-2.0, 2.0, 20):
        for v in np.linspace(0.0, 2.0 * math.pi, 20):
            u, v = float(u), float(v)
            assert catalog.conformality_defect(patch, u, v) <= 1e-10
            npt.assert_allclose(patch.laplacian(u, v), 0.0, atol=1e-9)
            assert catalog.harmonicity_defect(patch, u, v) <= 1e-4 * max(1.0, patch.conformal_factor(u, v))


@pytest.mark.parametrize("N", [1, 2, 3])
def test_chebyshev_patch_covers_the_punctured_plane_graph(N: int) -> None:
    chart, patch = catalog.sigma_N(N), catalog.patch_XN(N)
    for t in np.linspace(0.2, 1.2, 6):
        for theta in np.linspace(0.0, 2.0 * math.pi, 7):
            x1, x2, x3, x4 = patch.point(float(t), float(theta))
            f, g = chart.heights(float(x1), float(x2))
            assert f == pytest.approx(x3, rel=1e-10, abs=1e-10)
            assert g == pytest.approx(x4, rel=1e-10, abs=1e-10)


@pytest.mark.parametrize(
    ("N", "closed"),
    [
        (1, lambda x, y, r2: (x * math.sqrt(1.0 + 1.0 / r2), y * math.sqrt(1.0 + 1.0 / r2))),
        (2, lambda x, y, r2: ((x * x - y * y) * (1.0 + 0.5 / r2), 2.0 * x * y * (1.0 + 0.5 / r2))),
    ],
)
def test_chebyshev_graph_closed_forms(N: int, closed, sample) -> None:
    chart = catalog.sigma_N(N)
    for x, y in sample(chart, 50):
        npt.assert_allclose(chart.heights(x, y), closed(x, y, x * x + y * y), rtol=1e-12, atol=1e-12)


def test_orthogonal_sheared_scherk_is_congruent_to_scherk(sample) -> None:
    sheared, orthogonal = catalog.scherk_sheared(2.0, math.pi / 4.0), catalog.scherk()
    root2 = math.sqrt(2.0)
    for x, y in sample(sheared.chart, 30):
        a, b = root2 * (x - y), root2 * (x + y)
        assert sheared.chart.heights(x, y)[0] == pytest.approx(0.5 * orthogonal.chart.heights(a, b)[0], abs=1e-12)
        assert sheared.potential.value(x, y) == pytest.approx(
            -math.pi / 4.0 + 0.5 * orthogonal.potential.value(a, b), abs=1e-12,
        )


def test_orthogonal_general_tower_is_congruent_to_the_saddle_tower(sample) -> None:
    general, tower = catalog.saddle_tower_general(2.0, math.pi / 4.0), catalog.saddle_tower()
    root2 = math.sqrt(2.0)
    for x, y in sample(general.chart, 30):
        a, b = root2 * (x - y), root2 * (x + y)
        assert general.chart.heights(x, y)[0] == pytest.approx(
            math.pi / 4.0 - 0.5 * tower.chart.heights(a, b)[0], abs=1e-12,
        )
        assert general.potential.value(x, y) == pytest.approx(-0.5 * tower.potential.value(a, b), abs=1e-12)


# total curvature

def test_catenoid_family_total_curvature_tends_to_minus_four_pi() -> None:
    patch = catalog.patch_F_plus(0.5)
    values = [catalog.total_curvature(patch, T, 100) for T in (2.0, 4.0, 6.0)]
    assert values[-1] == pytest.approx(-4.0 * math.pi, abs=0.05)
    assert values[0] > values[1] > values[2]
    assert abs(values[2] + 4.0 * math.pi) < abs(values[0] + 4.0 * math.pi)


def test_catenoid_family_total_curvature_has_a_monotone_tail() -> None:
    patch = catalog.patch_F_plus(0.5)
    v4, v6, v8 = (catalog.total_curvature(patch, T, 200) for T in (4.0, 6.0, 8.0))
    assert v6 == pytest.approx(-4.0 * math.pi, abs=0.05)
    assert v8 == pytest.approx(-4.0 * math.pi, abs=0.05)
    assert abs(v8 - v6) <= abs(v6 - v4)


@pytest.mark.parametrize("T", [0.5, 1.0, 2.0])
def test_total_curvature_closed_forms(T: float) -> None:
    chebyshev, catenoid = catalog.patch_XN(1), catalog.patch_F_plus(0.0)
    assert catalog.total_curvature(chebyshev, T, 64) == pytest.approx(-4.0 * math.pi * math.tanh(2.0 * T), abs=1e-4)
    assert catalog.total_curvature(catenoid, T, 64) == pytest.approx(-4.0 * math.pi * math.tanh(T), abs=1e-4)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_chebyshev_patch_total_curvature(N: int) -> None:
    assert catalog.total_curvature(catalog.patch_XN(N), 4.0, 100) == pytest.approx(-4.0 * math.pi * N, abs=0.05)


@pytest.mark.parametrize("t", [0.0, 0.3, 1.0])
def test_gauss_curvature_of_the_first_chebyshev_patch(t: float) -> None:
    K = catalog.gauss_curvature_conformal(catalog.patch_XN(1), t, 0.7)
    assert K == pytest.approx(-2.0 / math.cosh(2.0 * t) ** 3, rel=1e-4)


def test_curvature_table() -> None:
    report = catalog.curvature_table(catalog.patch_F_plus(0.5), [4.0, 6.0], 100, expected=-4.0 * math.pi)
    assert [row.T for row in report.rows] == [4.0, 6.0]
    assert report.rows[1].tail < report.rows[0].tail
    assert report.passed
    assert report.data["command"] == "curvature"
    assert not catalog.curvature_table(catalog.patch_F_plus(0.5), [1.0], 32, expected=-4.0 * math.pi).passed


def test_total_curvature_arguments_are_checked() -> None:
    patch = catalog.patch_F_plus(0.5)
    with pytest.raises(ParameterError):
        catalog.total_curvature(patch, 0.0, 64)
    with pytest.raises(ParameterError):
        catalog.total_curvature(patch, 2.0, 8)
    with pytest.raises(ValueError):
        catalog.gauss_curvature_conformal(patch, 0.0, 0.0, 0.0)


# singularities

def test_chebyshev_graph_has_an_essential_puncture() -> None:
    report = catalog.singularity_probe(catalog.sigma_N(1))
    assert report.discrepancy == pytest.approx(2.0, abs=1e-3)
    assert all(ray.spread <= 1e-5 for ray in report.rays)


def test_chebyshev_graph_limit_along_the_negative_x_axis() -> None:
    # f = −√(1 + r²) on the negative x axis
    report = catalog.singularity_probe(catalog.sigma_N(1))
    ray = next(ray for ray in report.rays if ray.direction == (-1.0, 0.0))
    assert ray.f == pytest.approx(-1.0, abs=1e-9)
    assert ray.g == pytest.approx(0.0, abs=1e-12)


def test_flat_chart_has_no_singularity() -> None:
    assert catalog.singularity_probe(catalog.flat()).discrepancy <= 1e-12


# lagrangian scherk graph

def test_lagrangian_scherk_heights_are_a_gradient(sample) -> None:
    chart = catalog.lagrangian_scherk()
    for x, y in sample(chart, 200):
        jf, jg = chart.evaluate(x, y)
        assert jf.dy == pytest.approx(jg.dx, rel=1e-12, abs=1e-12)


def test_lagrangian_scherk_potential_solves_monge_ampere(sample, scaled) -> None:
    chart = catalog.lagrangian_scherk()
    for x, y in sample(chart, 200):
        hessian = catalog.lagrangian_scherk_hessian(x, y)
        assert scaled(catalog.monge_ampere_residual(hessian), hessian, power=2) <= 1e-9


# parameters

@pytest.mark.parametrize(
    "factory",
    [
        lambda: catalog.sigma_N(0),
        lambda: catalog.holomorphic(0),
        lambda: catalog.patch_XN(0),
        lambda: catalog.scherk_sheared(2.0, 0.0),
        lambda: catalog.scherk_sheared(-1.0, 0.5),
        lambda: catalog.saddle_tower_general(1.0, math.pi / 2.0),
        lambda: catalog.sigma_alpha_beta(1.0, 1.0, side=None),
        lambda: catalog.helicoid_deform(math.inf),
        lambda: catalog.patch_F_plus(math.nan),
    ],
)
def test_invalid_parameters_are_rejected(factory) -> None:
    with pytest.raises(ParameterError):
        factory()


def test_half_plane_branches() -> None:
    right = catalog.sigma_alpha_beta(1.0, 1.0, side=Branch.RIGHT)
    left = catalog.sigma_alpha_beta(1.0, 1.0, side=Branch.LEFT)
    assert right.contains(2.0, 0.5) and not right.contains(-2.0, 0.5)
    assert left.contains(-2.0, 0.5) and not left.contains(2.0, 0.5)
    annulus = catalog.sigma_alpha_beta(1.0, 0.0, side=None)
    assert annulus.hypersurface
    assert annulus.contains(-2.0, 0.0) and not annulus.contains(0.5, 0.0)
