from __future__ import annotations

import math

import numpy as np
import numpy.testing as npt
import pytest

from osserman import Hyperplane, InsufficientSamples, Jet2, ParameterError, ProjectivePoint, catalog, registry
from osserman.gauss import (
    _dual_osserman_residual, _gauss_map_second_representative, cauchy_riemann_residual, complexified_residual,
    fit_hyperplane, gauss_map, hyperplane_residual, hyperquadric_residual, is_degenerate, osserman_residual,
    sample_gauss_map,
)
from osserman.geometry import conformal_ratio


FAMILY_KEYS = [
    "helicoid_deform:lambda=0.3",
    "helicoid_deform:lambda=1",
    "catenoid_deform:lambda=0.3",
    "catenoid_deform:lambda=1",
    "scherk_doubly:lambda=0.7",
    "scherk_doubly_sheared:lambda=0.7,rho=1.5,alpha=0.6",
    "scherk_tower:lambda=0.5",
    "scherk_tower_general:lambda=0.5,rho=1.3,alpha=0.5",
    "helicoid_deform:lambda=1,printed=true",
    "scherk_doubly:lambda=-0.4,printed=true",
]


def _random_jets(seed: int) -> tuple[Jet2, Jet2]:
    rng = np.random.default_rng(seed)
    return Jet2(0.0, *rng.normal(size=5)), Jet2(0.0, *rng.normal(size=5))


@pytest.mark.parametrize("key", FAMILY_KEYS)
def test_lambda_families_solve_the_osserman_system(key: str, sample, scaled) -> None:
    chart = registry.resolve_chart(key)
    assert chart.mu is not None
    for point in sample(chart, 50):
        jf, jg = chart.evaluate(*point)
        assert max(scaled(r, jf, jg, power=2) for r in osserman_residual(jf, jg, chart.mu)) <= 1e-10
        assert scaled(abs(complexified_residual(jf, jg, chart.mu)), jf, jg, power=2) <= 1e-10


@pytest.mark.parametrize("lam", [0.3, 1.0])
def test_printed_variant_flips_the_osserman_coefficient(lam: float, coth) -> None:
    assert catalog.catenoid_deform(lam).mu == pytest.approx(coth(lam))
    assert catalog.catenoid_deform(lam, printed=True).mu == pytest.approx(-coth(lam))


@pytest.mark.parametrize("seed", range(5))
def test_dual_residual_is_rotated_primary_residual(seed: int) -> None:
    jf, jg = _random_jets(seed)
    mu = 1.7
    a, b = osserman_residual(jf, jg, mu)
    e, f, g = conformal_ratio(jf, jg)
    expected = ((e * b - f * a) / mu, (f * b - g * a) / mu)
    assert _dual_osserman_residual(jf, jg, mu) == pytest.approx(expected, rel=1e-10, abs=1e-12)


def test_zero_mu_is_rejected() -> None:
    with pytest.raises(ParameterError):
        osserman_residual(Jet2(0.0), Jet2(0.0), 0.0)
    with pytest.raises(ParameterError):
        complexified_residual(Jet2(0.0), Jet2(0.0), math.nan)


@pytest.mark.parametrize("seed", range(10))
def test_gauss_map_lies_on_the_hyperquadric(seed: int) -> None:
    jf, jg = _random_jets(seed)
    point = gauss_map(jf, jg)
    assert hyperquadric_residual(point) <= 1e-12
    assert point.distance(_gauss_map_second_representative(jf, jg)) <= 1e-12


def test_projective_normalisation_is_scale_invariant() -> None:
    point = ProjectivePoint(1.0 + 2.0j, 0.5j, -3.0, 0.1)
    scaled = ProjectivePoint(*(z * (0.3 - 1.1j) for z in point))
    assert point.distance(scaled) <= 1e-14
    assert point.z3 == 1.0


def test_holomorphic_curve_lies_on_both_holomorphic_hyperplanes(sample) -> None:
    chart = catalog.holomorphic(3)
    first, second = Hyperplane.holomorphic_pair()
    assert second.distance(Hyperplane.osserman(1.0)) <= 1e-15
    for point in sample(chart, 30):
        image = gauss_map(*chart.evaluate(*point))
        assert hyperplane_residual(image, first) <= 1e-12
        assert hyperplane_residual(image, second) <= 1e-12


def test_cauchy_riemann_residual_of_coordinates_on_a_conformal_chart() -> None:
    chart = catalog.holomorphic(2)
    X, Y = Jet2.seeds(0.4, -0.3)
    assert cauchy_riemann_residual(chart, X, Y, (0.4, -0.3)) == pytest.approx((0.0, 0.0), abs=1e-12)


@pytest.mark.parametrize("name", ["helicoid", "catenoid", "scherk", "saddle_tower"])
def test_graph_plus_i_potential_is_holomorphic(name: str, sample, scaled) -> None:
    graph = getattr(catalog, name)()
    for point in sample(graph.chart, 40):
        jp, jq = graph.chart.f_jet(*point), graph.potential.jet(*point)
        residual = cauchy_riemann_residual(graph.chart, jp, jq, point)
        assert max(scaled(r, jp, jq, power=2) for r in residual) <= 1e-10

        # flipping q doubles the gradient of p instead of cancelling it
        flipped = cauchy_riemann_residual(graph.chart, jp, -jq, point)
        assert math.hypot(*flipped) == pytest.approx(2.0 * math.hypot(jp.dx, jp.dy), rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("lam", [0.3, 1.0])
def test_fit_recovers_the_osserman_hyperplane(lam: float, sample, coth) -> None:
    chart = catalog.helicoid_deform(lam)
    images = sample_gauss_map(chart, sample(chart, 200))
    hyperplane, residual = fit_hyperplane(images)
    assert residual <= 1e-8
    assert is_degenerate(residual, len(images))
    assert hyperplane.distance(Hyperplane.osserman(coth(lam))) <= 1e-6


def test_fit_recovers_the_osserman_hyperplane_of_the_scherk_family(sample, coth) -> None:
    chart = catalog.scherk_doubly(0.7)
    images = sample_gauss_map(chart, sample(chart, 50))
    hyperplane, residual = fit_hyperplane(images)
    assert residual <= 1e-8
    assert hyperplane.distance(Hyperplane.osserman(coth(0.7))) <= 1e-6
    assert max(hyperplane_residual(image, Hyperplane.osserman(coth(0.7))) for image in images) <= 1e-10


def test_fit_of_generic_gauss_images_is_not_degenerate() -> None:
    images = [gauss_map(*_random_jets(seed)) for seed in range(40)]
    _, residual = fit_hyperplane(images)
    assert residual >= 1e-2
    assert not is_degenerate(residual, len(images))


def test_fit_of_repeated_samples() -> None:
    point = ProjectivePoint(1.0, 1j, 0.0, 0.0)
    hyperplane, residual = fit_hyperplane([point] * 6)
    assert residual <= 1e-14
    assert hyperplane_residual(point, hyperplane) <= 1e-14


def test_fit_needs_four_samples() -> None:
    with pytest.raises(InsufficientSamples):
        fit_hyperplane([ProjectivePoint(1.0, 0.0, 0.0, 0.0)] * 3)


def test_degeneracy_threshold() -> None:
    assert is_degenerate(1e-10, 100)
    assert not is_degenerate(1e-3, 100)


def test_hyperplane_normalisation() -> None:
    hyperplane = Hyperplane(0.0, 0.0, 2.0j, -2.0)
    assert hyperplane.a3 == pytest.approx(1.0 / math.sqrt(2.0))
    assert hyperplane.a4 == pytest.approx(1j / math.sqrt(2.0))
    npt.assert_allclose(hyperplane.data, [[0.0, 0.0], [0.0, 0.0], [2 ** -0.5, 0.0], [0.0, 2 ** -0.5]], atol=1e-15)
