from __future__ import annotations

import math

import numpy as np
import numpy.testing as npt
import pytest

from osserman import DomainError, Jet2, catalog
from osserman.geometry import (
    chart_finite_difference_jets, conformal_ratio, divergence_identities_residual, fundamental_form,
    laplace_beltrami, mean_curvature_vector, mss_residual,
)


FD_STEP = 1e-3


def test_flat_fundamental_form() -> None:
    form = fundamental_form(Jet2(0.0), Jet2(0.0))
    assert tuple(form) == (1.0, 0.0, 1.0, 1.0)
    assert conformal_ratio(Jet2(0.0), Jet2(0.0)) == (1.0, 0.0, 1.0)


@pytest.mark.parametrize("seed", range(5))
def test_area_element_matches_determinant(seed: int) -> None:
    rng = np.random.default_rng(seed)
    jf = Jet2(0.0, *rng.normal(size=2))
    jg = Jet2(0.0, *rng.normal(size=2))
    form = fundamental_form(jf, jg)
    assert form.is_consistent()
    assert form.omega ** 2 == pytest.approx(form.E * form.G - form.F ** 2, rel=1e-12)


def test_paraboloid_is_not_minimal() -> None:
    chart = catalog.paraboloid_test()
    assert mss_residual(*chart.evaluate(0.0, 0.0)) == (4.0, 0.0)
    assert laplace_beltrami(chart, (0.0, 0.0), FD_STEP) == pytest.approx((4.0, 0.0), abs=1e-5)
    npt.assert_allclose(mean_curvature_vector(chart, (0.0, 0.0), FD_STEP), (0.0, 0.0, 4.0, 0.0), atol=1e-5)


@pytest.mark.parametrize(
    "chart",
    [
        catalog.scherk_doubly(0.7),
        catalog.catenoid_deform(0.5),
        catalog.helicoid_deform(1.0),
        catalog.sigma_N(2),
        catalog.lagrangian_scherk(),
    ],
    ids=lambda chart: chart.name,
)
def test_minimal_charts_have_vanishing_second_order_operators(chart, sample, scaled) -> None:
    for point in sample(chart, 20):
        jf, jg = chart.evaluate(*point)
        assert max(scaled(r, jf, jg) for r in mss_residual(jf, jg)) <= 1e-10
        assert max(scaled(r, jf, jg) for r in divergence_identities_residual(chart, point, FD_STEP)) <= 1e-4
        assert max(scaled(r, jf, jg) for r in laplace_beltrami(chart, point, FD_STEP)) <= 1e-4
        assert max(scaled(r, jf, jg) for r in mean_curvature_vector(chart, point, FD_STEP)) <= 1e-4


def test_exact_jets_agree_with_finite_differences() -> None:
    chart = catalog.catenoid_deform(0.5)
    exact = chart.evaluate(0.2, 0.1)
    approximate = chart_finite_difference_jets(chart, 0.2, 0.1)
    for jet, oracle in zip(exact, approximate):
        npt.assert_allclose(jet.fields(), oracle.fields(), atol=1e-6)


def test_conformal_ratio_is_invariant_under_deformation(sample) -> None:
    base, deformed = catalog.scherk_doubly(0.0), catalog.scherk_doubly(1.0)
    for point in sample(base, 100):
        ratio, base_ratio = conformal_ratio(*deformed.evaluate(*point)), conformal_ratio(*base.evaluate(*point))
        assert max(abs(a - b) / (1.0 + abs(b)) for a, b in zip(ratio, base_ratio)) <= 1e-10


def test_finite_difference_operators_need_a_margin() -> None:
    chart = catalog.scherk_doubly(0.7)
    with pytest.raises(DomainError):
        divergence_identities_residual(chart, (math.pi / 2.0 - 1e-4, 0.0), FD_STEP)
    with pytest.raises(ValueError):
        laplace_beltrami(chart, (0.0, 0.0), 0.0)


def test_mean_curvature_vector_converges_at_second_order() -> None:
    chart = catalog.catenoid_deform(0.5)
    norms = [float(np.linalg.norm(mean_curvature_vector(chart, (0.2, 0.1), h))) for h in (0.04, 0.02, 0.01)]
    assert norms[2] <= 1e-2
    assert 3.6 <= norms[0] / norms[1] <= 4.4
    assert 3.6 <= norms[1] / norms[2] <= 4.4


@pytest.mark.parametrize("fd_step", [1e-2, 1e-3])
def test_divergence_identities_fail_on_the_paraboloid(fd_step: float) -> None:
    # P = Q = −8 / (3√3) at (1/2, 1/2)
    expected = 8.0 / (3.0 * math.sqrt(3.0))
    first, second = divergence_identities_residual(catalog.paraboloid_test(), (0.5, 0.5), fd_step)
    assert first == pytest.approx(expected, rel=1e-3)
    assert second == pytest.approx(-expected, rel=1e-3)
