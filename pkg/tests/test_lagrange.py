from __future__ import annotations

import math

import pytest

from osserman import (
    DomainError, GradientEstimateViolated, Jet2, NonSimplyConnectedDomain, PathExitsDomain, PotentialField,
    catalog, jets,
)
from osserman.geometry import fundamental_form
from osserman.lagrange import (
    conjugate_residual, deform, gradient_estimate, integrate_potential, integrate_potential_field,
    lagrange_one_form, maximal_equation_residual, omega_closed_form, trace_potential,
)


GRAPHS = {
    "helicoid":                  catalog.helicoid,
    "catenoid":                  catalog.catenoid,
    "scherk":                    catalog.scherk,
    "scherk_sheared_orthogonal": lambda: catalog.scherk_sheared(2.0, math.pi / 4.0),
    "scherk_sheared":            lambda: catalog.scherk_sheared(1.5, 0.6),
    "saddle_tower":              catalog.saddle_tower,
    "saddle_tower_general":      lambda: catalog.saddle_tower_general(2.0, math.pi / 4.0),
    "saddle_tower_skew":         lambda: catalog.saddle_tower_general(1.3, 0.5),
}


@pytest.mark.parametrize("name", GRAPHS)
def test_closed_form_potentials_solve_the_lagrange_system(name: str, sample, scaled) -> None:
    graph = GRAPHS[name]()
    for point in sample(graph.chart, 60):
        jp = graph.chart.f_jet(*point)
        jq = graph.potential.jet(*point)
        assert max(scaled(r, jp, power=1) for r in conjugate_residual(jp, jq)) <= 1e-12
        assert gradient_estimate(jq) < 1.0
        assert scaled(maximal_equation_residual(jq), jp) <= 1e-9


def test_gradient_estimate_violation_is_reported() -> None:
    with pytest.raises(GradientEstimateViolated):
        maximal_equation_residual(Jet2(0.0, 0.8, 0.6))


def test_one_form_of_a_flat_graph_vanishes() -> None:
    assert lagrange_one_form(Jet2(1.0)) == (0.0, 0.0)


@pytest.mark.parametrize(
    ("name", "closed", "target"),
    [
        ("helicoid", lambda x, y: 1.0 - math.sqrt(math.cos(y) ** 2 + x * x), (0.5, 0.4)),
        ("catenoid", lambda x, y: -x * math.tanh(y), (0.7, -0.6)),
        ("scherk", lambda x, y: -math.asin(math.sin(x) * math.sin(y)), (0.6, -0.5)),
    ],
)
def test_integration_reproduces_the_closed_forms(name: str, closed, target: tuple[float, float]) -> None:
    graph = GRAPHS[name]()
    trace = trace_potential(graph.chart, (0.0, 0.0), target)
    expected = graph.potential.value(*target) - graph.potential.value(0.0, 0.0)

    assert trace.value == pytest.approx(expected, abs=1e-8)
    assert trace.value == pytest.approx(closed(*target), abs=1e-8)
    assert trace.disagreement is not None and trace.disagreement <= 1e-10
    assert trace.gradient_norm < 1.0


def test_integrate_potential_returns_the_trace_value(scherk) -> None:
    value = integrate_potential(scherk.chart, (0.1, 0.1), (-0.4, 0.3), 0.1)
    assert value == pytest.approx(scherk.potential.value(-0.4, 0.3) - scherk.potential.value(0.1, 0.1), abs=1e-8)


def test_non_exact_one_form_is_detected() -> None:
    chart = catalog.catenoid_annulus()
    with pytest.raises(NonSimplyConnectedDomain) as info:
        trace_potential(chart, (-2.0, -2.0), (2.0, 2.0))
    assert info.value.disagreement == pytest.approx(2.0 * math.pi, abs=1e-6)


def test_path_leaving_the_domain_is_rejected(scherk) -> None:
    with pytest.raises(PathExitsDomain):
        trace_potential(scherk.chart, (0.0, 0.0), (2.0, 0.0))


def test_unchecked_path_independence_is_reported() -> None:
    # only the y-first staircase crosses the disc r ≤ 1
    chart = catalog.catenoid_annulus()
    trace = trace_potential(chart, (0.0, 1.5), (1.5, -0.5))
    assert trace.y_first is None and trace.disagreement is None
    assert not trace.path_independence_checked
    assert trace.data["path_independence_checked"] is False
    assert trace.value == pytest.approx(math.atan2(-0.5, 1.5) - math.pi / 2.0, abs=1e-8)
    assert trace_potential(chart, (-2.0, 1.5), (2.0, 2.0)).path_independence_checked


def test_puncture_between_samples_is_located() -> None:
    with pytest.raises(PathExitsDomain) as info:
        trace_potential(catalog.sigma_N(1), (-1.0, 0.0), (1.0, 0.0), 0.3)
    assert math.hypot(*info.value.point) <= 1e-3


def test_interpolated_potential_field(scherk) -> None:
    box = (-0.5, 0.5, -0.5, 0.5)
    field = integrate_potential_field(scherk.chart, box, 0.05)
    exact = scherk.potential.pinned((-0.5, -0.5))
    assert field.kind == "interpolated"
    for point in [(0.0, 0.0), (0.3, -0.2), (-0.45, 0.41)]:
        assert field.value(*point) == pytest.approx(exact.value(*point), abs=1e-5)
        assert field.gradient(*point) == pytest.approx(exact.gradient(*point), abs=1e-3)


def test_pinned_potential_vanishes_at_the_basepoint(scherk) -> None:
    pinned = scherk.potential.pinned((0.2, -0.3))
    assert pinned.value(0.2, -0.3) == 0.0
    assert pinned.gradient(0.1, 0.1) == pytest.approx(scherk.potential.gradient(0.1, 0.1))


@pytest.mark.parametrize("lam", [0.0, 0.5, 1.0])
def test_deformation(lam: float, scherk, sample) -> None:
    chart = deform(scherk.chart, scherk.potential, lam)
    if lam == 0.0:
        assert chart.mu is None and chart.hypersurface
    else:
        assert chart.mu == pytest.approx(1.0 / math.tanh(lam))
    assert chart.base is scherk.chart
    for point in sample(chart, 20):
        jp = scherk.chart.f_jet(*point)
        omega = fundamental_form(*chart.evaluate(*point)).omega
        assert omega_closed_form(jp, lam) == pytest.approx(omega, rel=1e-12)


def test_closed_form_field_wraps_evaluation_errors() -> None:
    field = PotentialField.closed_form("broken", lambda X, Y: jets.log(X))
    with pytest.raises(DomainError):
        field.value(-1.0, 0.0)
