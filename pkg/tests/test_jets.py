from __future__ import annotations

import math

import numpy as np
import numpy.testing as npt
import pytest

from osserman import jets
from osserman.jets import Jet2, Jet3, finite_difference_jet


def test_seeds_are_coordinate_jets() -> None:
    X, Y = Jet2.seeds(2.0, -3.0)
    assert X.fields() == (2.0, 1.0, 0.0, 0.0, 0.0, 0.0)
    assert Y.fields() == (-3.0, 0.0, 1.0, 0.0, 0.0, 0.0)


def test_product_rule() -> None:
    X, Y = Jet2.seeds(2.0, 3.0)
    jet = X * Y
    assert jet.fields() == (6.0, 3.0, 2.0, 0.0, 1.0, 0.0)


def test_quotient_and_power() -> None:
    X, Y = Jet2.seeds(1.5, 0.5)
    jet = (X * X + Y) ** 0.5 / X
    expected = finite_difference_jet(lambda x, y: math.sqrt(x * x + y) / x, 1.5, 0.5)
    npt.assert_allclose(jet.fields(), expected.fields(), atol=1e-6)


@pytest.mark.parametrize(
    ("name", "point"),
    [
        ("sin", (0.3, 0.7)),
        ("cos", (0.3, 0.7)),
        ("tan", (0.3, 0.4)),
        ("exp", (0.2, -0.1)),
        ("log", (1.3, 0.8)),
        ("sqrt", (1.3, 0.8)),
        ("sinh", (0.4, 0.5)),
        ("cosh", (0.4, 0.5)),
        ("tanh", (0.4, 0.5)),
        ("arcsin", (0.3, 0.4)),
        ("arccos", (0.3, 0.4)),
        ("arctan", (0.9, 1.1)),
        ("arsinh", (0.9, 1.1)),
        ("arcosh", (1.4, 1.2)),
    ],
)
def test_elementary_functions_match_finite_differences(name: str, point: tuple[float, float]) -> None:
    jet_function = getattr(jets, name)
    scalar_function = getattr(np, {"arsinh": "arcsinh", "arcosh": "arccosh"}.get(name, name))
    x, y = point

    X, Y = Jet2.seeds(x, y)
    jet = jet_function(X * Y + 0.5 * X)
    expected = finite_difference_jet(lambda s, t: float(scalar_function(s * t + 0.5 * s)), x, y)
    npt.assert_allclose(jet.fields(), expected.fields(), rtol=1e-6, atol=1e-6)


def test_arcosh_outside_domain_raises() -> None:
    with pytest.raises(ValueError):
        jets.arcosh(Jet2(0.5, 1.0, 0.0))


def test_sup_norm_and_finiteness() -> None:
    jet = Jet2(1.0, -4.0, 2.0, 0.5, 0.0, 3.0)
    assert jet.sup_norm() == 4.0
    assert jet.is_finite()
    assert not Jet2(math.inf).is_finite()


def test_jet3_determinant_and_trace() -> None:
    jet = Jet3(0.0, 0.0, 0.0, 0.0, 2.0, 0.3, -0.7, 1.5, 0.4, -1.1)
    hessian = jet.hessian()
    npt.assert_allclose(hessian, hessian.T)
    assert jet.determinant() == pytest.approx(float(np.linalg.det(hessian)), rel=1e-12)
    assert jet.trace() == pytest.approx(2.0 + 1.5 - 1.1)


def test_finite_difference_oracle_on_polynomial() -> None:
    jet = finite_difference_jet(lambda x, y: x ** 3 * y + y ** 2, 0.5, -1.0)
    npt.assert_allclose(jet.fields(), (-0.125 + 1.0, -0.75, 0.125 - 2.0, -3.0, 0.75, 2.0), atol=1e-7)
