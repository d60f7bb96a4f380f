"""
String keyed access to the catalog.

Keys have the form ``name`` or ``name:k=v,k=v``; a single bare value binds the entry's first
parameter, so ``sigmaN:2`` is ``sigmaN:N=2``.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping
from typing import Literal

from . import catalog
from .catalog import MinimalGraph
from .enums import Branch
from .exceptions import RegistryError
from .objects.chart import Chart
from .objects.patch import ConformalPatch
from .types.reports import RegistryEntryData


__all__ = [
    "RegistryEntry",
    "parse_key",
    "entries",
    "get_entry",
    "resolve_chart",
    "resolve_graph",
    "resolve_patch",
]


type EntryKind = Literal["chart", "graph", "patch"]
type Parameter = int | float | bool | str
type Factory = Callable[..., Chart | MinimalGraph | ConformalPatch]


class RegistryEntry:
    __slots__ = ("name", "kind", "factory", "defaults", "description", "reference",)

    def __init__(
        self,
        name: str,
        kind: EntryKind,
        factory: Factory,
        defaults: Mapping[str, Parameter] | None = None,
        *,
        description: str,
        reference: str,
    ) -> None:
        self.name: str = name
        self.kind: EntryKind = kind
        self.factory: Factory = factory
        self.defaults: dict[str, Parameter] = dict(defaults or {})
        self.description: str = description
        self.reference: str = reference

    def __repr__(self) -> str:
        return f"<osserman.RegistryEntry: name='{self.name}', kind='{self.kind}', defaults={self.defaults}>"

    @property
    def data(self) -> RegistryEntryData:
        return {
            "key":         self.name,
            "kind":        self.kind,
            "parameters":  {
                k: v for k, v in self.defaults.items() if isinstance(v, (int, float)) and not isinstance(v, bool)
            },
            "description": self.description,
            "reference":   self.reference,
        }

    def bind(self, raw: Mapping[str, str], overrides: Mapping[str, Parameter]) -> dict[str, Parameter]:
        parameters = dict(self.defaults)
        for name, value in raw.items():
            if name not in parameters:
                raise RegistryError(f"Registry entry '{self.name}' has no parameter '{name}'.")
            parameters[name] = _coerce(self.name, name, value, self.defaults[name])
        for name, value in overrides.items():
            if name not in parameters:
                raise RegistryError(f"Registry entry '{self.name}' has no parameter '{name}'.")
            parameters[name] = value
        return parameters

    def build(
        self,
        raw: Mapping[str, str],
        overrides: Mapping[str, Parameter],
    ) -> Chart | MinimalGraph | ConformalPatch:
        parameters = self.bind(raw, overrides)
        if "lambda" in parameters:
            parameters["lam"] = parameters.pop("lambda")
        if "side" in parameters:
            side = parameters["side"]
            try:
                parameters["side"] = None if side == "annulus" else Branch(side)
            except ValueError:
                raise RegistryError(
                    f"Registry entry '{self.name}' parameter 'side' must be 'right', 'left' or 'annulus'."
                ) from None
        return self.factory(**parameters)


def _coerce(entry: str, name: str, value: str, default: Parameter) -> Parameter:
    try:
        match default:
            case bool():
                if value.lower() not in ("true", "false", "1", "0"):
                    raise ValueError(value)
                return value.lower() in ("true", "1")
            case int():
                number = float(value)
                if not number.is_integer():
                    raise ValueError(value)
                return int(number)
            case float():
                number = float(value)
                if not math.isfinite(number):
                    raise ValueError(value)
                return number
            case _:
                return value
    except ValueError:
        raise RegistryError(f"Registry entry '{entry}' parameter '{name}' has malformed value '{value}'.") from None


_QUARTER_PI: float = math.pi / 4.0

_ENTRIES: dict[str, RegistryEntry] = {
    entry.name: entry for entry in (
        # charts
        RegistryEntry(
            "flat", "chart", catalog.flat,
            description="coordinate plane", reference="totally geodesic plane",
        ),
        RegistryEntry(
            "paraboloid_test", "chart", catalog.paraboloid_test,
            description="non-minimal paraboloid, negative control", reference="not minimal",
        ),
        RegistryEntry(
            "holomorphic", "chart", catalog.holomorphic, {"N": 2},
            description="holomorphic curve", reference="complex curve w = z^N, on two hyperplanes",
        ),
        RegistryEntry(
            "sigmaN", "chart", catalog.sigma_N, {"N": 1},
            description="Chebyshev punctured-plane graph with an isolated singularity at the origin",
            reference="Chebyshev graphs, conformal patch XN, non-removable singularity",
        ),
        RegistryEntry(
            "sigma_alpha_beta", "chart", catalog.sigma_alpha_beta, {"alpha": 1.0, "beta": 1.0, "side": "right"},
            description="two-parameter family: catenoid at beta = 0, helicoid at alpha = 0",
            reference="logarithmic family joining the catenoid and the helicoid",
        ),
        RegistryEntry(
            "catenoid_annulus", "chart", catalog.catenoid_annulus,
            description="catenoid over r > 1", reference="catenoid foliated by circles",
        ),
        RegistryEntry(
            "lagrangian_scherk", "chart", catalog.lagrangian_scherk,
            description="Lagrangian Scherk gradient graph solving a Monge–Ampère equation",
            reference="Lagrangian Scherk graph, Monge–Ampère equation",
        ),
        # minimal graphs in R³ with closed-form potentials
        RegistryEntry(
            "helicoid", "graph", catalog.helicoid,
            description="helicoid z = x tan y", reference="helicoid foliated by lines",
        ),
        RegistryEntry(
            "catenoid", "graph", catalog.catenoid,
            description="catenoid z = √(cosh²y − x²)", reference="catenoid, Lagrange potential x tanh y",
        ),
        RegistryEntry(
            "scherk", "graph", catalog.scherk,
            description="Scherk doubly periodic graph", reference="Scherk doubly periodic surface",
        ),
        RegistryEntry(
            "scherk_sheared", "graph", catalog.scherk_sheared, {"rho": 2.0, "alpha": _QUARTER_PI},
            description="Scherk graph over a rhomboid net", reference="Scherk surface over a chess board-like net",
        ),
        RegistryEntry(
            "saddle_tower", "graph", catalog.saddle_tower,
            description="Scherk saddle tower", reference="Scherk singly periodic saddle tower",
        ),
        RegistryEntry(
            "saddle_tower_general", "graph", catalog.saddle_tower_general, {"rho": 2.0, "alpha": _QUARTER_PI},
            description="generalized saddle tower", reference="generalized Scherk tower",
        ),
        # λ-families
        RegistryEntry(
            "helicoid_deform", "chart", catalog.helicoid_deform, {"lambda": 1.0, "printed": False},
            description="degenerate graphs foliated by hyperbolas or lines",
            reference="helicoid deformation, conformal patch Fminus",
        ),
        RegistryEntry(
            "catenoid_deform", "chart", catalog.catenoid_deform, {"lambda": 1.0, "printed": False},
            description="degenerate graphs of the annuli with total curvature −4π",
            reference="Hoffman–Osserman annuli, conformal patch Fplus, total curvature −4π",
        ),
        RegistryEntry(
            "scherk_doubly", "chart", catalog.scherk_doubly, {"lambda": 1.0, "printed": False},
            description="doubly periodic degenerate graphs over the square",
            reference="Scherk deformation, doubly periodic",
        ),
        RegistryEntry(
            "scherk_doubly_sheared", "chart", catalog.scherk_doubly_sheared,
            {"lambda": 1.0, "rho": 2.0, "alpha": _QUARTER_PI, "printed": False},
            description="doubly periodic degenerate graphs over a rhomboid net",
            reference="sheared Scherk deformation, doubly periodic",
        ),
        RegistryEntry(
            "scherk_tower", "chart", catalog.scherk_tower, {"lambda": 1.0, "printed": False},
            description="singly periodic degenerate graphs from the saddle tower",
            reference="saddle tower deformation, singly periodic",
        ),
        RegistryEntry(
            "scherk_tower_general", "chart", catalog.scherk_tower_general,
            {"lambda": 1.0, "rho": 2.0, "alpha": _QUARTER_PI, "printed": False},
            description="degenerate graphs from the generalized saddle tower",
            reference="generalized tower deformation",
        ),
        # patches
        RegistryEntry(
            "XN", "patch", catalog.patch_XN, {"N": 1},
            description="conformal patch of sigmaN", reference="Chebyshev graphs, total curvature −4πN",
        ),
        RegistryEntry(
            "Fplus", "patch", catalog.patch_F_plus, {"lambda": 0.5},
            description="catenoid patch", reference="Hoffman–Osserman annuli, total curvature −4π",
        ),
        RegistryEntry(
            "Fminus", "patch", catalog.patch_F_minus, {"lambda": 0.5},
            description="helicoid patch", reference="helicoid deformation",
        ),
        RegistryEntry(
            "flat_patch", "patch", catalog.flat_patch,
            description="coordinate plane patch", reference="totally geodesic plane",
        ),
    )
}


def parse_key(key: str) -> tuple[str, dict[str, str]]:
    name, _, rest = key.partition(":")
    name = name.strip()
    if not name:
        raise RegistryError(f"Registry key '{key}' is malformed.")
    entry = get_entry(name)
    raw: dict[str, str] = {}
    if not rest:
        return name, raw
    parts = [part.strip() for part in rest.split(",")]
    if len(parts) == 1 and "=" not in parts[0]:
        if not entry.defaults:
            raise RegistryError(f"Registry entry '{name}' takes no parameters.")
        raw[next(iter(entry.defaults))] = parts[0]
        return name, raw
    for part in parts:
        parameter, separator, value = part.partition("=")
        if not separator or not parameter or not value:
            raise RegistryError(f"Registry key '{key}' is malformed near '{part}'.")
        raw[parameter.strip()] = value.strip()
    return name, raw


def entries() -> list[RegistryEntry]:
    return list(_ENTRIES.values())


def get_entry(name: str) -> RegistryEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise RegistryError(f"Unknown registry key '{name}'.") from None


def _resolve(
    key: str,
    overrides: Mapping[str, Parameter] | None,
) -> tuple[RegistryEntry, Chart | MinimalGraph | ConformalPatch]:
    name, raw = parse_key(key)
    entry = get_entry(name)
    return entry, entry.build(raw, {k: v for k, v in (overrides or {}).items() if v is not None})


def resolve_chart(key: str, overrides: Mapping[str, Parameter] | None = None) -> Chart:
    entry, built = _resolve(key, overrides)
    match built:
        case Chart():
            return built
        case MinimalGraph():
            return built.chart
        case _:
            raise RegistryError(f"Registry entry '{entry.name}' is a patch, not a chart.")


def resolve_graph(key: str, overrides: Mapping[str, Parameter] | None = None) -> MinimalGraph:
    entry, built = _resolve(key, overrides)
    if not isinstance(built, MinimalGraph):
        raise RegistryError(f"Registry entry '{entry.name}' has no closed-form Lagrange potential.")
    return built


def resolve_patch(key: str, overrides: Mapping[str, Parameter] | None = None) -> ConformalPatch:
    entry, built = _resolve(key, overrides)
    if not isinstance(built, ConformalPatch):
        raise RegistryError(f"Registry entry '{entry.name}' is not a conformal patch.")
    return built
