from collections.abc import Callable
from typing import Literal, TypedDict

from ..jets import Jet2


type JSON = dict[str, "JSON"] | list["JSON"] | str | int | float | bool | None
type JSONDumps = Callable[[JSON], str]

type Point = tuple[float, float]
type Box = tuple[float, float, float, float]

type Constraint = Callable[[Jet2, Jet2], Jet2]
type HeightFormula = Callable[[Jet2, Jet2], tuple[Jet2, Jet2]]
type ScalarFormula = Callable[[Jet2, Jet2], Jet2]
type ChartEvaluator = Callable[[float, float], tuple[Jet2, Jet2]]
type JetEvaluator = Callable[[float, float], Jet2]

type ParameterValue = float | int


class ErrorData(TypedDict):
    message: str
    severity: Literal["common", "fatal"]
    cause: str
