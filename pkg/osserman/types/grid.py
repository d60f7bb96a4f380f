from typing import TypedDict


class GridFieldData(TypedDict):
    schema_version: int
    chart: str | None
    nx: int
    ny: int
    x: list[float]
    y: list[float]
    # row-major over (x index, y index)
    f: list[float]
    g: list[float]
    boundary_mask: list[bool]
