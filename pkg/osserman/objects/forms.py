import math


__all__ = ["FundamentalForm"]


class FundamentalForm:
    __slots__ = ("E", "F", "G", "omega",)

    def __init__(self, E: float, F: float, G: float, omega: float) -> None:
        self.E: float = E
        self.F: float = F
        self.G: float = G
        self.omega: float = omega

    def __repr__(self) -> str:
        return f"<osserman.FundamentalForm: E={self.E}, F={self.F}, G={self.G}, omega={self.omega}>"

    def __iter__(self):
        yield from (self.E, self.F, self.G, self.omega)

    @property
    def determinant(self) -> float:
        return self.E * self.G - self.F * self.F

    def conformal_ratio(self) -> tuple[float, float, float]:
        return self.E / self.omega, self.F / self.omega, self.G / self.omega

    def normalised_matrix(self) -> tuple[tuple[float, float], tuple[float, float]]:
        e, f, g = self.conformal_ratio()
        return (e, f), (f, g)

    def is_consistent(self, *, rtol: float = 1e-12) -> bool:
        return math.isclose(self.omega ** 2, self.determinant, rel_tol=rtol, abs_tol=rtol)
