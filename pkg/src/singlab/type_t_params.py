"""The parameter triple of a type T(r,s,d) singularity."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import SinglabError

__all__ = ["TypeTParams"]


@dataclass(frozen=True)
class TypeTParams:
    """Parameters of the singularity (1/(r^2 s))(1, r s d - 1).

    d is canonicalized into [1, r-1] at construction (d and d + r present
    the same group mod r^2 s), which makes params <-> group a bijection.
    Requires r >= 2, s >= 1 and gcd(r, d) = 1.
    """

    r: int
    s: int
    d: int

    def __post_init__(self) -> None:
        if self.r < 2:
            raise SinglabError(f"need r >= 2, got r={self.r}")
        if self.s < 1:
            raise SinglabError(f"need s >= 1, got s={self.s}")
        object.__setattr__(self, "d", self.d % self.r)
        if self.d == 0 or gcd(self.r, self.d) != 1:
            raise SinglabError(
                f"d must be invertible mod r, got (r, d) = ({self.r}, {self.d})"
            )

    @property
    def group_order(self) -> int:
        return self.r * self.r * self.s

    def label(self) -> str:
        return f"T({self.r},{self.s},{self.d})"
