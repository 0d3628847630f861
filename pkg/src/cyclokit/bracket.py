"""Closed real intervals carrying the provenance of the bound that made them."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    y_or_x: int
    conditional: bool
    source: str

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"empty bracket [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def __contains__(self, value: float) -> bool:
        return self.lo <= value <= self.hi

    def within(self, other: "Bracket", slack: float = 1e-12) -> bool:
        return other.lo - slack <= self.lo and self.hi <= other.hi + slack

    def as_dict(self) -> dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "point": self.y_or_x,
            "grh": self.conditional,
            "source": self.source,
        }
