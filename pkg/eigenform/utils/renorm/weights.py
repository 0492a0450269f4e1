import math
from dataclasses import dataclass

import numpy as np

from .exceptions import WeightsError


@dataclass(frozen=True)
class Weights:
    """The weight r_i > 0 placed on each cell V_i."""
    values: tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if not values:
            raise WeightsError("At least one weight is required.")
        for i, v in enumerate(values):
            if not math.isfinite(v) or v <= 0:
                raise WeightsError(f"Weight r_{i + 1} must be positive and finite, got {v}.")
        object.__setattr__(self, "values", values)

    @classmethod
    def parse(cls, text: str) -> "Weights":
        """Parses a comma separated list such as '1,1,1'; empty items are rejected."""
        items = [item.strip() for item in text.split(",")]
        if not all(items):
            raise WeightsError(f"Empty item in weights '{text}'.")
        try:
            return cls(tuple(float(item) for item in items))
        except ValueError:
            raise WeightsError(f"Cannot parse weights '{text}'.")

    @classmethod
    def ones(cls, k: int) -> "Weights":
        return cls((1.0,) * k)

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    def scaled(self, factor: float) -> "Weights":
        return Weights(tuple(factor * v for v in self.values))

    def to_list(self) -> list[float]:
        return list(self.values)
