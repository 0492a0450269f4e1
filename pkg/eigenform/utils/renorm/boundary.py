from dataclasses import dataclass
from enum import Enum


class Stratum(str, Enum):
    """Strata of the normalized simplex D_N."""
    D1 = "D1"  # interior: every coefficient positive
    D2 = "D2"  # irreducible, some coefficient zero
    D3 = "D3"  # reducible, nonzero image
    D4 = "D4"  # reducible, Lambda_r(E) = 0


@dataclass(frozen=True)
class BoundaryClass:
    """Stratum of a normalized form plus the numbers that decided it."""
    stratum: Stratum
    components: tuple[tuple[int, ...], ...]
    image_norm: float
    min_coefficient: float
    cross_check_image_norm: float | None = None
    cross_check_agrees: bool | None = None

    @property
    def on_boundary(self) -> bool:
        return self.stratum is not Stratum.D1

    def to_dict(self) -> dict:
        return {
            "stratum": self.stratum.value,
            "on_boundary": self.on_boundary,
            "components": [[j + 1 for j in component] for component in self.components],
            "image_norm": self.image_norm,
            "min_coefficient": self.min_coefficient,
            "cross_check_image_norm": self.cross_check_image_norm,
            "cross_check_agrees": self.cross_check_agrees,
        }
