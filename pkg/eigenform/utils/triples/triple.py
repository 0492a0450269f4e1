from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations


class PairIndex:
    """
    Lexicographic numbering of the unordered vertex pairs J of V(0).

    Vertices are 0-based here (P_j is index j - 1); `label` renders the
    1-based names used in reports.
    """
    def __init__(self, n_boundary: int):
        if n_boundary < 2:
            raise ValueError("A pair index needs at least two vertices.")
        self.n_boundary = n_boundary
        self.pairs: tuple[tuple[int, int], ...] = tuple(combinations(range(n_boundary), 2))
        self._index = {pair: d for d, pair in enumerate(self.pairs)}

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def index_of(self, j1: int, j2: int) -> int:
        """Linear index of the unordered pair {j1, j2}."""
        if j1 == j2:
            raise KeyError(f"({j1}, {j2}) is not a pair of distinct vertices.")
        return self._index[(min(j1, j2), max(j1, j2))]

    def pair(self, d: int) -> tuple[int, int]:
        return self.pairs[d]

    def label(self, d: int) -> str:
        j1, j2 = self.pairs[d]
        return f"P{j1 + 1}-P{j2 + 1}"

    @property
    def m_tilde(self) -> float:
        """Lower bound 1/#J on the largest coefficient of a normalized form."""
        return 1.0 / len(self.pairs)


@dataclass(frozen=True)
class FractalTriple:
    """
    Combinatorial description of (V(0), V(1), Psi).

    cell_maps[i][j] is the index in V(1) of psi_{i+1}(P_{j+1}); boundary
    vertex P_j has index j - 1. Construct through `parse_triple` or the
    catalog to get a validated instance.
    """
    n_boundary: int
    n_total: int
    cell_maps: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    name: str | None = field(default=None, compare=False)

    @property
    def n_cells(self) -> int:
        return len(self.cell_maps)

    @property
    def n_interior(self) -> int:
        return self.n_total - self.n_boundary

    @cached_property
    def pair_index(self) -> PairIndex:
        return PairIndex(self.n_boundary)

    @property
    def n_pairs(self) -> int:
        return len(self.pair_index)

    def cell_edge_set(self) -> list[list[tuple[int, int]]]:
        """
        For every cell, the V(1) edges carrying each coefficient, listed in
        pair order: entry d of cell i joins psi_i(P_j1) and psi_i(P_j2).
        """
        return [
            [(row[j1], row[j2]) for j1, j2 in self.pair_index]
            for row in self.cell_maps
        ]

    def vertex_label(self, index: int) -> str:
        if self.labels:
            return self.labels[index]
        if index < self.n_boundary:
            return f"P{index + 1}"
        return f"Q{index + 1}"

    def to_dict(self) -> dict:
        """Plain representation in canonical key order."""
        raw = {
            "n_boundary": self.n_boundary,
            "n_total": self.n_total,
            "cells": [list(row) for row in self.cell_maps],
        }
        if self.labels:
            raw["labels"] = list(self.labels)
        return raw


def cell_edge_set(triple: FractalTriple) -> list[list[tuple[int, int]]]:
    return triple.cell_edge_set()
