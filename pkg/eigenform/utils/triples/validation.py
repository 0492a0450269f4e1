from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

import networkx as nx

from .exceptions import TripleStructureError, InvalidTripleError
from .triple import FractalTriple

# condition names, in the order they are checked
INJECTIVITY = "injectivity"
CONDITION_A = "a"
CONDITION_B = "b"
COVERAGE = "coverage"
CONDITION_C = "c"


@dataclass(frozen=True)
class ConditionFailure:
    """One violated triple condition together with a witness."""
    condition: str
    message: str
    witness: dict = field(default_factory=dict)

    def __str__(self) -> str:
        return f"condition {self.condition}: {self.message}"

    def to_dict(self) -> dict:
        return {"condition": self.condition, "message": self.message, "witness": self.witness}


@dataclass
class ValidationReport:
    """Outcome of validate_triple: pass, or the list of violated conditions."""
    failures: list[ConditionFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def conditions(self) -> list[str]:
        return [failure.condition for failure in self.failures]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "failures": [failure.to_dict() for failure in self.failures],
        }


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TripleStructureError(f"{what} must be an integer, got {value!r}.")
    return value


def _structure(raw) -> FractalTriple:
    """
    Checks table dimensions and index ranges and returns an unvalidated
    triple. Raises TripleStructureError; never reports conditions.
    """
    if isinstance(raw, FractalTriple):
        raw = raw.to_dict()
    if not isinstance(raw, Mapping):
        raise TripleStructureError("A triple must be a JSON object.")
    for key in ("n_boundary", "n_total", "cells"):
        if key not in raw:
            raise TripleStructureError(f"Missing key '{key}'.")

    n = _as_int(raw["n_boundary"], "n_boundary")
    m = _as_int(raw["n_total"], "n_total")
    cells = raw["cells"]
    if n < 2:
        raise TripleStructureError(f"n_boundary must be at least 2, got {n}.")
    if m < n:
        raise TripleStructureError(f"n_total ({m}) is smaller than n_boundary ({n}).")
    if not isinstance(cells, list) or len(cells) < n:
        raise TripleStructureError(f"Expected at least {n} cells (k >= N).")

    rows = []
    for i, row in enumerate(cells):
        if not isinstance(row, list) or len(row) != n:
            raise TripleStructureError(f"Cell {i + 1} must list exactly {n} vertex indices.")
        indices = tuple(_as_int(v, f"cells[{i}]") for v in row)
        for v in indices:
            if not 0 <= v < m:
                raise TripleStructureError(f"Cell {i + 1} refers to vertex {v} outside 0..{m - 1}.")
        rows.append(indices)

    labels = raw.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != m or not all(isinstance(s, str) for s in labels):
            raise TripleStructureError(f"labels must be a list of {m} strings.")
        labels = tuple(labels)

    return FractalTriple(n_boundary=n, n_total=m, cell_maps=tuple(rows), labels=labels)


def cell_graph(triple: FractalTriple) -> nx.Graph:
    """Union of the complete graphs on the cells V_i = psi_i(V(0))."""
    graph = nx.Graph()
    graph.add_nodes_from(range(triple.n_total))
    for row in triple.cell_maps:
        graph.add_edges_from(combinations(row, 2))
    return graph


def validate_triple(raw) -> ValidationReport:
    """
    Checks injectivity of each psi_i, the fixed-point condition a), the
    separation condition b), coverage of V(1) and the connectivity
    condition c). Every violation is reported with a 1-based witness.

    Raises:
        TripleStructureError: If the table dimensions are inconsistent.
    """
    triple = _structure(raw)
    n, m = triple.n_boundary, triple.n_total
    report = ValidationReport()

    for i, row in enumerate(triple.cell_maps):
        if len(set(row)) != n:
            seen: dict[int, int] = {}
            for h, v in enumerate(row):
                if v in seen:
                    report.failures.append(ConditionFailure(
                        INJECTIVITY,
                        f"psi_{i + 1} maps P{seen[v] + 1} and P{h + 1} to the same vertex {v}",
                        {"i": i + 1, "h": [seen[v] + 1, h + 1], "vertex": v},
                    ))
                    break
                seen[v] = h

    for j in range(n):
        if triple.cell_maps[j][j] != j:
            report.failures.append(ConditionFailure(
                CONDITION_A,
                f"psi_{j + 1}(P{j + 1}) = {triple.cell_maps[j][j]}, expected P{j + 1} (index {j})",
                {"i": j + 1, "j": j + 1},
            ))

    for i, row in enumerate(triple.cell_maps):
        for h, v in enumerate(row):
            if v < n and not (i == v and h == v):
                report.failures.append(ConditionFailure(
                    CONDITION_B,
                    f"psi_{i + 1}(P{h + 1}) = P{v + 1} (i={i + 1},h={h + 1},j={v + 1})",
                    {"i": i + 1, "h": h + 1, "j": v + 1},
                ))

    covered = {v for row in triple.cell_maps for v in row}
    missing = sorted(set(range(m)) - covered)
    if missing:
        report.failures.append(ConditionFailure(
            COVERAGE,
            f"vertices {', '.join(triple.vertex_label(v) for v in missing)} lie in no cell",
            {"vertices": missing},
        ))

    components = sorted((sorted(c) for c in nx.connected_components(cell_graph(triple))), key=lambda c: c[0])
    if len(components) > 1:
        report.failures.append(ConditionFailure(
            CONDITION_C,
            f"V(1) splits into {len(components)} components; one of them is "
            f"{{{', '.join(triple.vertex_label(v) for v in components[-1])}}}",
            {"component": components[-1], "n_components": len(components)},
        ))

    return report


def parse_triple(raw, name: str | None = None) -> FractalTriple:
    """
    Builds a validated FractalTriple.

    Raises:
        TripleStructureError: On malformed tables.
        InvalidTripleError: If any condition fails; carries the report.
    """
    triple = _structure(raw)
    report = validate_triple(triple)
    if not report.passed:
        raise InvalidTripleError(report)
    if name is not None:
        triple = FractalTriple(triple.n_boundary, triple.n_total, triple.cell_maps, triple.labels, name)
    return triple
