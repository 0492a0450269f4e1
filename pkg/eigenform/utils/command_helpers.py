# eigenform/utils/command_helpers.py
import json
import time
from dataclasses import dataclass, field

import typer

from eigenform import __version__
from .config import ConfigError, EigenformConfig
from .forms import (
    DenominatorDegenerateError, DirichletForm, FormDimensionError, FormError, NotIrreducibleError, ZeroFormError,
    load_form,
)
from .geometry import GeometryError, ProbeError
from .renorm import KernelMismatchError, RenormError, Weights, WeightsError
from .solver import SolverError
from .triples import FractalTriple, TripleError

# exit codes
EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DOMAIN = 2
EXIT_NOT_CONVERGED = 3

EIGENFORM_ERRORS = (OSError, ConfigError, TripleError, FormError, RenormError, GeometryError, SolverError)

_DOMAIN_ERRORS = (
    SolverError, NotIrreducibleError, ZeroFormError, DenominatorDegenerateError, GeometryError, RenormError,
)
_INPUT_ERRORS = (OSError, ConfigError, TripleError, FormDimensionError, WeightsError, KernelMismatchError, ProbeError)


def exit_code_for(error: Exception) -> int:
    """Input, parse and I/O problems exit 1; failed domain preconditions exit 2."""
    if isinstance(error, _INPUT_ERRORS):
        return EXIT_INPUT
    if isinstance(error, _DOMAIN_ERRORS):
        return EXIT_DOMAIN
    return EXIT_INPUT


def parse_weights(text: str | None, triple: FractalTriple) -> Weights:
    """Parses --weights; all ones when omitted. The count must match the cells."""
    weights = Weights.ones(triple.n_cells) if text is None else Weights.parse(text)
    if len(weights) != triple.n_cells:
        raise WeightsError(f"'{triple.name or 'triple'}' has {triple.n_cells} cells; got {len(weights)} weights.")
    return weights


def open_form(path: str, triple: FractalTriple) -> DirichletForm:
    form = load_form(path)
    if form.n_boundary != triple.n_boundary:
        raise FormDimensionError(
            f"The form in '{path}' lives on {form.n_boundary} vertices; the triple has N = {triple.n_boundary}."
        )
    return form


def build_config(overrides: list[str] | None, start: str | None = None,
                 triple: FractalTriple | None = None) -> EigenformConfig:
    config = EigenformConfig.from_overrides(overrides)
    if start is not None:
        config = config.with_start(open_form(start, triple))
    return config


@dataclass
class RunManifest:
    """Everything needed to rerun a command; embedded in every report."""
    command: str
    inputs: dict = field(default_factory=dict)
    weights: list[float] | None = None
    overrides: list[str] = field(default_factory=list)
    seed: int | None = None
    version: str = __version__
    duration: float | None = None
    _started: float = field(default_factory=time.perf_counter, repr=False)

    def finish(self, timing: bool):
        if timing:
            self.duration = time.perf_counter() - self._started

    def to_dict(self) -> dict:
        manifest = {
            "command": self.command,
            "inputs": self.inputs,
            "weights": self.weights,
            "overrides": self.overrides,
            "seed": self.seed,
            "version": self.version,
        }
        if self.duration is not None:
            manifest["duration"] = self.duration
        return manifest


def timing_enabled(ctx: typer.Context) -> bool:
    return bool((ctx.obj or {}).get("timing", False))


def to_json(payload: dict) -> str:
    """Reals as shortest round-trip decimals, keys in insertion order."""
    return json.dumps(payload, allow_nan=False, ensure_ascii=False)


def emit_report(ctx: typer.Context, payload: dict, manifest: RunManifest, out: str | None = None):
    """Writes the report with its manifest to `out` or stdout."""
    manifest.finish(timing_enabled(ctx))
    text = to_json({**payload, "manifest": manifest.to_dict()})
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text + "\n")
    else:
        typer.echo(text)
