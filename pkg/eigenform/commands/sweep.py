# eigenform/commands/sweep.py
import itertools
from typing import List, Optional

import numpy as np
import typer
from joblib import Parallel, delayed

from eigenform.utils.command_helpers import (
    EIGENFORM_ERRORS, EXIT_NOT_CONVERGED, RunManifest, build_config, exit_code_for, timing_enabled, to_json,
)
from eigenform.utils.config import ConfigError, SolverConfig, Tolerances
from eigenform.utils.console import print_cancelled, print_error
from eigenform.utils.renorm import Weights
from eigenform.utils.solver import solve_eigenform
from eigenform.utils.triples import FractalTriple, load_triple

app = typer.Typer(
    name="sweep", help="Solve over a logarithmic grid of weights (JSON lines).", no_args_is_help=True,
    context_settings={"allow_interspersed_args": True},
)


def parse_axis(spec: str) -> list[float]:
    """'lo:hi:steps' -> `steps` log-spaced values from lo to hi."""
    parts = spec.strip().split(":")
    if len(parts) != 3:
        raise ConfigError(f"Grid axis '{spec}' is not of the form lo:hi:steps.")
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"Grid axis '{spec}' is not of the form lo:hi:steps.")
    if lo <= 0 or hi <= 0 or steps < 0:
        raise ConfigError(f"Grid axis '{spec}' needs positive bounds and steps >= 0.")
    return [float(v) for v in np.geomspace(lo, hi, steps)]


def parse_grid(spec: str, n_cells: int) -> list[tuple[float, ...]]:
    """
    Comma separated axes, one per cell; a single axis applies to every cell.
    Points come in lexicographic order of the axes.
    """
    axes = [parse_axis(item) for item in spec.split(",")]
    if len(axes) == 1:
        axes = axes * n_cells
    if len(axes) != n_cells:
        raise ConfigError(f"The grid has {len(axes)} axes; the triple has {n_cells} cells.")
    return list(itertools.product(*axes))


def _solve_point(index: int, triple: FractalTriple, values: tuple[float, ...], solver: SolverConfig,
                 tolerances: Tolerances) -> dict:
    result = solve_eigenform(triple, Weights(values), solver, tolerances)
    return {"grid_index": index, "weights": list(values), **result.to_dict()}


@app.callback(invoke_without_command=True)
def sweep(
    ctx: typer.Context,
    triple_path: str = typer.Argument(..., help="Triple JSON file, or builtin:<name>."),
    grid: str = typer.Option(..., "--weights-grid", "-g", help="Per-cell lo:hi:steps, comma separated."),
    jobs: int = typer.Option(1, "--jobs", "-j", help="Worker processes (joblib)."),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help="Setting override key=value (repeatable)."),
):
    """
    Emits one EigenformResult line per grid point, tagged with its 0-based
    grid_index and in grid order whatever --jobs is, then a summary line.
    Exits 3 if any point did not converge.
    """
    try:
        triple = load_triple(triple_path)
        config = build_config(overrides)
        points = parse_grid(grid, triple.n_cells)
        if jobs < 1:
            raise ConfigError("--jobs must be at least 1.")

        manifest = RunManifest(
            command="sweep", inputs={"triple": triple_path, "weights_grid": grid}, overrides=config.overrides,
        )
        lines = Parallel(n_jobs=jobs)(
            delayed(_solve_point)(index, triple, values, config.solver, config.tolerances)
            for index, values in enumerate(points)
        )

        counts: dict[str, int] = {}
        for line in lines:
            typer.echo(to_json(line))
            counts[line["status"]] = counts.get(line["status"], 0) + 1

        manifest.finish(timing_enabled(ctx))
        converged = counts.get("converged", 0)
        summary = {"points": len(lines), "converged": converged, "statuses": counts}
        typer.echo(to_json({"summary": summary, "manifest": manifest.to_dict()}))
        if converged != len(lines):
            raise typer.Exit(code=EXIT_NOT_CONVERGED)

    except EIGENFORM_ERRORS as e:
        print_error(e)
        raise typer.Exit(code=exit_code_for(e))
    except KeyboardInterrupt:
        print_cancelled()
        raise typer.Exit()
