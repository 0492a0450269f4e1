# eigenform/commands/solve.py
from typing import List, Optional

import typer

from eigenform.utils.command_helpers import (
    EIGENFORM_ERRORS, EXIT_NOT_CONVERGED, RunManifest, build_config, emit_report, exit_code_for, parse_weights,
)
from eigenform.utils.console import print_cancelled, print_error
from eigenform.utils.solver import solve_eigenform
from eigenform.utils.triples import load_triple

app = typer.Typer(
    name="solve", help="Search for an eigenform by normalized fixed-point iteration.", no_args_is_help=True,
    context_settings={"allow_interspersed_args": True},
)


@app.callback(invoke_without_command=True)
def solve(
    ctx: typer.Context,
    triple_path: str = typer.Argument(..., help="Triple JSON file, or builtin:<name>."),
    weights: Optional[str] = typer.Option(None, "--weights", "-w", help="Comma separated r_1,...,r_k (default all 1)."),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help="Setting override key=value (repeatable)."),
    start: Optional[str] = typer.Option(None, "--start", help="Form file to start the iteration from."),
    out: Optional[str] = typer.Option(None, "--out", "-o", help="Write the report here instead of stdout."),
):
    """
    Iterates the normalized renormalization map from the barycenter (or
    --start) and reports the final form, rho and the residual. Exits 3
    unless the iteration converged to an irreducible eigenform.
    """
    try:
        triple = load_triple(triple_path)
        r = parse_weights(weights, triple)
        config = build_config(overrides, start, triple)

        result = solve_eigenform(triple, r, config.solver, config.tolerances)

        inputs = {"triple": triple_path}
        if start:
            inputs["start"] = start
        manifest = RunManifest(command="solve", inputs=inputs, weights=r.to_list(), overrides=config.overrides)
        emit_report(ctx, result.to_dict(), manifest, out)
        if not result.converged:
            raise typer.Exit(code=EXIT_NOT_CONVERGED)

    except EIGENFORM_ERRORS as e:
        print_error(e)
        raise typer.Exit(code=exit_code_for(e))
    except KeyboardInterrupt:
        print_cancelled()
        raise typer.Exit()
