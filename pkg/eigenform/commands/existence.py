# eigenform/commands/existence.py
from typing import List, Optional

import typer

from eigenform.utils.command_helpers import (
    EIGENFORM_ERRORS, EXIT_NOT_CONVERGED, RunManifest, build_config, emit_report, exit_code_for, open_form,
    parse_weights,
)
from eigenform.utils.console import print_cancelled, print_error
from eigenform.utils.solver import ExistenceVerdict, existence_report
from eigenform.utils.triples import load_triple

app = typer.Typer(
    name="existence", help="Solve, then diagnose any degenerate limit.", no_args_is_help=True,
    context_settings={"allow_interspersed_args": True},
)


@app.callback(invoke_without_command=True)
def existence(
    ctx: typer.Context,
    triple_path: str = typer.Argument(..., help="Triple JSON file, or builtin:<name>."),
    weights: Optional[str] = typer.Option(None, "--weights", "-w", help="Comma separated r_1,...,r_k (default all 1)."),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help="Setting override key=value (repeatable)."),
    start: Optional[str] = typer.Option(None, "--start", help="Form file to start the iteration from."),
    ref_path: Optional[str] = typer.Option(None, "--ref", help="Reference form for the repulsing check."),
):
    """
    Reports whether the trajectory found an eigenform and, if it ran into
    the boundary, whether the degenerate eigenform there is repulsing.
    Exits 3 unless an eigenform was found.
    """
    try:
        triple = load_triple(triple_path)
        r = parse_weights(weights, triple)
        config = build_config(overrides, start, triple)
        reference = open_form(ref_path, triple) if ref_path else None

        report = existence_report(triple, r, config.solver, reference, config.tolerances)

        inputs = {"triple": triple_path}
        for key, value in (("start", start), ("ref", ref_path)):
            if value:
                inputs[key] = value
        manifest = RunManifest(command="existence", inputs=inputs, weights=r.to_list(), overrides=config.overrides)
        emit_report(ctx, report.to_dict(), manifest)
        if report.verdict is not ExistenceVerdict.EIGENFORM_FOUND:
            raise typer.Exit(code=EXIT_NOT_CONVERGED)

    except EIGENFORM_ERRORS as e:
        print_error(e)
        raise typer.Exit(code=exit_code_for(e))
    except KeyboardInterrupt:
        print_cancelled()
        raise typer.Exit()
