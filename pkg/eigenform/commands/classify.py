# eigenform/commands/classify.py
from typing import Optional

import typer

from eigenform.utils.command_helpers import (
    EIGENFORM_ERRORS, RunManifest, emit_report, exit_code_for, open_form, parse_weights,
)
from eigenform.utils.console import print_cancelled, print_error
from eigenform.utils.renorm import RenormalizationOperator
from eigenform.utils.triples import load_triple

app = typer.Typer(
    name="classify", help="Place a normalized form in one of the strata D1..D4.", no_args_is_help=True,
    context_settings={"allow_interspersed_args": True},
)


@app.callback(invoke_without_command=True)
def classify(
    ctx: typer.Context,
    triple_path: str = typer.Argument(..., help="Triple JSON file, or builtin:<name>."),
    form_path: str = typer.Option(..., "--form", "-f", help="Form file to classify."),
    weights: Optional[str] = typer.Option(None, "--weights", "-w", help="Comma separated r_1,...,r_k (default all 1)."),
    cross_check: Optional[str] = typer.Option(None, "--cross-check", help="Second weight vector for the D3/D4 test."),
):
    """Reports the stratum, the positivity-graph components and |Lambda_r(E)|."""
    try:
        triple = load_triple(triple_path)
        r = parse_weights(weights, triple)
        other = parse_weights(cross_check, triple) if cross_check else None
        _, form = open_form(form_path, triple).normalize()

        boundary = RenormalizationOperator(triple, r).classify(form, other)

        manifest = RunManifest(command="classify", inputs={"triple": triple_path, "form": form_path}, weights=r.to_list())
        emit_report(ctx, boundary.to_dict(), manifest)

    except EIGENFORM_ERRORS as e:
        print_error(e)
        raise typer.Exit(code=exit_code_for(e))
    except KeyboardInterrupt:
        print_cancelled()
        raise typer.Exit()
