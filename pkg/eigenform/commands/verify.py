# eigenform/commands/verify.py
from typing import List, Optional

import typer

from eigenform.utils.command_helpers import (
    EIGENFORM_ERRORS, EXIT_DOMAIN, RunManifest, build_config, emit_report, exit_code_for, open_form, parse_weights,
)
from eigenform.utils.console import print_cancelled, print_error
from eigenform.utils.solver import EigenformVerdict, verify_eigenform
from eigenform.utils.triples import load_triple

app = typer.Typer(
    name="verify", help="Check the eigenform equation Lambda_r(E) = rho E.", no_args_is_help=True,
    context_settings={"allow_interspersed_args": True},
)


@app.callback(invoke_without_command=True)
def verify(
    ctx: typer.Context,
    triple_path: str = typer.Argument(..., help="Triple JSON file, or builtin:<name>."),
    form_path: str = typer.Option(..., "--form", "-f", help="Form file to check."),
    rho: Optional[float] = typer.Option(None, "--rho", help="Eigenvalue to test (default |Lambda_r(E)| / |E|)."),
    weights: Optional[str] = typer.Option(None, "--weights", "-w", help="Comma separated r_1,...,r_k (default all 1)."),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help="Setting override key=value (repeatable)."),
):
    """Reports the residual and the verdict. Exits 2 for a non-eigenform."""
    try:
        triple = load_triple(triple_path)
        r = parse_weights(weights, triple)
        config = build_config(overrides)
        form = open_form(form_path, triple)

        check = verify_eigenform(
            triple, r, form, rho, residual_tol=config.solver.residual_tol, tolerances=config.tolerances,
        )

        manifest = RunManifest(
            command="verify", inputs={"triple": triple_path, "form": form_path}, weights=r.to_list(),
            overrides=config.overrides,
        )
        emit_report(ctx, check.to_dict(), manifest)
        if check.verdict is EigenformVerdict.NON_EIGENFORM:
            raise typer.Exit(code=EXIT_DOMAIN)

    except EIGENFORM_ERRORS as e:
        print_error(e)
        raise typer.Exit(code=exit_code_for(e))
    except KeyboardInterrupt:
        print_cancelled()
        raise typer.Exit()
