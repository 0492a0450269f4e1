# eigenform/commands/validate.py
import typer

from eigenform.utils.command_helpers import (
    EIGENFORM_ERRORS, EXIT_DOMAIN, RunManifest, emit_report, exit_code_for,
)
from eigenform.utils.console import print_cancelled, print_error
from eigenform.utils.triples import builtin, validate_triple
from eigenform.utils.triples.io import BUILTIN_PREFIX, read_triple_json

app = typer.Typer(
    name="validate", help="Check a fractal triple against the triple conditions.", no_args_is_help=True,
    context_settings={"allow_interspersed_args": True},
)


@app.callback(invoke_without_command=True)
def validate(
    ctx: typer.Context,
    triple_path: str = typer.Argument(..., help="Triple JSON file, or builtin:<name>."),
):
    """
    Reports every violated condition with a 1-based witness. Exits 2 when a
    condition fails.
    """
    try:
        if triple_path.startswith(BUILTIN_PREFIX):
            raw = builtin(triple_path[len(BUILTIN_PREFIX):])
        else:
            raw = read_triple_json(triple_path)
        report = validate_triple(raw)

        manifest = RunManifest(command="validate", inputs={"triple": triple_path})
        emit_report(ctx, report.to_dict(), manifest)
        if not report.passed:
            for failure in report.failures:
                print_error(failure)
            raise typer.Exit(code=EXIT_DOMAIN)

    except EIGENFORM_ERRORS as e:
        print_error(e)
        raise typer.Exit(code=exit_code_for(e))
    except KeyboardInterrupt:
        print_cancelled()
        raise typer.Exit()
