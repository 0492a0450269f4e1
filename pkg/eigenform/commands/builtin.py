# eigenform/commands/builtin.py
import typer

from eigenform.utils.command_helpers import EIGENFORM_ERRORS, exit_code_for
from eigenform.utils.console import console, print_error
from eigenform.utils.triples import BUILTIN_NAMES, builtin, triple_to_json

app = typer.Typer(
    name="builtin", help="Print a builtin triple in canonical JSON.",
    context_settings={"allow_interspersed_args": True},
)


@app.callback(invoke_without_command=True)
def show_builtin(
    name: str = typer.Argument(None, help=f"One of: {', '.join(BUILTIN_NAMES)}. Lists the names when omitted."),
):
    """Prints the canonical JSON of a builtin triple, usable as a triple file."""
    if name is None:
        console.print("Builtin triples: " + ", ".join(f"[bold cyan]{n}[/bold cyan]" for n in BUILTIN_NAMES))
        return
    try:
        typer.echo(triple_to_json(builtin(name)), nl=False)
    except EIGENFORM_ERRORS as e:
        print_error(e)
        raise typer.Exit(code=exit_code_for(e))
