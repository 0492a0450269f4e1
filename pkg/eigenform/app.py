from typing import Optional

import typer

from eigenform.commands import (
    validate, builtin,
    solve, verify, existence, sweep,
    classify, repulsing, probe,
)
from eigenform.utils.config import ConfigError
from eigenform.utils.console import configure_logging, print_error

# Create the main Typer application
app = typer.Typer(
    name="eigenform",
    help="Eigenforms of the renormalization operator on finitely ramified fractals.",
    add_completion=False,
    no_args_is_help=True,
)


@app.callback()
def main(
    ctx: typer.Context,
    log_level: Optional[str] = typer.Option(None, "--log-level", help="quiet, info or debug (default: $EIGENFORM_LOG)."),
    timing: bool = typer.Option(False, "--timing", help="Record the wall-clock duration in the run manifest."),
):
    try:
        configure_logging(log_level)
    except ConfigError as e:
        print_error(e)
        raise typer.Exit(code=1)
    ctx.obj = {"timing": timing}


# Add subcommands from the commands module
app.add_typer(validate.app, name="validate")
app.add_typer(builtin.app, name="builtin")
app.add_typer(solve.app, name="solve")
app.add_typer(verify.app, name="verify")
app.add_typer(existence.app, name="existence")
app.add_typer(sweep.app, name="sweep")
app.add_typer(classify.app, name="classify")
app.add_typer(repulsing.app, name="repulsing")
app.add_typer(probe.app, name="probe")

if __name__ == "__main__":
    app()
