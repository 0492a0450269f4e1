# eigenform/commands/probe.py
from typing import List, Optional

import typer

from eigenform.utils.command_helpers import (
    EIGENFORM_ERRORS, RunManifest, build_config, emit_report, exit_code_for, open_form, parse_weights,
)
from eigenform.utils.console import print_cancelled, print_error
from eigenform.utils.geometry import anti_attracting_probe, projection_bound_check
from eigenform.utils.triples import load_triple

app = typer.Typer(
    name="probe", help="Sample the normalized map near a boundary form.", no_args_is_help=True,
    context_settings={"allow_interspersed_args": True},
)


@app.callback(invoke_without_command=True)
def probe(
    ctx: typer.Context,
    triple_path: str = typer.Argument(..., help="Triple JSON file, or builtin:<name>."),
    form_path: str = typer.Option(..., "--form", "-f", help="Boundary form (|E| = 1, some coefficient zero)."),
    ref_path: Optional[str] = typer.Option(None, "--ref", help="Interior reference form (default: barycenter)."),
    weights: Optional[str] = typer.Option(None, "--weights", "-w", help="Comma separated r_1,...,r_k (default all 1)."),
    radius: float = typer.Option(1e-2, "--radius", help="Sup-norm radius of the neighbourhood."),
    samples: int = typer.Option(200, "--samples", help="Number of sampled forms."),
    seed: int = typer.Option(0, "--seed", help="Seed of the sampler."),
    projection_bound: bool = typer.Option(
        False, "--projection-bound", help="Also test p(E) <= 2 E coordinatewise on the same neighbourhood.",
    ),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help="Setting override key=value (repeatable)."),
):
    """
    Counts sampled forms whose image lies in their Ext set. Zero hits is
    evidence of the anti-attracting property, not a proof.
    """
    try:
        triple = load_triple(triple_path)
        r = parse_weights(weights, triple)
        config = build_config(overrides)
        form = open_form(form_path, triple)
        reference = open_form(ref_path, triple) if ref_path else None

        report = anti_attracting_probe(triple, r, form, reference, radius, samples, seed, config.tolerances)
        payload = report.to_dict()
        if projection_bound:
            payload["projection_bound"] = projection_bound_check(
                form, reference, radius, samples, seed, config.tolerances,
            ).to_dict()

        inputs = {"triple": triple_path, "form": form_path}
        if ref_path:
            inputs["ref"] = ref_path
        manifest = RunManifest(
            command="probe", inputs=inputs, weights=r.to_list(), overrides=config.overrides, seed=seed,
        )
        emit_report(ctx, payload, manifest)

    except EIGENFORM_ERRORS as e:
        print_error(e)
        raise typer.Exit(code=exit_code_for(e))
    except KeyboardInterrupt:
        print_cancelled()
        raise typer.Exit()
