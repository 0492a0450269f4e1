# eigenform/commands/repulsing.py
from typing import List, Optional

import typer

from eigenform.utils.command_helpers import (
    EIGENFORM_ERRORS, RunManifest, build_config, emit_report, exit_code_for, open_form, parse_weights,
)
from eigenform.utils.console import print_cancelled, print_error
from eigenform.utils.solver import kernel_domination_check, repulsing_check
from eigenform.utils.triples import load_triple

app = typer.Typer(
    name="repulsing", help="Test whether a degenerate eigenform is repulsing.", no_args_is_help=True,
    context_settings={"allow_interspersed_args": True},
)


@app.callback(invoke_without_command=True)
def repulsing(
    ctx: typer.Context,
    triple_path: str = typer.Argument(..., help="Triple JSON file, or builtin:<name>."),
    form_path: str = typer.Option(..., "--form", "-f", help="The degenerate eigenform (a reducible form in D3)."),
    ref_path: Optional[str] = typer.Option(None, "--ref", help="Interior reference form in D1 (default: barycenter)."),
    weights: Optional[str] = typer.Option(None, "--weights", "-w", help="Comma separated r_1,...,r_k (default all 1)."),
    domination_samples: int = typer.Option(
        0, "--domination-samples", help="Also sample the kernel domination inequality at this many nearby forms.",
    ),
    seed: int = typer.Option(0, "--seed", help="Seed of the sampler."),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help="Setting override key=value (repeatable)."),
):
    """
    Compares mu, the constrained energy ratio on the kernel, with rho.
    Exits 2 if the form is not a degenerate eigenform in D3.

    With --domination-samples, interior forms near the degenerate one are
    drawn and Lambda_r(E) >= alpha eta_E Lambda_{r,E-bar}(E_ref) is tested
    on its kernel.
    """
    try:
        triple = load_triple(triple_path)
        r = parse_weights(weights, triple)
        config = build_config(overrides)
        form = open_form(form_path, triple)
        reference = open_form(ref_path, triple) if ref_path else None

        report = repulsing_check(
            triple, r, form, reference,
            residual_tol=config.solver.residual_tol, tolerances=config.tolerances,
        )
        payload = report.to_dict()
        if domination_samples:
            payload["kernel_domination"] = kernel_domination_check(
                triple, r, form, reference, samples=domination_samples, seed=seed,
                residual_tol=config.solver.residual_tol, tolerances=config.tolerances,
            ).to_dict()

        inputs = {"triple": triple_path, "form": form_path}
        if ref_path:
            inputs["ref"] = ref_path
        manifest = RunManifest(
            command="repulsing", inputs=inputs, weights=r.to_list(), overrides=config.overrides,
            seed=seed if domination_samples else None,
        )
        emit_report(ctx, payload, manifest)

    except EIGENFORM_ERRORS as e:
        print_error(e)
        raise typer.Exit(code=exit_code_for(e))
    except KeyboardInterrupt:
        print_cancelled()
        raise typer.Exit()
