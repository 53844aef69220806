import logging

import click
from humanfriendly import format_timespan
from humanfriendly.tables import format_pretty_table

from q2lab.lab import CHECKS, AcceptanceError, cmd_ode, cmd_oracle, cmd_report

from .options import build_config, output_options

__all__ = ["ode", "oracle", "report"]

logger = logging.getLogger("q2lab.cli")


@click.command()
@click.option("--t-max", type=float, default=2.0, show_default=True)
@click.option("--step", type=float, default=1e-3, show_default=True)
@click.option(
    "--trajectory",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Trajectory CSV of a run to overlay.",
)
@click.option("--run-id", type=int, default=0, show_default=True)
@click.option(
    "--d",
    "dims",
    default="8..18",
    show_default=True,
    help="Dimensions to report the stopping time of.",
)
@output_options
def ode(t_max, step, trajectory, run_id, dims, **kwargs):
    """
    Integrate the trajectory equations and compare with the closed form.
    \f

    Args:
        t_max (float): end of the integration window
        step (float): step size
        trajectory (str, optional): CSV written by `run`
        run_id (int): run of the CSV to overlay
    """
    config = build_config("ode", dims=dims, **kwargs)
    errors, table = cmd_ode(config, t_max, step, trajectory, run_id)

    print()
    rows = [
        [name, f"{sup:.3e}", f"{t:.4f}"]
        for name, sup, t in errors.itertuples(index=False, name=None)
    ]
    print(format_pretty_table(rows, ["component", "sup error", "at t"]))
    if table is not None:
        print()
        columns = ["t", "O_scaled", "q", "W_scaled", "w", "Y_scaled", "y", "y_zero_frac"]
        rows = [
            [f"{v:.4f}" for v in row]
            for row in table[columns].itertuples(index=False, name=None)
        ]
        print(format_pretty_table(rows, columns))
    print()


@click.command()
@click.option("--d", "dims", default="3", show_default=True, help="Dimensions, up to 3.")
@output_options
def oracle(dims, **kwargs):
    """
    Exhaustive saturated sets and exact distribution of the final size.
    """
    config = build_config("oracle", dims=dims, **kwargs)
    payloads = cmd_oracle(config)

    print()
    for d, payload in payloads.items():
        rows = [
            [m, p, payload["catalog"]["size_histogram"][m]]
            for m, p in payload["exact"]["masses"].items()
        ]
        print(f"d={d}, {payload['catalog']['n_members']} saturated sets")
        print(format_pretty_table(rows, ["M", "probability", "saturated sets"]))
    print()


@click.command()
@click.option("--check", is_flag=True, default=False, help="Exit 3 on any failure.")
@click.option("--full", is_flag=True, default=False, help="Use the full sample sizes.")
@click.option(
    "-n",
    "--only",
    "numbers",
    type=click.IntRange(1, len(CHECKS)),
    multiple=True,
    help="Run only these checks.",
)
@click.option("--seed", type=int, default=0, show_default=True)
@output_options
def report(check, full, numbers, seed, **kwargs):
    """
    Run the acceptance checks.
    """
    config = build_config("report", seed=seed, **kwargs)
    results = cmd_report(config, False, full, list(numbers) or None)

    verdicts = {True: "pass", False: "FAIL", None: "report"}
    rows = [
        [
            r.number,
            r.name,
            verdicts[r.passed],
            f"{r.value:.6g}",
            r.target,
            format_timespan(r.elapsed),
        ]
        for r in results
    ]
    print()
    print(
        format_pretty_table(
            rows, ["#", "check", "verdict", "value", "target", "elapsed"]
        )
    )
    print()

    failed = [r for r in results if r.passed is False]
    if check and failed:
        names = ", ".join(f"[{r.number}] {r.name}" for r in failed)
        raise AcceptanceError(f"failed checks: {names}", failed)
