import logging

import click

from q2lab.lab import ExperimentConfig, parse_dims

__all__ = ["output_options", "simulation_options", "build_config"]

logger = logging.getLogger("q2lab.cli")


def _stack(options):
    def decorator(func):
        for option in reversed(options):
            func = option(func)
        return func

    return decorator


output_options = _stack(
    [
        click.option(
            "-o",
            "--output",
            type=click.Path(file_okay=False),
            default=None,
            help="Directory receiving the result files.",
        ),
        click.option(
            "--format",
            "fmt",
            type=click.Choice(["csv", "json"]),
            default="csv",
            show_default=True,
            help="Format of the tables.",
        ),
        click.option(
            "--timestamps",
            is_flag=True,
            default=False,
            help="Record wall-clock times, outputs are no longer byte-identical.",
        ),
    ]
)

simulation_options = _stack(
    [
        click.option(
            "--d",
            "dims",
            required=True,
            help='Dimension, or a list such as "8..16" or "8,10,12".',
        ),
        click.option("--runs", type=int, default=10, show_default=True),
        click.option("--seed", type=int, default=0, show_default=True),
        click.option(
            "--cadence",
            type=int,
            default=None,
            help="Snapshot every this many additions [default: about 200 per run]",
        ),
        click.option(
            "--sample-pairs",
            type=int,
            default=4096,
            show_default=True,
            help="Adjacent pairs observed by the snapshots.",
        ),
        click.option(
            "--c",
            "c",
            type=float,
            default=0.3,
            show_default=True,
            help="Degree threshold coefficient, c d^(2/3).",
        ),
        click.option(
            "--k",
            "k_list",
            default="1,2,3",
            show_default=True,
            help="Subcube dimensions to count empty copies of.",
        ),
        click.option("--workers", type=int, default=1, show_default=True),
        click.option("--scheduler", default=None, help="Address of a dask scheduler."),
        click.option(
            "--allow-large",
            is_flag=True,
            default=False,
            help="Lift the dimension guard up to d = 30.",
        ),
        output_options,
    ]
)


def build_config(command, dims="1", k_list="1,2,3", **kwargs) -> ExperimentConfig:
    """Parse the list-valued options and validate the rest."""
    return ExperimentConfig(
        command, parse_dims(dims), k_list=parse_dims(k_list), **kwargs
    )
