import logging
import sys

import click

from q2lab.analytic import AnalyticError
from q2lab.lab import AcceptanceError, ConfigError, LabError
from q2lab.ode import OdeError
from q2lab.oracle import OracleError
from q2lab.process import ProcessError
from q2lab.trajectory import TrajectoryError
from q2lab.util.log import install_logger, verbosity_level

from .analysis import ode, oracle, report
from .simulate import goodedges, run, sweep

__all__ = ["lab", "main"]

logger = logging.getLogger("q2lab.cli")


@click.group()
@click.option("-v", "--verbose", count=True)
@click.pass_context
def lab(ctx, verbose):
    """Simulation lab of the Q_2-free process on the hypercube."""
    install_logger(verbosity_level(verbose))


lab.add_command(run)
lab.add_command(sweep)
lab.add_command(goodedges)
lab.add_command(ode)
lab.add_command(oracle)
lab.add_command(report)


def exit_code(err) -> int:
    """Exit status of an exception escaping a command."""
    if isinstance(err, (click.ClickException, click.Abort, ConfigError)):
        return 1
    if isinstance(err, AcceptanceError):
        return 3
    return 2


def main(args=None):
    """Console script entry point, maps failures to exit codes."""
    try:
        lab.main(args=args, prog_name="q2lab", standalone_mode=False)
    except click.ClickException as err:
        err.show()
        sys.exit(exit_code(err))
    except click.Abort:
        click.echo("Aborted!", err=True)
        sys.exit(1)
    except (
        LabError,
        AnalyticError,
        OdeError,
        OracleError,
        ProcessError,
        TrajectoryError,
    ) as err:
        logger.error(str(err))
        sys.exit(exit_code(err))
    except ValueError as err:
        # invalid argument that only surfaced inside the library
        logger.error(str(err))
        sys.exit(1)
    sys.exit(0)


if __name__ == "__main__":
    main()
