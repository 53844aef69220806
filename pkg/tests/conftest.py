import pytest
from click.testing import CliRunner

from q2lab.oracle import exact_M_distribution
from q2lab.process import run_uniform


@pytest.fixture(scope="session")
def exact_d3():
    return exact_M_distribution(3)


@pytest.fixture(scope="session")
def uniform_d8():
    """A full uniform run at d=8 with its additions recorded."""
    return run_uniform(8, seed=11, record_steps=True)


@pytest.fixture
def runner():
    return CliRunner()
