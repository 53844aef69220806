import pytest

from q2lab.lab import ConfigError, ExperimentConfig, parse_dims


@pytest.mark.parametrize(
    "text, expected",
    [
        ("8..12", (8, 9, 10, 11, 12)),
        ("8-10", (8, 9, 10)),
        ("8,10,12", (8, 10, 12)),
        (" 5 ", (5,)),
        (7, (7,)),
    ],
)
def test_parse_dims(text, expected):
    assert parse_dims(text) == expected


@pytest.mark.parametrize("text", ["12..8", "a,b", "8..x"])
def test_parse_dims_invalid(text):
    with pytest.raises(ConfigError):
        parse_dims(text)


def test_defaults():
    config = ExperimentConfig("run", 10)
    assert config.dims == (10,) and config.d == 10
    assert config.runs == 10 and config.seed == 0
    assert config.fmt == "csv" and config.mode == "uniform"
    assert config.k_list == (1, 2, 3)
    assert config.cadence is None and config.output is None


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(command="walk", dims=4),
        dict(command="run", dims=()),
        dict(command="run", dims=0),
        dict(command="run", dims=23),
        dict(command="run", dims=4, runs=0),
        dict(command="run", dims=4, seed=-1),
        dict(command="run", dims=4, workers=0),
        dict(command="run", dims=4, cadence=0),
        dict(command="run", dims=4, sample_pairs=0),
        dict(command="run", dims=4, c=0.0),
        dict(command="run", dims=4, k_list=(0, 1)),
        dict(command="run", dims=4, fmt="xml"),
        dict(command="run", dims=4, mode="greedy"),
    ],
)
def test_invalid_fields(kwargs):
    with pytest.raises(ConfigError):
        ExperimentConfig(**kwargs)


def test_large_dimensions():
    assert ExperimentConfig("run", 24, allow_large=True).d == 24
    with pytest.raises(ConfigError):
        ExperimentConfig("run", 31, allow_large=True)


def test_config_error_is_value_error():
    with pytest.raises(ValueError):
        ExperimentConfig("sweep", (8, 9)).d


def test_echo_and_replace():
    config = ExperimentConfig("run", 6, output="out", workers=3, scheduler="tcp://x")
    echo = config.to_dict()
    assert "output" not in echo and "workers" not in echo and "scheduler" not in echo
    assert echo["dims"] == [6]
    assert list(echo)[:2] == ["command", "dims"]

    other = config.replace(runs=4)
    assert other.runs == 4
    assert other.workers == 3 and other.output == "out"
    assert other.to_dict() == dict(echo, runs=4)
