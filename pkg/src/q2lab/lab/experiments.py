"""
Batches of seeded runs and the files they produce.

Run k of a batch draws its randomness from the master seed and k only, so the
outcome never depends on the worker that executed it.
"""
import logging
import math
import os

import numpy as np
import pandas as pd

from q2lab.analytic import early_good_fraction, expected_good, good_degrees, good_edges
from q2lab.ode import conjecture_scale, integration_error, overlay, stopping_time
from q2lab.oracle import (
    OracleError,
    enumerate_saturated,
    exact_M_distribution,
    permutation_M_distribution,
)
from q2lab.process import make_clocks, run_permutation, run_stream, run_uniform
from q2lab.trajectory import (
    CSV_COLUMNS,
    TrajectoryRecorder,
    additions_curve,
    degree_summary,
    early_additions,
    empty_subcube_count,
    good_degree_check,
    records_from_frame,
    records_to_frame,
)
from q2lab.util.dask import batch_submit, get_client

from .error import ConfigError, WorkerError
from .manifest import RunManifest, aggregate, dump_json, write_table

__all__ = [
    "simulate_run",
    "good_edge_run",
    "run_tasks",
    "cmd_run",
    "cmd_sweep",
    "cmd_goodedges",
    "cmd_ode",
    "cmd_oracle",
]

logger = logging.getLogger("q2lab.lab")


def natural_scale(d) -> float:
    """d^(2/3) 2^d"""
    return d ** (2 / 3) * 2 ** d


def _execute(d, seed, run_index, mode, hooks=(), cadence=None):
    if mode == "uniform":
        return run_uniform(d, seed, run_index, hooks=hooks, cadence=cadence)
    clocks = make_clocks(run_stream(seed, run_index), d)
    return run_permutation(d, clocks, hooks=hooks, cadence=cadence)


def simulate_run(
    d,
    seed,
    run_index,
    mode="uniform",
    cadence=None,
    sample_pairs=4096,
    c=0.3,
    k_list=(1, 2, 3),
    record=True,
):
    """
    Execute a single run and summarize it.

    Returns:
        (tuple): flat dict of the outcome, and the trajectory frame (None when
            `record` is False)
    """
    hooks = []
    if record:
        recorder = TrajectoryRecorder(
            d, mode, sample_pairs, run_stream(seed, run_index, stream=1)
        )
        hooks.append(recorder)
    result = _execute(d, seed, run_index, mode, hooks, cadence)

    degrees = degree_summary(result, c)
    summary = {
        "M": result.M,
        "scaled_M": result.M / natural_scale(d),
        "digest": result.digest,
        "min_deg": degrees.min,
        "max_deg": degrees.max,
        "mean_deg": degrees.mean,
        "high_deg_frac": degrees.fraction_above,
    }
    for k in k_list:
        if k <= d:
            summary[f"empty_q{k}"] = empty_subcube_count(result, k)
    if mode == "permutation":
        summary["duplicate_clocks"] = result.duplicate_clocks
        summary["early_additions"] = early_additions(result)

    frame = records_to_frame(recorder.records, run_index, d, mode) if record else None
    return summary, frame


def good_edge_run(d, seed, run_index):
    """Permutation run, checked against its good edges."""
    clocks = make_clocks(run_stream(seed, run_index), d)
    result = run_permutation(d, clocks)
    good = good_edges(clocks, d)
    contained = bool(result.edge_mask[good].all())
    if not contained:
        logger.error(f"run {run_index}, a good edge is missing from the final graph")
    return {
        "M": result.M,
        "n_good": int(good.size),
        "contained": contained,
        "early_good_frac": early_good_fraction(clocks, d),
        "good_degree_ok": good_degree_check(result, good_degrees(good, d)),
        "i_at_half": int(additions_curve(result, [result.clocks.size // 2])[0]),
    }


def run_tasks(config, func, d, **kwargs):
    """
    Execute `config.runs` runs of `func(d, seed, run_index, **kwargs)`.

    A single worker without a scheduler address runs everything in-process.

    Returns:
        (tuple of dict): results and errors, keyed by run index
    """
    keys = list(range(config.runs))
    if config.workers == 1 and config.scheduler is None:
        results, errors = {}, {}
        for k in keys:
            try:
                results[k] = func(d, config.seed, k, **kwargs)
            except Exception as err:
                logger.error(f"run {k} failed: {err}")
                errors[k] = err
        return results, errors

    n = len(keys)
    with get_client(address=config.scheduler, n_workers=config.workers) as client:
        return batch_submit(
            client, func, keys, [d] * n, [config.seed] * n, keys, **kwargs
        )


def _output_path(config, name):
    if config.output is None:
        return None
    os.makedirs(config.output, exist_ok=True)
    return os.path.join(config.output, name)


def _collect(manifest, d, results, errors, summarize=lambda r: r):
    for k in sorted(results):
        manifest.add_result(d, k, summarize(results[k]))
    for k in sorted(errors):
        manifest.add_failure(d, k, errors[k])


def _finish(manifest, config):
    manifest.finish()
    path = _output_path(config, "manifest.json")
    if path:
        manifest.write(path)
    if manifest.failed:
        raise WorkerError(
            f"{len(manifest.failed)} run(s) failed, outputs hold the remaining ones",
            {(f["d"], f["run"]): f["error"] for f in manifest.failed},
        )


##


def cmd_run(config):
    """
    Independent runs at a single dimension.

    Writes `trajectory.csv` (or `.json`) and `manifest.json` under the output
    directory.

    Returns:
        (tuple): the manifest, and the trajectory frame of every run
    """
    d = config.d
    logger.info(f"{config.runs} {config.mode} run(s) at d={d}, seed={config.seed}")
    results, errors = run_tasks(
        config,
        simulate_run,
        d,
        mode=config.mode,
        cadence=config.cadence,
        sample_pairs=config.sample_pairs,
        c=config.c,
        k_list=config.k_list,
    )

    manifest = RunManifest(config, config.timestamps)
    _collect(manifest, d, results, errors, summarize=lambda r: r[0])
    values = [results[k][0]["M"] for k in sorted(results)]
    manifest.set_aggregate("M", aggregate(values))
    manifest.set_aggregate("scaled_M", aggregate(np.asarray(values) / natural_scale(d)))
    manifest.set_aggregate("M_counts", _counts(values))

    frames = [results[k][1] for k in sorted(results)]
    if frames:
        trajectory = pd.concat(frames, ignore_index=True)
    else:
        trajectory = pd.DataFrame(columns=list(CSV_COLUMNS))

    path = _output_path(config, "trajectory")
    if path:
        write_table(trajectory, path, config.fmt)
    _finish(manifest, config)
    return manifest, trajectory


def _counts(values):
    labels, counts = np.unique(np.asarray(values, dtype=np.int64), return_counts=True)
    return {int(m): int(n) for m, n in zip(labels, counts)}


def fit_slope(dims, mean_M):
    """Least-squares slope of log(mean M / 2^d) against log d."""
    if len(dims) < 2:
        return math.nan
    x = np.log(np.asarray(dims, dtype=np.float64))
    y = np.log(np.asarray(mean_M, dtype=np.float64)) - np.asarray(dims) * math.log(2)
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def cmd_sweep(config):
    """
    Mean final size over a range of dimensions, against the natural and the
    conjectured scales.

    Returns:
        (tuple): the manifest, the scaling table and the fitted slope
    """
    manifest = RunManifest(config, config.timestamps)
    rows = []
    for d in config.dims:
        logger.info(f"sweep, d={d}")
        results, errors = run_tasks(
            config,
            simulate_run,
            d,
            mode=config.mode,
            c=config.c,
            k_list=(),
            record=False,
        )
        _collect(manifest, d, results, errors, summarize=lambda r: r[0])
        values = np.asarray([results[k][0]["M"] for k in sorted(results)], float)
        if not values.size:
            continue
        stats = aggregate(values)
        conjecture = stats["mean"] / conjecture_scale(d) if d >= 2 else math.nan
        rows.append(
            {
                "d": d,
                "runs": stats["n"],
                "mean_M": stats["mean"],
                "stderr_M": stats["stderr"],
                "scaled_mean": stats["mean"] / natural_scale(d),
                "scaled_min": stats["min"] / natural_scale(d),
                "conjecture_ratio": conjecture,
                "expected_good_ratio": expected_good(d) / stats["mean"],
            }
        )
    table = pd.DataFrame(
        rows,
        columns=[
            "d",
            "runs",
            "mean_M",
            "stderr_M",
            "scaled_mean",
            "scaled_min",
            "conjecture_ratio",
            "expected_good_ratio",
        ],
    )
    slope = fit_slope(table["d"].tolist(), table["mean_M"].tolist())
    logger.info(f"fitted slope of log(M / 2^d) against log d, {slope:.4f}")
    manifest.set_aggregate("slope", slope)
    manifest.set_aggregate("table", table.to_dict(orient="records"))

    path = _output_path(config, "sweep")
    if path:
        write_table(table, path, config.fmt)
    _finish(manifest, config)
    return manifest, table, slope


def cmd_goodedges(config):
    """
    Good edges of permutation runs, their containment in the final graph and
    their count against the exact expectation.

    Returns:
        (tuple): the manifest and the per-run table
    """
    d = config.d
    results, errors = run_tasks(config, good_edge_run, d)

    manifest = RunManifest(config, config.timestamps)
    _collect(manifest, d, results, errors)
    table = pd.DataFrame(
        [dict(results[k], run=k) for k in sorted(results)],
        columns=[
            "run",
            "M",
            "n_good",
            "contained",
            "early_good_frac",
            "good_degree_ok",
            "i_at_half",
        ],
    )

    stats = aggregate(table["n_good"].values)
    expected = expected_good(d)
    stats["expected"] = expected
    stats["z"] = (
        (stats["mean"] - expected) / stats["stderr"]
        if stats["stderr"]
        else (0.0 if stats["mean"] == expected else math.nan)
    )
    manifest.set_aggregate("n_good", stats)
    manifest.set_aggregate("containment_rate", float(table["contained"].mean()))
    manifest.set_aggregate("good_degree_rate", float(table["good_degree_ok"].mean()))
    logger.info(
        f"mean good edges {stats['mean']:.2f} (expected {expected:.2f}), "
        f"containment {table['contained'].mean():.0%}"
    )

    path = _output_path(config, "goodedges")
    if path:
        write_table(table, path, config.fmt)
    _finish(manifest, config)
    return manifest, table


def cmd_ode(config, t_max=2.0, step=1e-3, trajectory=None, run_id=0):
    """
    Integration error against the closed form, and optionally the overlay of a
    recorded run.

    Args:
        config (ExperimentConfig): the experiment
        t_max (float, optional): end of the integration window
        step (float, optional): step size
        trajectory (str, optional): trajectory CSV written by `cmd_run`
        run_id (int, optional): run of the CSV to overlay

    Returns:
        (tuple): error table, overlay table or None
    """
    errors = integration_error(t_max, step)
    sup = float(errors["sup_error"].max())
    logger.info(f"sup-norm error {sup:.3g} on [0, {t_max}] at step {step}")

    table = None
    if trajectory is not None:
        frame = pd.read_csv(trajectory, float_precision="round_trip")
        frame = frame[frame["run_id"] == run_id]
        if frame.empty:
            raise ConfigError(f'run {run_id} is not in "{trajectory}"')
        d = int(frame["d"].iloc[0])
        table = overlay(records_from_frame(frame), d)

    report = {
        "config": config.to_dict(),
        "t_max": t_max,
        "step": step,
        "sup_error": sup,
        "errors": errors.to_dict(orient="records"),
        "stopping_time": {str(d): stopping_time(d) for d in config.dims if d >= 2},
    }
    path = _output_path(config, "ode_error")
    if path:
        write_table(errors, path, config.fmt)
        if table is not None:
            write_table(table, _output_path(config, "overlay"), config.fmt)
        dump_json(report, _output_path(config, "ode.json"))
    return errors, table


def cmd_oracle(config):
    """
    Catalog of saturated sets and exact distribution of M, for every d <= 3.

    Writes `oracle_d<d>.json` per dimension.

    Returns:
        (dict): the payload per dimension
    """
    payloads = {}
    for d in config.dims:
        catalog = enumerate_saturated(d)
        exact = exact_M_distribution(d)
        if exact.support != catalog.sizes:
            raise OracleError(
                f"support {exact.support} differs from saturated sizes {catalog.sizes}"
            )
        payload = {
            "d": d,
            "catalog": catalog.as_dict(),
            "exact": exact.as_dict(),
        }
        if d <= 2:
            payload["permutation"] = permutation_M_distribution(d).as_dict()
        payloads[d] = payload

        path = _output_path(config, f"oracle_d{d}.json")
        if path:
            dump_json(payload, path)
    return payloads
