import logging
from abc import ABC, abstractmethod
from contextlib import contextmanager
from typing import Optional

from dask.distributed import Client, as_completed

from .log import LOG_FORMAT

__all__ = ["get_client", "batch_submit"]

logger = logging.getLogger("q2lab.util.dask")


class ManagedCluster(ABC):
    def __init__(self, n_workers=4, threads_per_worker=1, memory="auto"):
        self._n_workers = n_workers
        self._threads_per_worker = threads_per_worker
        self._memory = memory

        self._cluster, self._client = None, None

    def __enter__(self):
        self._open()
        self._wait_ready()
        return self

    def __exit__(self, *exc):
        self.close()

    ##

    @property
    def cluster(self):
        assert self._cluster is not None, "cluster is not opened yet"
        return self._cluster

    @property
    def client(self) -> Client:
        return self._client

    @property
    def n_workers(self) -> int:
        return self._n_workers

    @property
    def threads_per_worker(self) -> int:
        return self._threads_per_worker

    @property
    def memory(self) -> str:
        return self._memory

    @property
    def scheduler_address(self) -> str:
        return self.client.scheduler_info()["address"]

    @property
    def dashboard_address(self) -> Optional[str]:
        try:
            return self.client.scheduler_info()["services"]["dashboard"]
        except KeyError:
            return None

    ##

    @abstractmethod
    def open(self):
        """Start up a cluster instance."""

    def close(self):
        """Stop the managed cluster instance."""
        self.client.close()
        self._client = None
        logger.debug("client disconnected")

        self.cluster.close()
        self._cluster = None
        logger.debug("cluster shutdown")

    ##

    def _open(self):
        """Start up the client."""
        self.open()
        self._client = Client(self.cluster)

        logger.info(
            f"established cluster connection (scheduler: {self.scheduler_address})"
        )

        dashboard_address = self.dashboard_address
        if dashboard_address is None:
            logger.debug("no dashboard")
        else:
            logger.info(f"dashboard: {dashboard_address}")

    def _wait_ready(self):
        """Wait for the cluster to prepare all its workers."""
        self.client.wait_for_workers(self.n_workers)


class ManagedLocalCluster(ManagedCluster):
    def open(self):
        from dask.distributed import LocalCluster

        # a process is inherently sequential, one thread per worker process
        self._cluster = LocalCluster(
            n_workers=self.n_workers,
            threads_per_worker=self.threads_per_worker,
            memory_limit=self.memory,
            processes=True,
            dashboard_address=None,
        )


@contextmanager
def get_client(address=None, n_workers=4, worker_log_level="ERROR"):
    """
    Args:
        address (str, optional): address of an existing cluster scheduler, spawn a
            local cluster when not provided
        n_workers (int, optional): number of worker processes for a local cluster
        worker_log_level (str, optional): worker log level
    """
    if address is not None:
        # directly specify the scheduler to connect to
        client = Client(address)
        logger.info(f"connect to existing cluster (scheduler: {address})")
        try:
            yield client
        finally:
            # NOTE we open this client, therefore, we need to close it ourself
            client.close()
        return

    with ManagedLocalCluster(n_workers=n_workers) as cluster:
        client = cluster.client

        def install_logger(dask_worker):
            import coloredlogs

            coloredlogs.install(level=worker_log_level, **LOG_FORMAT)

        logger.debug(f'install logger for workers, level="{worker_log_level}"')
        client.register_worker_callbacks(install_logger)

        yield client


def batch_submit(client, func, keys, *iterables, batch_size=None, **kwargs):
    """
    Submit `func` over zipped iterables, at most `batch_size` tasks in flight.

    Args:
        client (Client): connected client
        func (callable): the task
        keys (list): one key per task, results are returned under these keys
        *iterables: positional arguments of every task
        batch_size (int, optional): tasks in flight, default to number of workers
        **kwargs: keyword arguments shared by every task

    Returns:
        (tuple of dict): results keyed by task key, errors keyed by task key
    """
    keys = list(keys)
    iterables = [list(iterable) for iterable in iterables]
    if any(len(iterable) != len(keys) for iterable in iterables):
        raise ValueError("iterables does not have the same length as keys")

    batch_size = batch_size if batch_size is not None else len(client.ncores())
    logger.debug(f"batch submission, size={batch_size}")

    tasks = iter(zip(keys, *iterables))

    def submit_next():
        try:
            key, *args = next(tasks)
        except StopIteration:
            return None
        # pure=False, every run is a distinct task even with equal arguments
        future = client.submit(func, *args, pure=False, **kwargs)
        owner[future.key] = key
        return future

    owner = {}
    futures = []
    for _ in range(batch_size):
        future = submit_next()
        if future is None:
            break
        futures.append(future)

    results, errors = {}, {}
    queue = as_completed(futures, with_results=False)
    for future in queue:
        key = owner.pop(future.key)
        try:
            results[key] = future.result()
        except Exception as err:
            logger.error(f"task {key} failed: {err}")
            errors[key] = err
        del future  # release the future

        # submit new task if there is any
        future = submit_next()
        if future is not None:
            queue.add(future)
    return results, errors
