"""
Worker Pool

Shards independent checks (words, complexes, tuples) across processes.
Results always come back in input order.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

from ..config import get_thread_limit
from .logger import get_logger

logger = get_logger("workers")

T = TypeVar("T")
R = TypeVar("R")


def worker_count(requested: int | None = None) -> int:
    """Requested worker count, capped by ZZT_THREADS."""
    limit = get_thread_limit()
    if requested is None:
        return limit
    return max(1, min(requested, limit))


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1, chunksize: int = 8) -> list[R]:
    """
    Map a picklable function over items.

    Args:
        fn: Module-level function
        items: Inputs
        workers: Process count; 1 or less runs serially in this process
        chunksize: Items per task sent to a worker

    Returns:
        Results in input order
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    logger.debug(f"Sharding {len(items)} items over {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
