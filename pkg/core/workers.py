"""
Worker fan-out with order-preserving merge

Results always come back in input order, so a run with eight workers
prints exactly what a run with one worker prints.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def get_worker_count(requested: Optional[int] = None) -> int:
    """Worker cap from the argument or BOURBAKIKIT_THREADS"""
    count = requested if requested is not None else settings.BOURBAKIKIT_THREADS
    return max(1, int(count))


def parallel_map(func: Callable[[T], R], items: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """Map func over items; func must be a picklable top-level callable"""
    count = get_worker_count(workers)
    if count == 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.debug(f"Fanning {len(items)} items across {count} workers")
    with ProcessPoolExecutor(max_workers=count) as pool:
        return list(pool.map(func, items))
