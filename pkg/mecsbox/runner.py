import asyncio
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Any, Callable, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


async def gather_in_executor(
    func: Callable[..., Any],
    jobs: Sequence[Tuple[Any, ...]],
    workers: int = 1,
    executor: Optional[Executor] = None,
) -> List[Any]:
    """
    Runs `func(*job)` for every job and returns the results in submission order.
    The first failing job, in submission order, is re-raised once all jobs have settled.
    """
    if workers <= 1 and executor is None:
        return [func(*job) for job in jobs]

    loop = asyncio.get_running_loop()
    owned = executor is None
    if owned:
        executor = ProcessPoolExecutor(max_workers=workers)
    logger.info("Running %d jobs on %d workers", len(jobs), workers)

    try:
        results = await asyncio.gather(
            *(loop.run_in_executor(executor, func, *job) for job in jobs), return_exceptions=True
        )
    finally:
        if owned:
            executor.shutdown()

    for result in results:
        if isinstance(result, Exception):
            raise result
    return results


def run_jobs(func: Callable[..., Any], jobs: Sequence[Tuple[Any, ...]], workers: int = 1) -> List[Any]:
    return asyncio.run(gather_in_executor(func, jobs, workers))
