"""
Trial-level parallelism.

Trials are cut into contiguous chunks; each chunk re-derives ``Rng(seed).substream(t)`` for
its trials and the chunks are reassembled in order, so results do not depend on the number
of workers.
"""

from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from typing import Any, TypeVar

from ...core.exceptions import InputError
from ..logger import logging
from ..rng import Rng
from .settings import WorkerSettings

logger = logging.getLogger(__name__)

T = TypeVar("T")


def _run_chunk(function: Callable[[Any, int, Rng], T], payload: Any, seed: int, start: int, stop: int) -> list[T]:
    root = Rng(seed)
    return [function(payload, t, root.substream(t)) for t in range(start, stop)]


def chunk_bounds(trials: int, chunk_size: int) -> list[tuple[int, int]]:
    return [(start, min(start + chunk_size, trials)) for start in range(0, trials, chunk_size)]


def run_trials(
    function: Callable[[Any, int, Rng], T],
    payload: Any,
    trials: int,
    seed: int,
    threads: int | None = None,
    chunk_size: int | None = None,
) -> list[T]:
    """Run ``function(payload, t, Rng(seed).substream(t))`` for ``t = 0..trials-1`` in trial order."""
    if function not in WorkerSettings.functions:
        raise InputError(f"'{getattr(function, '__name__', function)}' is not a registered trial function")
    if trials < 0:
        raise InputError(f"Trial count must be non-negative, got {trials}")
    threads = WorkerSettings.max_workers if threads is None else threads
    chunk_size = WorkerSettings.chunk_size if chunk_size is None else chunk_size
    bounds = chunk_bounds(trials, chunk_size)
    logger.debug(f"{function.__name__}: {trials} trials in {len(bounds)} chunk(s) on {threads} worker(s)")

    if threads <= 1 or len(bounds) <= 1:
        chunks = [_run_chunk(function, payload, seed, start, stop) for start, stop in bounds]
    else:
        with ProcessPoolExecutor(max_workers=threads, initializer=WorkerSettings.on_startup) as executor:
            futures = [executor.submit(_run_chunk, function, payload, seed, start, stop) for start, stop in bounds]
            chunks = [future.result() for future in futures]
        WorkerSettings.on_shutdown()
    return [row for chunk in chunks for row in chunk]
