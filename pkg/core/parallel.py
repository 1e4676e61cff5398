"""Ordered fan-out helpers and seed derivation.

Results never depend on the worker count: callers split work into fixed-size
chunks, ``map_ordered`` returns chunk results in input order, and callers reduce
them in that order.
"""

from __future__ import annotations

import logging
import multiprocessing
import os
import zlib
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

import numpy as np
from django.conf import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def _setup_worker() -> None:
    # spawned workers start without Django settings or logging
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
    import django

    django.setup()


def map_ordered(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: int | None = None,
    start_method: str | None = None,
) -> list[R]:
    """Apply ``fn`` to every item, in a process pool when ``workers > 1``.

    Each worker runs ``django.setup()`` first, so settings and logging match the
    parent under any start method.
    """
    items = list(items)
    workers = workers or settings.MAX_WORKERS
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    logger.debug("Dispatching %d work items to %d workers", len(items), workers)
    context = multiprocessing.get_context(start_method)
    with ProcessPoolExecutor(max_workers=workers, mp_context=context, initializer=_setup_worker) as pool:
        return list(pool.map(fn, items))


def chunked(seq: Sequence[T], size: int | None = None) -> list[Sequence[T]]:
    """Split ``seq`` into consecutive slices of ``size`` (the last may be shorter)."""
    size = size or settings.WORK_CHUNK_SIZE
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def derive_seed(seed: int, *keys: int | str) -> int:
    """Derive an independent 63-bit seed from ``seed`` and a path of keys.

    String keys are folded to integers with CRC-32 so that subcommand names can salt
    the stream; the derivation is ``SeedSequence(seed, spawn_key=keys)``.
    """
    spawn_key = tuple(zlib.crc32(k.encode("utf-8")) if isinstance(k, str) else int(k) for k in keys)
    state = np.random.SeedSequence(entropy=int(seed), spawn_key=spawn_key).generate_state(2, np.uint32)
    return int((int(state[0]) << 31) ^ int(state[1]))
