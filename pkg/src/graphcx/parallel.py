"""Order-preserving process-pool map; results never depend on the worker count."""
from __future__ import annotations

import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_SERIAL_BELOW = 64


def pmap(fn: Callable[[T], R], items: Sequence[T], threads: int = 1) -> list[R]:
    items = list(items)
    if threads <= 1 or len(items) < _SERIAL_BELOW:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (threads * 8))
    ctx = mp.get_context("fork")
    with ProcessPoolExecutor(max_workers=threads, mp_context=ctx) as ex:
        return list(ex.map(fn, items, chunksize=chunk))
