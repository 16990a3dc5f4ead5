"""Work budget and deterministic parallel map."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

from .errors import TooLarge

DEFAULT_BUDGET = 10**9

T = TypeVar("T")
R = TypeVar("R")


def default_budget() -> int:
    return int(os.environ.get("NIHOSPEC_BUDGET", DEFAULT_BUDGET))


def default_workers() -> int:
    return os.cpu_count() or 1


def check_budget(work: int, budget: int | None, what: str) -> None:
    """Refuse up front when the estimated element-operation count exceeds the budget."""
    limit = default_budget() if budget is None else budget
    if work > limit:
        raise TooLarge(f"{what} needs ~{work} element operations, budget is {limit}")


def chunks(n: int, parts: int) -> list[range]:
    """Split range(n) into at most ``parts`` contiguous pieces."""
    parts = max(1, min(parts, n))
    step = -(-n // parts)
    return [range(i, min(i + step, n)) for i in range(0, n, step)]


def pmap(fn: Callable[[T], R], items: Iterable[T], workers: int | None = 1) -> list[R]:
    """Map in input order. numpy releases the GIL in the heavy kernels, so threads suffice."""
    items = list(items)
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
