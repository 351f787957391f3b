"""Small shared helpers."""

import os
from concurrent.futures import ThreadPoolExecutor


def par_map(fn, items, parallel):
    """Map fn over items, optionally with a thread pool.

    Results come back in input order either way, so callers merge
    deterministically; the per-item computations must be pure.
    """
    items = list(items)
    if not parallel or len(items) <= 1:
        return [fn(x) for x in items]
    workers = min(32, os.cpu_count() or 1, len(items))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
