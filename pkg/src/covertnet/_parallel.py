"""Deterministic chunk execution shared by search and simulation.

Jobs are fixed-size partitions of a work space; their boundaries never
depend on the worker count, and results are collected in job order, so a
parallel run is bit-identical to the sequential one.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence


def run_chunks(fn: Callable, jobs: Sequence, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))
