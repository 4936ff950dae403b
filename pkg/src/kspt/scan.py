"""Exhaustive scan over binary vertex assignments, with two kernel lanes.

The hot loop ranges over all 2^n assignments of {0,1} to n vertices, scoring
each as a sum of per-context table lookups.  A compiled extension lane is
used when the build produced it; a vectorized numpy lane is the fallback and
can be forced with KSPT_FORCE_PYTHON_SCAN=1.  Both lanes implement the same
deterministic reduction (maximum score, ties to the smallest assignment), so
lane choice and thread count never change the result.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

try:
    from . import _scan as _compiled
except ImportError:
    _compiled = None

FORCE_PYTHON_ENV = "KSPT_FORCE_PYTHON_SCAN"

_NUMPY_BLOCK = 1 << 20


def compiled_available() -> bool:
    return _compiled is not None


def active_lane(lane: str | None = None) -> str:
    """Resolve the kernel lane: explicit argument, then env override, then best."""
    if lane is not None:
        if lane not in ("compiled", "numpy"):
            raise ValueError(f"unknown scan lane {lane!r}")
        if lane == "compiled" and _compiled is None:
            raise RuntimeError("compiled scan extension is not available")
        return lane
    if os.environ.get(FORCE_PYTHON_ENV):
        return "numpy"
    return "compiled" if _compiled is not None else "numpy"


def _numpy_best(members: np.ndarray, tables: np.ndarray, lo: int, hi: int) -> tuple[int, int]:
    m, d = members.shape
    best_score = -1
    best_v = lo
    for start in range(lo, hi, _NUMPY_BLOCK):
        stop = min(start + _NUMPY_BLOCK, hi)
        vs = np.arange(start, stop, dtype=np.uint64)
        total = np.zeros(stop - start, dtype=np.int64)
        for x in range(m):
            pattern = np.zeros(stop - start, dtype=np.int64)
            for j in range(d):
                bit = (vs >> np.uint64(members[x, j])) & np.uint64(1)
                pattern |= bit.astype(np.int64) << j
            total += tables[x][pattern]
        idx = int(np.argmax(total))
        score = int(total[idx])
        # argmax returns the first maximizer, i.e. the smallest v in the block
        if score > best_score:
            best_score = score
            best_v = start + idx
    return best_score, best_v


def best_assignment(
    members: list[tuple[int, ...]],
    tables: list[list[int]],
    n: int,
    threads: int | None = None,
    lane: str | None = None,
) -> tuple[int, int, str]:
    """Maximize sum_x tables[x][pattern_x(v)] over v in [0, 2^n).

    members[x] lists the vertex indices whose v-bits form the lookup pattern
    of context x (bit j of the pattern is the v-bit of members[x][j]).  All
    contexts must have equal size.  Returns (best_score, best_v, lane).
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if not members:
        raise ValueError("need at least one context")
    d = len(members[0])
    if any(len(c) != d for c in members):
        raise ValueError("contexts must have equal size")
    if any(len(t) != (1 << d) for t in tables):
        raise ValueError(f"each table must have 2^{d} entries")
    which = active_lane(lane)
    members_arr = np.ascontiguousarray(members, dtype=np.int32)
    tables_arr = np.ascontiguousarray(tables, dtype=np.int64)
    total = 1 << n
    if threads is None:
        threads = min(os.cpu_count() or 1, 8)
    threads = max(1, threads)

    if which == "compiled":
        kernel = lambda lo, hi: _compiled.best_over_range(members_arr, tables_arr, lo, hi)
    else:
        kernel = lambda lo, hi: _numpy_best(members_arr, tables_arr, lo, hi)

    # small scans are not worth a pool
    if threads == 1 or total < (1 << 16):
        score, v = kernel(0, total)
        return score, v, which

    chunks = threads * 4
    step = -(-total // chunks)
    ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    best_score = -1
    best_v = total
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for score, v in pool.map(lambda r: kernel(*r), ranges):
            if score > best_score or (score == best_score and v < best_v):
                best_score = score
                best_v = v
    return best_score, best_v, which
