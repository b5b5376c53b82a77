from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING, Callable

import numpy as np

if TYPE_CHECKING:
    from collections.abc import Sequence


def map_chunks(
    func: Callable[[np.ndarray], np.ndarray],
    points: np.ndarray | Sequence[complex],
    workers: int | None = None,
    chunk_size: int = 2048,
) -> np.ndarray:
    """Apply a vectorized `func` to contiguous chunks of `points`.

    Results are concatenated in input order, so any reduction over the output
    (min, max, argmax) is independent of `workers`.

    Parameters
    ----------
    func : Callable[[np.ndarray], np.ndarray]
        Maps a 1D array of sample points to an array whose first axis has the
        same length.
    points : array-like
        Sample points.
    workers : int, optional
        Number of threads.  ``None`` or ``1`` runs serially.
    chunk_size : int
        Number of points per chunk, by default 2048.
    """
    pts = np.asarray(points)
    if chunk_size < 1:
        raise ValueError(f"chunk_size must be >= 1, got {chunk_size!r}")
    if pts.size == 0:
        return func(pts)
    chunks = [pts[i : i + chunk_size] for i in range(0, len(pts), chunk_size)]
    if workers is None or workers <= 1 or len(chunks) == 1:
        results = [func(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(func, chunks))
    return np.concatenate(results, axis=0)
