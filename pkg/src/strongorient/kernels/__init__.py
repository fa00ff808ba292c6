"""Backend dispatch for the heavy inner loops.

Two interchangeable backends implement the same array-level contracts:

* ``numba_backend``: @njit-compiled kernels, the default when numba imports.
* ``numpy_backend``: pure-numpy vectorized fallbacks.

Selection: the environment variable ``STRONGORIENT_BACKEND`` set to ``numba``
or ``numpy`` forces a backend; unset (or ``auto``) picks numba when available.
Both backends consume identical counter-based random bits, so every count
they return is bit-identical; the test suite pins that equivalence.

All kernels that reduce over trials or orientation ids do so in fixed-size
chunks merged in deterministic order, so results do not depend on the number
of threads.
"""

from __future__ import annotations

import os
from typing import TYPE_CHECKING

import numpy as np

from ..errors import DomainError

if TYPE_CHECKING:
    from ..graph import Graph

_ENV_VAR = "STRONGORIENT_BACKEND"
_numba_probe: bool | None = None


def _numba_available() -> bool:
    global _numba_probe
    if _numba_probe is None:
        try:
            import numba  # noqa: F401

            _numba_probe = True
        except ImportError:
            _numba_probe = False
    return _numba_probe


def backend_name() -> str:
    """Resolve the active backend from the environment."""
    raw = os.environ.get(_ENV_VAR, "auto").strip().lower() or "auto"
    if raw == "auto":
        return "numba" if _numba_available() else "numpy"
    if raw not in ("numba", "numpy"):
        raise DomainError(
            f"{_ENV_VAR} must be 'numba', 'numpy', or 'auto', got '{raw}'"
        )
    if raw == "numba" and not _numba_available():
        raise DomainError("backend 'numba' requested but numba is not importable")
    return raw


def _impl():
    if backend_name() == "numba":
        from . import numba_backend as mod
    else:
        from . import numpy_backend as mod
    return mod


def set_threads(requested: int) -> int:
    """Set worker threads for the active backend; returns the effective count.

    Requests above the hard cap numba was started with are clipped, never an
    error.  The numpy backend is single-threaded and always reports 1.
    Results are guaranteed identical for any thread count.
    """
    if requested < 1:
        raise DomainError("thread count must be >= 1")
    if backend_name() != "numba":
        return 1
    import numba

    effective = min(requested, numba.config.NUMBA_NUM_THREADS)
    numba.set_num_threads(effective)
    return effective


def _edge_arrays(g: "Graph") -> tuple[np.ndarray, np.ndarray]:
    if g.m == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    eu = np.array([e[0] for e in g.edges], dtype=np.int64)
    ev = np.array([e[1] for e in g.edges], dtype=np.int64)
    return eu, ev


def cheeger_scan(g: "Graph") -> tuple[int, int, int]:
    """Best (cut, min-volume, bitmask) over proper subsets containing vertex 0.

    Exact integer comparisons; ties broken toward the smallest bitmask.
    """
    deg = np.array(g.deg, dtype=np.int64)
    adj = np.array(g.adjacency_masks(), dtype=np.uint64)
    cut, minvol, mask = _impl().cheeger_scan_arrays(g.n, deg, adj, 2 * g.m)
    return int(cut), int(minvol), int(mask)


def connected_subsets(g: "Graph", k: int) -> np.ndarray:
    """All size-k connected-subgraph bitmasks, ascending (uint64 array)."""
    adj = np.array(g.adjacency_masks(), dtype=np.uint64)
    return _impl().connected_subsets_arrays(g.n, adj, k)


def census_counts(g: "Graph") -> tuple[int, int, int]:
    """(strong, sink_free, eulerian) counts over all 2^m orientations.

    The caller is responsible for the m <= 24 guard and for graphs whose
    non-isolated core exceeds 64 vertices (impossible when m <= 24 after
    stripping isolated vertices).
    """
    eu, ev = _edge_arrays(g)
    deg = np.array(g.deg, dtype=np.int64)
    s, sf, eul = _impl().census_arrays(g.n, eu, ev, deg)
    return int(s), int(sf), int(eul)


def mc_strong_count(g: "Graph", trials: int, seed: int, trial_offset: int = 0) -> int:
    """Number of sampled orientations that are strongly connected."""
    eu, ev = _edge_arrays(g)
    return int(_impl().mc_strong_arrays(g.n, eu, ev, trials, seed, trial_offset))


def mc_sink_stats(
    g: "Graph", trials: int, seed: int, trial_offset: int = 0
) -> tuple[int, int]:
    """(sum of sink counts, sum of squared sink counts) over sampled orientations."""
    eu, ev = _edge_arrays(g)
    s, sq = _impl().mc_sink_arrays(g.n, eu, ev, trials, seed, trial_offset)
    return int(s), int(sq)


def mc_joint_stats(
    g: "Graph", trials: int, seed: int, trial_offset: int = 0
) -> tuple[int, int, int]:
    """(strongly-connected trials, trials with >= 1 sink, total sinks)."""
    eu, ev = _edge_arrays(g)
    s, ws, ts = _impl().mc_joint_arrays(g.n, eu, ev, trials, seed, trial_offset)
    return int(s), int(ws), int(ts)


def warmup() -> str:
    """Force-compile (numba) or touch (numpy) every kernel on a toy graph."""
    from ..graph import Graph

    tri = Graph(3, [(0, 1), (1, 2), (0, 2)])
    cheeger_scan(tri)
    connected_subsets(tri, 2)
    census_counts(tri)
    mc_strong_count(tri, 4, 1)
    mc_sink_stats(tri, 4, 1)
    mc_joint_stats(tri, 4, 1)
    return backend_name()
