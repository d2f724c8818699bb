"""Symmetry-reduced exhaustive enumeration of steady, square-free, and
irreducible words.

Words are enumerated in canonical form (letters first appear in increasing
order), which picks exactly one representative per orbit under letter
permutations. Steadiness and square-freeness are hereditary on prefixes, so
both enumerations are depth-first searches with incremental checks; the
counters also exist as a breadth-first batched route (``method="batch"``)
used as the fallback when numba is disabled and as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterator, Optional

import numpy as np

from . import arrayops, kernels
from .predicates import is_extremal, is_irreducible
from .words import Word, alphabet_of_size


@dataclass
class CountTable:
    """Counts of canonical words per length for one alphabet size."""

    k: int
    rows: Dict[int, int] = field(default_factory=dict)

    def csv_lines(self):
        yield "n,count"
        for n in sorted(self.rows):
            yield f"{n},{self.rows[n]}"


def _dfs_canonical(n_max: int, k: int, append_ok) -> Iterator[Word]:
    """All canonical words of length 1..n_max passing the incremental check,
    in depth-first (per-length lexicographic) order."""
    buf = np.zeros(n_max, dtype=np.int64)
    stack = [(0, 0)]  # (depth, next letter to try)
    max_used = []
    while stack:
        depth, letter = stack.pop()
        if letter == 0 and depth < len(max_used):
            del max_used[depth:]
        top = max_used[-1] if max_used else -1
        if letter > min(top + 1, k - 1):
            continue
        stack.append((depth, letter + 1))
        buf[depth] = letter
        if not append_ok(buf, depth + 1):
            continue
        yield tuple(int(a) for a in buf[: depth + 1])
        max_used.append(max(top, letter))
        if depth + 1 < n_max:
            stack.append((depth + 1, 0))
        else:
            del max_used[-1]
    return


def iter_steady_canonical(n_max: int, k: int) -> Iterator[Word]:
    """Canonical steady words of every length 1..n_max, prefix-first."""
    def ok(buf, m):
        return not kernels.steady_append_violation(buf, m)

    return _dfs_canonical(n_max, k, ok)


def iter_squarefree_canonical(n_max: int, k: int) -> Iterator[Word]:
    """Canonical square-free words of every length 1..n_max, prefix-first."""
    def ok(buf, m):
        return kernels.square_end_half(buf, m) == 0

    return _dfs_canonical(n_max, k, ok)


def enumerate_steady_canonical(n: int, k: int) -> Iterator[Word]:
    """Canonical steady words of exactly length n, lexicographically."""
    if n < 1:
        raise ValueError("length must be >= 1")
    for w in iter_steady_canonical(n, k):
        if len(w) == n:
            yield w


def _count_subtree(args):
    """Counts per length of the steady DFS subtree rooted at one frontier word."""
    root, n_max, k = args
    counts = {n: 0 for n in range(len(root) + 1, n_max + 1)}
    buf = np.zeros(n_max, dtype=np.int64)
    buf[: len(root)] = root
    stack = [(len(root), 0)]
    max_used = [max(root)]
    while stack:
        depth, letter = stack.pop()
        if letter == 0:
            del max_used[depth - len(root) + 1:]
        top = max_used[-1]
        if letter > min(top + 1, k - 1):
            continue
        stack.append((depth, letter + 1))
        buf[depth] = letter
        if kernels.steady_append_violation(buf, depth + 1):
            continue
        counts[depth + 1] += 1
        if depth + 1 < n_max:
            max_used.append(max(top, letter))
            stack.append((depth + 1, 0))
    return counts


def count_steady_canonical(
    n_max: int, k: int, jobs: int = 1, method: str = "auto"
) -> CountTable:
    """Counts of canonical steady words for every length 1..n_max.

    method: "dfs" (incremental depth-first), "batch" (level-by-level numpy),
    or "auto" (dfs on the numba backend, batch otherwise). jobs > 1 splits
    the DFS frontier at a fixed depth across processes; counts are identical
    regardless of method or job count.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if method == "auto":
        method = "dfs" if kernels.USING_NUMBA else "batch"
    table = CountTable(k=k, rows={n: 0 for n in range(1, n_max + 1)})
    if method == "batch":
        levels = arrayops.steady_canonical_levels(n_max, k)
        for n in range(1, n_max + 1):
            table.rows[n] = int(levels[n].shape[0])
        return table
    if method != "dfs":
        raise ValueError(f"unknown method {method!r}")
    split = min(6, n_max)
    frontier = []
    for w in iter_steady_canonical(split, k):
        table.rows[len(w)] += 1
        if len(w) == split and split < n_max:
            frontier.append(w)
    if not frontier:
        return table
    tasks = [(w, n_max, k) for w in frontier]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_count_subtree, tasks, chunksize=8))
    else:
        results = [_count_subtree(t) for t in tasks]
    for counts in results:
        for n, c in counts.items():
            table.rows[n] += c
    return table


def scan_irreducible(
    n_min: int, n_max: int, k: int
) -> Dict[int, Optional[Word]]:
    """Lexicographically least canonical irreducible word per length, or None.

    Scans all canonical square-free words (irreducibility is not hereditary,
    so every square-free word of each target length is tested).
    """
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    out: Dict[int, Optional[Word]] = {n: None for n in range(n_min, n_max + 1)}
    for w in iter_squarefree_canonical(n_max, k):
        n = len(w)
        if n < n_min or out[n] is not None:
            continue
        if is_irreducible(w):
            out[n] = w
    return out


def scan_extremal(
    n_min: int, n_max: int, k: int
) -> Dict[int, Optional[Word]]:
    """Lexicographically least canonical extremal word per length, or None.

    Extremality is tested over the full k-letter alphabet; it is invariant
    under letter permutations, so canonical representatives suffice.
    """
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    alphabet = alphabet_of_size(k)
    out: Dict[int, Optional[Word]] = {n: None for n in range(n_min, n_max + 1)}
    for w in iter_squarefree_canonical(n_max, k):
        n = len(w)
        if n < n_min or out[n] is not None:
            continue
        if is_extremal(w, alphabet):
            out[n] = w
    return out
