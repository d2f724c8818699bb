"""Vectorized pure-numpy implementations of the batch operations.

Words are rows of 2-D int64 arrays, one word per row, all the same length.
These routines back the batch sweeps and the level-by-level (breadth-first)
counters when the numba backend is disabled, and serve as an independent
organization of the same computations for cross-backend tests: the compiled
path searches depth-first with incremental checks, this path extends whole
levels at once with sliced comparisons.
"""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


# -- squares ------------------------------------------------------------------

def batch_has_square(W):
    """Reference route: try every (start, half) pair with slice compares."""
    B, n = W.shape
    out = np.zeros(B, dtype=bool)
    for h in range(1, n // 2 + 1):
        for s in range(0, n - 2 * h + 1):
            out |= np.all(W[:, s:s + h] == W[:, s + h:s + 2 * h], axis=1)
    return out


def batch_first_square(W):
    """Per-row leftmost-start then shortest square; start -1 where none."""
    B, n = W.shape
    starts = np.full(B, -1, dtype=np.int64)
    halves = np.zeros(B, dtype=np.int64)
    found = np.zeros(B, dtype=bool)
    for s in range(n - 1):
        for h in range(1, (n - s) // 2 + 1):
            eq = np.all(W[:, s:s + h] == W[:, s + h:s + 2 * h], axis=1)
            new = eq & ~found
            starts[new] = s
            halves[new] = h
            found |= new
    return starts, halves


def batch_has_square_runs(W):
    """Run route: a square of half h is h consecutive matches at distance h."""
    B, n = W.shape
    out = np.zeros(B, dtype=bool)
    for h in range(1, n // 2 + 1):
        d = W[:, h:] == W[:, :-h]
        sw = sliding_window_view(d, h, axis=1)
        out |= sw.all(axis=2).any(axis=1)
    return out


# -- steadiness ---------------------------------------------------------------

def batch_unsteady_position_naive(W):
    """First 1-based deletion whose reduction has a square (full rescan); 0 if none."""
    B, n = W.shape
    pos = np.zeros(B, dtype=np.int64)
    for p in range(1, n + 1):
        R = np.delete(W, p - 1, axis=1)
        bad = batch_has_square(R)
        new = bad & (pos == 0)
        pos[new] = p
    return pos


def batch_unsteady_position_fast(W):
    """Same, scanning only squares straddling the deletion point.

    Valid only for square-free rows; callers mask accordingly.
    """
    B, n = W.shape
    pos = np.zeros(B, dtype=np.int64)
    m = n - 1
    for p in range(1, n + 1):
        t = p - 1
        R = np.delete(W, t, axis=1)
        hit = np.zeros(B, dtype=bool)
        for h in range(1, m // 2 + 1):
            s_lo = max(0, t - 2 * h + 1)
            s_hi = min(t - 1, m - 2 * h)
            for s in range(s_lo, s_hi + 1):
                hit |= np.all(R[:, s:s + h] == R[:, s + h:s + 2 * h], axis=1)
        new = hit & (pos == 0)
        pos[new] = p
    return pos


def batch_is_steady(W):
    """Square-free and no deletion leaves a square (run + straddle routes)."""
    sf = ~batch_has_square_runs(W)
    out = sf.copy()
    if sf.any():
        out[sf] = batch_unsteady_position_fast(W[sf]) == 0
    return out


def batch_steady_append_ok(E):
    """Rows of E whose last letter keeps a steady prefix steady.

    Assumes every row minus its last letter is steady; checks a square
    suffix and the suffix-window deletions, mirroring the incremental
    depth-first test.
    """
    B, m = E.shape
    bad = np.zeros(B, dtype=bool)
    for h in range(1, m // 2 + 1):
        bad |= np.all(E[:, m - 2 * h:m - h] == E[:, m - h:m], axis=1)
    for h in range(1, (m - 1) // 2 + 1):
        base = m - 2 * h - 1
        win = E[:, base:m]
        for q in range(2 * h):
            red = np.delete(win, q, axis=1)
            bad |= np.all(red[:, :h] == red[:, h:], axis=1)
    return ~bad


def batch_failure_class(E):
    """Smallest half-length j certifying the append failure of each row
    (square suffix of half j, or a suffix-window deletion leaving one)."""
    B, m = E.shape
    cls = np.zeros(B, dtype=np.int64)
    for h in range(1, m // 2 + 1):
        hit = np.all(E[:, m - 2 * h:m - h] == E[:, m - h:m], axis=1)
        if m >= 2 * h + 1:
            base = m - 2 * h - 1
            win = E[:, base:m]
            for q in range(2 * h):
                red = np.delete(win, q, axis=1)
                hit |= np.all(red[:, :h] == red[:, h:], axis=1)
        new = hit & (cls == 0)
        cls[new] = h
    return cls


# -- exponents and separation ---------------------------------------------

def _longest_true_run(d):
    """Longest run of True per row of a boolean matrix."""
    B, m = d.shape
    if m == 0:
        return np.zeros(B, dtype=np.int64)
    c = np.cumsum(d, axis=1, dtype=np.int64)
    z = np.where(d, -1, c)
    baseline = np.maximum(np.maximum.accumulate(z, axis=1), 0)
    return (c - baseline).max(axis=1)


def batch_max_exponent_fast(W):
    """Run route: per period p the longest match run r gives a factor of
    length r + p. Returns unreduced (num, den) arrays, baseline 1/1."""
    B, n = W.shape
    num = np.ones(B, dtype=np.int64)
    den = np.ones(B, dtype=np.int64)
    for p in range(1, n):
        r = _longest_true_run(W[:, p:] == W[:, :-p])
        cand = r + p
        better = (r > 0) & (cand * den > num * p)
        num[better] = cand[better]
        den[better] = p
    return num, den


def batch_max_exponent_naive(W):
    """Reference route: all factors, all periods, sliced equality."""
    B, n = W.shape
    num = np.ones(B, dtype=np.int64)
    den = np.ones(B, dtype=np.int64)
    for s in range(n):
        for length in range(2, n - s + 1):
            e = s + length
            for p in range(1, length):
                valid = np.all(W[:, s:e - p] == W[:, s + p:e], axis=1)
                better = valid & (length * den > num * p)
                num[better] = length
                den[better] = p
    return num, den


def batch_exceeds_fast(W, num, den):
    B, n = W.shape
    out = np.zeros(B, dtype=bool)
    for p in range(1, n):
        r = _longest_true_run(W[:, p:] == W[:, :-p])
        out |= (r > 0) & ((r + p) * den > num * p)
    return out


def batch_exceeds_naive(W, num, den):
    B, n = W.shape
    out = np.zeros(B, dtype=bool)
    for s in range(n):
        for length in range(2, n - s + 1):
            e = s + length
            for p in range(1, length):
                if length * den <= num * p:
                    continue
                out |= np.all(W[:, s:e - p] == W[:, s + p:e], axis=1)
    return out


def batch_separation_violation(W):
    """XYX with |Y| <= |X| exists iff some period p has a match run of at
    least p/2."""
    B, n = W.shape
    out = np.zeros(B, dtype=bool)
    for p in range(1, n):
        r = _longest_true_run(W[:, p:] == W[:, :-p])
        out |= (r >= 1) & (2 * r >= p)
    return out


# -- level-by-level counters ----------------------------------------------

def steady_canonical_levels(n_max, k):
    """Canonical steady words by length, each level a lex-sorted matrix.

    Index d of the returned list holds all canonical steady words of
    length d over {0..k-1} as rows.
    """
    levels = [np.zeros((1, 0), dtype=np.int64)]
    if n_max < 1:
        return levels
    cur = np.zeros((1, 1), dtype=np.int64)
    levels.append(cur)
    for d in range(1, n_max):
        if cur.shape[0] == 0:
            cur = np.zeros((0, d + 1), dtype=np.int64)
            levels.append(cur)
            continue
        maxl = cur.max(axis=1)
        reps = np.repeat(cur, k, axis=0)
        letters = np.tile(np.arange(k, dtype=np.int64), cur.shape[0])
        allowed = letters <= np.repeat(maxl, k) + 1
        E = np.hstack([reps[allowed], letters[allowed][:, None]])
        cur = E[batch_steady_append_ok(E)]
        levels.append(cur)
    return levels


def count_transversals_batch(lists, with_dj=False):
    """Breadth-first steady transversal counts for per-position letter lists.

    Returns (C, F, Dj) where C[d] counts steady transversals of the first d
    lists, F[d] the failures at step d, and Dj maps (d, j) to the failure
    classification counts (empty unless with_dj).
    """
    n = len(lists)
    C = [1] + [0] * n
    F = [0] * (n + 1)
    Dj = {}
    cur = np.zeros((1, 0), dtype=np.int64)
    for d in range(n):
        if cur.shape[0] == 0:
            break
        letters_d = np.asarray(sorted(lists[d]), dtype=np.int64)
        reps = np.repeat(cur, letters_d.size, axis=0)
        letters = np.tile(letters_d, cur.shape[0])
        E = np.hstack([reps, letters[:, None]])
        ok = batch_steady_append_ok(E)
        C[d + 1] = int(ok.sum())
        F[d + 1] = int((~ok).sum())
        if with_dj and (~ok).any():
            cls = batch_failure_class(E[~ok])
            for j in np.unique(cls):
                Dj[(d + 1, int(j))] = int((cls == j).sum())
        cur = E[ok]
    return C, F, Dj


# -- sweep drivers ----------------------------------------------------------

def _word_chunks(n, k, chunk=1 << 17):
    """All k**n words of length n as row-matrices, in lexicographic chunks."""
    total = k ** n
    for lo in range(0, total, chunk):
        idx = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        W = np.empty((idx.size, n), dtype=np.int64)
        rem = idx
        for pos in range(n - 1, -1, -1):
            W[:, pos] = rem % k
            rem = rem // k
        yield W


def _chunk_cross_checks(W):
    """Disagreements between the run/straddle routes and the reference
    routes on one chunk; mirrors the per-word cross-check."""
    B, n = W.shape
    bad = np.zeros(B, dtype=bool)
    sq_runs = batch_has_square_runs(W)
    starts, _halves = batch_first_square(W)
    bad |= sq_runs != (starts >= 0)
    sf = ~sq_runs
    if sf.any():
        sub = np.ascontiguousarray(W[sf])
        sub_bad = batch_unsteady_position_fast(sub) != batch_unsteady_position_naive(sub)
        tmp = np.zeros(B, dtype=bool)
        tmp[sf] = sub_bad
        bad |= tmp
    nf, df = batch_max_exponent_fast(W)
    nn, dn = batch_max_exponent_naive(W)
    bad |= nf * dn != nn * df
    for a, b in ((7, 5), (3, 2)):
        bad |= batch_exceeds_fast(W, a, b) != batch_exceeds_naive(W, a, b)
    return int(bad.sum())


def sweep_cross_checks(n, k):
    """Route disagreement count over all k**n words of length n."""
    if n == 0:
        return 0
    return sum(_chunk_cross_checks(W) for W in _word_chunks(n, k))


def sweep_random_cross_checks(words, lengths):
    """Route disagreement count over a padded corpus, grouped by length."""
    words = np.asarray(words, dtype=np.int64)
    lengths = np.asarray(lengths)
    bad = 0
    for n in np.unique(lengths):
        if n == 0:
            continue
        sel = np.ascontiguousarray(words[lengths == n][:, :n])
        bad += _chunk_cross_checks(sel)
    return bad


def sweep_implication_chain(n, k, num, den):
    """Violations of [no exponent > num/den => separation => steady] over
    all k**n words of length n."""
    if n == 0:
        return 0
    bad = 0
    for W in _word_chunks(n, k):
        exceeds = batch_exceeds_fast(W, num, den)
        sep_bad = batch_separation_violation(W)
        bad += int((~exceeds & sep_bad).sum())
        sep_ok = ~sep_bad
        if sep_ok.any():
            sub = np.ascontiguousarray(W[sep_ok])
            bad += int((~batch_is_steady(sub)).sum())
    return bad
