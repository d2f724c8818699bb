"""Loop-kernel source shared by the compiled and plain-Python families.

Functions here operate on words stored as 1-D int64 numpy arrays, always
together with an explicit length argument so that callers can reuse
preallocated buffers. ``kernels`` imports this module twice: once as-is
(the plain-Python family) and once with every function replaced by its
numba-compiled version (the default family). Keep the code numba-friendly:
no dicts, no closures, no Python objects.

Two independent routes exist per property. The ``*_naive`` functions are
brute-force references that follow the defining enumeration directly; the
fast routes use suffix-anchored or run-table shortcuts. Their agreement is
asserted by the test suite, so neither side may borrow from the other.
"""

import numpy as np


# -- square detection -------------------------------------------------------

def square_end_half(w, m):
    """Smallest h >= 1 with w[m-2h:m] a square XX, |X| = h; 0 if none.

    Only squares ending at index m-1 are inspected: the check a search loop
    needs after appending one letter to a known square-free word.
    """
    for h in range(1, m // 2 + 1):
        ok = True
        for t in range(h):
            if w[m - h + t] != w[m - 2 * h + t]:
                ok = False
                break
        if ok:
            return h
    return 0


def has_square_incremental(w, n):
    """Square containment via suffix-anchored checks at every prefix length."""
    for m in range(2, n + 1):
        if square_end_half(w, m) != 0:
            return True
    return False


def first_square_scan(w, n):
    """Leftmost-start, then shortest, square; (-1, 0) if none. Early exit."""
    for s in range(n - 1):
        for h in range(1, (n - s) // 2 + 1):
            ok = True
            for t in range(h):
                if w[s + t] != w[s + h + t]:
                    ok = False
                    break
            if ok:
                return s, h
    return -1, 0


def first_square_naive(w, n):
    """Reference: enumerate every (start, half) pair, keep the minimum."""
    best_s = -1
    best_h = 0
    for s in range(n - 1):
        for h in range(1, (n - s) // 2 + 1):
            equal = True
            for t in range(h):
                if w[s + t] != w[s + h + t]:
                    equal = False
                    break
            if equal and best_s < 0:
                best_s = s
                best_h = h
    return best_s, best_h


# -- steadiness -------------------------------------------------------------

def unsteady_deletion_fast(w, n):
    """First 1-based deletion position whose reduction has a square, else 0.

    Requires w square-free: a square created by deleting index t must then
    straddle t, so only starts in [t-2h+1, t-1] need testing.
    """
    for p in range(1, n + 1):
        t = p - 1
        m = n - 1
        for h in range(1, m // 2 + 1):
            s_lo = t - 2 * h + 1
            if s_lo < 0:
                s_lo = 0
            s_hi = t - 1
            if s_hi > m - 2 * h:
                s_hi = m - 2 * h
            for s in range(s_lo, s_hi + 1):
                ok = True
                for u in range(h):
                    i1 = s + u
                    i2 = s + u + h
                    if i1 >= t:
                        i1 += 1
                    if i2 >= t:
                        i2 += 1
                    if w[i1] != w[i2]:
                        ok = False
                        break
                if ok:
                    return p
    return 0


def unsteady_deletion_naive(w, n):
    """Reference: materialize every reduction, run the full square scan."""
    r = np.empty(max(n - 1, 0), dtype=np.int64)
    for p in range(1, n + 1):
        j = 0
        for i in range(n):
            if i != p - 1:
                r[j] = w[i]
                j += 1
        s, h = first_square_naive(r, n - 1)
        if s >= 0:
            return p
    return 0


def steady_append_violation(w, m):
    """True if w[:m] is not steady, given that w[:m-1] is steady.

    Covers (a) a square ending at the new last letter and (b) a deletion of
    a non-final letter inside the last 2h+1 positions leaving a square of
    half-length h as the suffix; prefix steadiness excludes everything else.
    """
    if square_end_half(w, m) != 0:
        return True
    for h in range(1, (m - 1) // 2 + 1):
        base = m - 2 * h - 1
        for q in range(2 * h):
            ok = True
            for t in range(h):
                i1 = t
                if i1 >= q:
                    i1 += 1
                i2 = t + h
                if i2 >= q:
                    i2 += 1
                if w[base + i1] != w[base + i2]:
                    ok = False
                    break
            if ok:
                return True
    return False


def failure_suffix_class(w, m):
    """Smallest j whose length-(2j+1) suffix window reduces to a square of
    half-length j (the whole word ending in such a square also counts);
    0 if no suffix certificate exists."""
    for h in range(1, m // 2 + 1):
        if m >= 2 * h:
            ok = True
            for t in range(h):
                if w[m - 2 * h + t] != w[m - h + t]:
                    ok = False
                    break
            if ok:
                return h
        if m >= 2 * h + 1:
            base = m - 2 * h - 1
            for q in range(2 * h):
                ok = True
                for t in range(h):
                    i1 = t
                    if i1 >= q:
                        i1 += 1
                    i2 = t + h
                    if i2 >= q:
                        i2 += 1
                    if w[base + i1] != w[base + i2]:
                        ok = False
                        break
                if ok:
                    return h
    return 0


# -- exponents and separation -----------------------------------------------

def max_exponent_fast(w, n):
    """Max factor exponent as an unreduced (numerator, denominator) pair.

    For each period p, a run of r consecutive matches w[j] == w[j-p]
    certifies a factor of length r + p with period p. Baseline 1/1.
    """
    best_num = 1
    best_den = 1
    for p in range(1, n):
        r = 0
        for j in range(p, n):
            if w[j] == w[j - p]:
                r += 1
                if (r + p) * best_den > best_num * p:
                    best_num = r + p
                    best_den = p
            else:
                r = 0
    return best_num, best_den


def max_exponent_naive(w, n):
    """Reference: max |F|/p over all factors F and all periods p of F."""
    best_num = 1
    best_den = 1
    for s in range(n):
        for e in range(s + 1, n + 1):
            length = e - s
            for p in range(1, length + 1):
                valid = True
                for i in range(s, e - p):
                    if w[i] != w[i + p]:
                        valid = False
                        break
                if valid and length * best_den > best_num * p:
                    best_num = length
                    best_den = p
    return best_num, best_den


def exceeds_exponent_fast(w, n, num, den):
    """True iff some factor has exponent strictly greater than num/den."""
    for p in range(1, n):
        r = 0
        for j in range(p, n):
            if w[j] == w[j - p]:
                r += 1
                if (r + p) * den > num * p:
                    return True
            else:
                r = 0
    return False


def exceeds_exponent_naive(w, n, num, den):
    """Reference: factor/period enumeration with exact comparison."""
    for s in range(n):
        for e in range(s + 1, n + 1):
            length = e - s
            for p in range(1, length + 1):
                valid = True
                for i in range(s, e - p):
                    if w[i] != w[i + p]:
                        valid = False
                        break
                if valid and length * den > num * p:
                    return True
    return False


def separation_violation(w, n):
    """True iff some factor XYX has |Y| <= |X|, X nonempty (Y may be empty)."""
    for x_len in range(1, n // 2 + 1):
        for gap in range(0, x_len + 1):
            span = 2 * x_len + gap
            if span > n:
                break
            for i in range(n - span + 1):
                j = i + x_len + gap
                match = True
                for t in range(x_len):
                    if w[i + t] != w[j + t]:
                        match = False
                        break
                if match:
                    return True
    return False


def threshold_append_ok(w, d, num, den, runs_prev, runs_new):
    """Run-table update for appending w[d]; False if a factor ending at d
    would get exponent > num/den. Fills runs_new[p] for p in 1..d."""
    for p in range(1, d + 1):
        if w[d] == w[d - p]:
            if p <= d - 1:
                r = runs_prev[p] + 1
            else:
                r = 1
        else:
            r = 0
        runs_new[p] = r
        if r > 0 and (r + p) * den > num * p:
            return False
    return True


def extension_has_square(w, n, pos):
    """Squares of w[:n] containing index pos; assumes w minus that single
    index is square-free, so any square must cover pos."""
    for h in range(1, n // 2 + 1):
        s_lo = pos - 2 * h + 1
        if s_lo < 0:
            s_lo = 0
        s_hi = pos
        if s_hi > n - 2 * h:
            s_hi = n - 2 * h
        for s in range(s_lo, s_hi + 1):
            ok = True
            for t in range(h):
                if w[s + t] != w[s + h + t]:
                    ok = False
                    break
            if ok:
                return True
    return False


# -- cross-check sweeps -----------------------------------------------------

def cross_check_one(w, n):
    """0 if all fast/naive routes agree on w[:n], else a nonzero fault code."""
    s_f, h_f = first_square_scan(w, n)
    s_n, h_n = first_square_naive(w, n)
    if s_f != s_n or h_f != h_n:
        return 1
    sf_inc = not has_square_incremental(w, n)
    if sf_inc != (s_n < 0):
        return 2
    if sf_inc:
        if unsteady_deletion_fast(w, n) != unsteady_deletion_naive(w, n):
            return 3
    if n >= 1:
        nf, df = max_exponent_fast(w, n)
        nn, dn = max_exponent_naive(w, n)
        if nf * dn != nn * df:
            return 4
        if exceeds_exponent_fast(w, n, 7, 5) != exceeds_exponent_naive(w, n, 7, 5):
            return 5
        if exceeds_exponent_fast(w, n, 3, 2) != exceeds_exponent_naive(w, n, 3, 2):
            return 6
    return 0


def sweep_cross_checks(n, k):
    """Fast/naive disagreement count over all k**n words of length n."""
    w = np.zeros(n, dtype=np.int64)
    total = 1
    for _ in range(n):
        total *= k
    bad = 0
    for _ in range(total):
        if cross_check_one(w, n) != 0:
            bad += 1
        i = n - 1
        while i >= 0:
            w[i] += 1
            if w[i] < k:
                break
            w[i] = 0
            i -= 1
    return bad


def sweep_random_cross_checks(words, lengths):
    """Fast/naive disagreement count over a padded word corpus (rows)."""
    bad = 0
    for i in range(words.shape[0]):
        if cross_check_one(words[i], lengths[i]) != 0:
            bad += 1
    return bad


def sweep_implication_chain(n, k, num, den):
    """Violations of [no exponent > num/den => separation => steady] over
    all k**n words of length n."""
    w = np.zeros(n, dtype=np.int64)
    total = 1
    for _ in range(n):
        total *= k
    bad = 0
    for _ in range(total):
        sep_bad = separation_violation(w, n)
        if not exceeds_exponent_fast(w, n, num, den) and sep_bad:
            bad += 1
        if not sep_bad:
            s, _h = first_square_scan(w, n)
            if s >= 0 or unsteady_deletion_fast(w, n) != 0:
                bad += 1
        i = n - 1
        while i >= 0:
            w[i] += 1
            if w[i] < k:
                break
            w[i] = 0
            i -= 1
    return bad


def count_transversals_dfs(lists, sizes, n, budget, with_dj, out_c, out_f, out_dj):
    """Exhaustive DFS over steady transversal words of per-position lists.

    lists is an (n, max_size) letter matrix with per-row fill counts in
    sizes. out_c / out_f receive the steady and failure counts per length;
    out_dj[(length, j)] the failure classification when with_dj. Returns
    nodes expanded, or -1 if the budget ran out.
    """
    w = np.zeros(max(n, 1), dtype=np.int64)
    choice = np.zeros(max(n, 1), dtype=np.int64)
    out_c[0] = 1
    nodes = 0
    depth = 0
    if n == 0:
        return 0
    while depth >= 0:
        if choice[depth] >= sizes[depth]:
            depth -= 1
            continue
        x = lists[depth, choice[depth]]
        choice[depth] += 1
        nodes += 1
        if nodes > budget:
            return -1
        w[depth] = x
        if steady_append_violation(w, depth + 1):
            out_f[depth + 1] += 1
            if with_dj:
                out_dj[depth + 1, failure_suffix_class(w, depth + 1)] += 1
        else:
            out_c[depth + 1] += 1
            if depth + 1 < n:
                depth += 1
                choice[depth] = 0
    return nodes
