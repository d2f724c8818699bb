"""Word properties built on deletions and insertions.

steady      square-free, and still square-free after deleting any one letter
bifurcate   square-free, with a square-free insertion at every position
extremal    square-free, with no square-free insertion anywhere
irreducible square-free, and every non-trivial deletion creates a square

All predicates are invariant under letter bijections. Witness search order
is positions ascending, letters ascending, so witnesses are deterministic.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from . import kernels
from .words import Word, extend_at, normalize_alphabet, reduce_at, word_array


class PositionWitness(NamedTuple):
    """A square-free extension: word with `letter` inserted at `position`."""

    position: int
    letter: int
    extended: Word


class ReductionWitness(NamedTuple):
    """A failing reduction: deleting 1-based `position` leaves `reduced`."""

    position: int
    reduced: Word


def is_steady(word: Sequence[int]) -> bool:
    """Square-free and square-free after every single-letter deletion."""
    arr = word_array(word)
    n = len(word)
    if kernels.has_square_incremental(arr, n):
        return False
    return kernels.unsteady_deletion_fast(arr, n) == 0


def is_steady_naive(word: Sequence[int]) -> bool:
    """Reference route: full square rescan of the word and each reduction."""
    arr = word_array(word)
    n = len(word)
    s, _ = kernels.first_square_naive(arr, n)
    if s >= 0:
        return False
    return kernels.unsteady_deletion_naive(arr, n) == 0


def first_unsteady_reduction(word: Sequence[int]) -> Optional[ReductionWitness]:
    """The first deletion whose result has a square, or None if steady.

    For a word that is itself not square-free the witness is position 0
    with the word unchanged (no deletion needed to exhibit a square).
    """
    arr = word_array(word)
    n = len(word)
    if kernels.has_square_incremental(arr, n):
        return ReductionWitness(0, tuple(word))
    p = kernels.unsteady_deletion_fast(arr, n)
    if p == 0:
        return None
    return ReductionWitness(int(p), reduce_at(tuple(word), int(p)))


def _require_square_free_over(word, alphabet):
    alphabet = normalize_alphabet(alphabet)
    if any(a not in alphabet for a in word):
        raise ValueError("word uses letters outside the alphabet")
    arr = word_array(word)
    if kernels.has_square_incremental(arr, len(word)):
        raise ValueError("word must be square-free")
    return alphabet


def _extension_squarefree(word: Sequence[int], i: int, x: int) -> bool:
    ext = np.empty(len(word) + 1, dtype=np.int64)
    ext[:i] = word[:i]
    ext[i] = x
    ext[i + 1:] = word[i:]
    return not kernels.extension_has_square(ext, len(word) + 1, i)


def bifurcate_witnesses(
    word: Sequence[int], alphabet: Iterable[int]
) -> Optional[list]:
    """One square-free extension per position, or None if some position
    admits none. Precondition: word square-free over the alphabet."""
    alphabet = _require_square_free_over(word, alphabet)
    word = tuple(word)
    out = []
    for i in range(len(word) + 1):
        for x in alphabet:
            if _extension_squarefree(word, i, x):
                out.append(PositionWitness(i, x, extend_at(word, i, x)))
                break
        else:
            return None
    return out


def is_bifurcate(word: Sequence[int], alphabet: Iterable[int]) -> bool:
    """At least one square-free extension at every position 0..n."""
    return bifurcate_witnesses(word, alphabet) is not None


def extremal_counterexample(
    word: Sequence[int], alphabet: Iterable[int]
) -> Optional[PositionWitness]:
    """A square-free extension if one exists (so the word is not extremal)."""
    alphabet = _require_square_free_over(word, alphabet)
    word = tuple(word)
    for i in range(len(word) + 1):
        for x in alphabet:
            if _extension_squarefree(word, i, x):
                return PositionWitness(i, x, extend_at(word, i, x))
    return None


def is_extremal(word: Sequence[int], alphabet: Iterable[int]) -> bool:
    """Square-free with no square-free extension at any position."""
    return extremal_counterexample(word, alphabet) is None


def is_irreducible(word: Sequence[int]) -> bool:
    """Square-free, and deleting any non-boundary letter creates a square.

    Vacuously true for lengths 0..2, which have no non-trivial reductions.
    """
    word = tuple(word)
    arr = word_array(word)
    n = len(word)
    if kernels.has_square_incremental(arr, n):
        return False
    for p in range(2, n):
        red = word_array(reduce_at(word, p))
        if not kernels.has_square_incremental(red, n - 1):
            return False
    return True


def steady_insertion_letter(
    word: Sequence[int], position: int, alphabet: Optional[Iterable[int]] = None
) -> int:
    """A letter whose insertion at `position` keeps a steady word square-free.

    For length >= 4 the letter is taken from the word itself by a fixed
    recipe (prepend the second letter, append the second-to-last, insert the
    third / third-to-last next to the ends, and insert w[j+2] in the middle);
    the result is provably square-free for every steady word. Shorter steady
    words fall back to trying alphabet letters in ascending order.
    """
    word = tuple(word)
    n = len(word)
    if not 0 <= position <= n:
        raise ValueError(f"position {position} out of range")
    if not is_steady(word):
        raise ValueError("word must be steady")
    if n >= 4:
        if position == 0:
            return word[1]
        if position == 1:
            return word[2]
        if position == n - 1:
            return word[n - 3]
        if position == n:
            return word[n - 2]
        return word[position + 1]
    if alphabet is None:
        alphabet = range(max(3, len(set(word))))
    alphabet = normalize_alphabet(alphabet)
    for x in alphabet:
        if _extension_squarefree(word, position, x):
            return x
    raise ValueError("no square-free insertion found (alphabet too small)")
