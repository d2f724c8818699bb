"""Words, letters, alphabets, and the basic editing operations.

A word is an immutable tuple of non-negative ints (letters). Letters are
dense 0-based indices; a symbol table maps them to text, defaulting to
"123456789abc...". The empty tuple is a legal word.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

Word = tuple  # tuple[int, ...]

DEFAULT_SYMBOLS = "123456789abcdefghijklmnopqrstuvwxyz"


def parse_word(text: str, symbols: str = DEFAULT_SYMBOLS) -> Word:
    """Decode a text word, one symbol per letter, to a tuple of letter indices."""
    try:
        return tuple(symbols.index(ch) for ch in text)
    except ValueError:
        raise ValueError(f"symbol not in table {symbols!r}: {text!r}") from None


def render_word(word: Sequence[int], symbols: str = DEFAULT_SYMBOLS) -> str:
    """Encode a word as text using the symbol table."""
    if any(a >= len(symbols) or a < 0 for a in word):
        raise ValueError(f"letter out of range for symbol table of size {len(symbols)}")
    return "".join(symbols[a] for a in word)


def normalize_alphabet(letters: Iterable[int]) -> tuple:
    """Sorted tuple of distinct letters; rejects empty or invalid input."""
    out = tuple(sorted(set(letters)))
    if not out:
        raise ValueError("alphabet must be nonempty")
    if any(not isinstance(a, (int, np.integer)) or a < 0 for a in out):
        raise ValueError("letters must be non-negative ints")
    return out


def alphabet_of_size(k: int) -> tuple:
    """The dense alphabet {0, 1, ..., k-1}."""
    if k < 1:
        raise ValueError("alphabet size must be >= 1")
    return tuple(range(k))


def word_array(word: Sequence[int]) -> np.ndarray:
    """Word as an int64 numpy array (the kernel-boundary representation)."""
    return np.asarray(word, dtype=np.int64)


def prefix(word: Word, i: int) -> Word:
    """First i letters of the word."""
    if not 0 <= i <= len(word):
        raise ValueError(f"prefix length {i} out of range for word of length {len(word)}")
    return tuple(word[:i])


def suffix(word: Word, i: int) -> Word:
    """Last i letters of the word."""
    if not 0 <= i <= len(word):
        raise ValueError(f"suffix length {i} out of range for word of length {len(word)}")
    return tuple(word[len(word) - i:])


def extend_at(word: Word, i: int, letter: int) -> Word:
    """Insert a letter between the length-i prefix and the rest of the word."""
    if not 0 <= i <= len(word):
        raise ValueError(f"extension position {i} out of range for word of length {len(word)}")
    return tuple(word[:i]) + (letter,) + tuple(word[i:])


def reduce_at(word: Word, p: int) -> Word:
    """Delete the letter at 1-based index p (inverse of extend_at(word, p-1, x))."""
    if len(word) == 0:
        raise ValueError("cannot reduce the empty word")
    if not 1 <= p <= len(word):
        raise ValueError(f"reduction index {p} out of range for word of length {len(word)}")
    return tuple(word[: p - 1]) + tuple(word[p:])


def reverse(word: Word) -> Word:
    return tuple(reversed(word))


def canonicalize(word: Sequence[int]) -> Word:
    """Rename letters by order of first occurrence (first distinct letter -> 0).

    The result is the orbit representative of the word under letter
    permutations; a word is canonical iff canonicalize(word) == word.
    """
    mapping = {}
    out = []
    for a in word:
        if a not in mapping:
            mapping[a] = len(mapping)
        out.append(mapping[a])
    return tuple(out)
