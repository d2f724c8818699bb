"""Square detection, fractional-power exponents, and the separation property.

Exponents are exact `fractions.Fraction` values; no floating point is used
anywhere, so threshold comparisons like 7/5 are bit-exact. Every predicate
has a `*_naive` reference route backed by brute-force enumeration; the
default routes use suffix-anchored and run-table kernels.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from . import kernels
from .words import word_array


class SquareOccurrence(NamedTuple):
    """A factor XX at 1-based `start` with |X| = `half_length`."""

    start: int
    half_length: int


def find_square(word: Sequence[int]) -> Optional[SquareOccurrence]:
    """Leftmost-start, then shortest, square factor; None if square-free."""
    s, h = kernels.first_square_scan(word_array(word), len(word))
    return None if s < 0 else SquareOccurrence(int(s) + 1, int(h))


def find_square_naive(word: Sequence[int]) -> Optional[SquareOccurrence]:
    """Reference: full enumeration of (start, half) pairs."""
    s, h = kernels.first_square_naive(word_array(word), len(word))
    return None if s < 0 else SquareOccurrence(int(s) + 1, int(h))


def is_square_free(word: Sequence[int]) -> bool:
    """Square-freeness via the incremental suffix-anchored check."""
    return not kernels.has_square_incremental(word_array(word), len(word))


def is_square_free_naive(word: Sequence[int]) -> bool:
    return find_square_naive(word) is None


def max_exponent(word: Sequence[int]) -> Fraction:
    """Largest |F|/p over factors F with period p, as an exact rational."""
    if len(word) == 0:
        raise ValueError("max_exponent is undefined for the empty word")
    num, den = kernels.max_exponent_fast(word_array(word), len(word))
    return Fraction(int(num), int(den))


def max_exponent_naive(word: Sequence[int]) -> Fraction:
    """Reference: enumerate all factors and all their periods."""
    if len(word) == 0:
        raise ValueError("max_exponent is undefined for the empty word")
    num, den = kernels.max_exponent_naive(word_array(word), len(word))
    return Fraction(int(num), int(den))


def has_exponent_above(word: Sequence[int], threshold: Fraction) -> bool:
    """True iff some factor has exponent strictly greater than threshold."""
    threshold = Fraction(threshold)
    if threshold < 1:
        raise ValueError("threshold must be at least 1")
    return bool(
        kernels.exceeds_exponent_fast(
            word_array(word), len(word), threshold.numerator, threshold.denominator
        )
    )


def has_exponent_above_naive(word: Sequence[int], threshold: Fraction) -> bool:
    threshold = Fraction(threshold)
    if threshold < 1:
        raise ValueError("threshold must be at least 1")
    return bool(
        kernels.exceeds_exponent_naive(
            word_array(word), len(word), threshold.numerator, threshold.denominator
        )
    )


def has_separation_property(word: Sequence[int]) -> bool:
    """True iff every factor XYX satisfies |Y| > |X| (no short returns)."""
    return not kernels.separation_violation(word_array(word), len(word))


def parse_threshold(text: str) -> Fraction:
    """Parse a "num/den" (or integer) exponent threshold."""
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a valid threshold: {text!r}") from None
    if value < 1:
        raise ValueError(f"threshold must be at least 1: {text!r}")
    return value
