"""Catalan numbers, Dyck paths, and exhaustive generation of bifix-free words.

Counting is exact at any size (Python integers throughout).  The
exhaustive enumerators walk all 2**n candidates and are therefore
guarded by a cap on n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapExceededError, ImpossibleHeightError, OddLengthError
from .sets import WordSet
from .words import LatticePath, Step, is_bifix_free

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "CountTableEntry",
    "DyckPath",
    "bifix_free_count",
    "catalan",
    "count_table",
    "dyck_paths",
    "enumerate_bifix_free",
    "enumerate_rise_fall",
]

DEFAULT_ENUMERATION_CAP = 24
"""Largest n the exhaustive enumerators accept unless the caller overrides it."""


def catalan(m: int) -> int:
    """The mth Catalan number, binomial(2m, m) / (m + 1), exactly."""
    if m < 0:
        raise ValueError("catalan is defined for m >= 0")
    return math.comb(2 * m, m) // (m + 1)


@dataclass(frozen=True)
class DyckPath(LatticePath):
    """A lattice path that never dips below the axis and ends on it.

    The step count is even; the empty path qualifies.
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.steps) % 2:
            raise OddLengthError("a Dyck path has an even number of steps")
        height = 0
        for step in self.steps:
            height += int(step)
            if height < 0:
                raise ValueError("Dyck path dips below the axis")
        if height != 0:
            raise ValueError("Dyck path must end on the axis")


def dyck_paths(length: int) -> list[DyckPath]:
    """All Dyck paths with the given number of steps.

    Ordered lexicographically with RISE before FALL, so the fully
    nested path comes first and the zigzag last.  The count equals
    catalan(length / 2); odd lengths raise OddLengthError.
    """
    if length < 0:
        raise ValueError("path length must be non-negative")
    if length % 2:
        raise OddLengthError(f"Dyck paths have even length, got {length}")
    out: list[DyckPath] = []

    def extend(prefix: tuple[Step, ...], rises: int, falls: int, height: int) -> None:
        if not rises and not falls:
            out.append(DyckPath(prefix))
            return
        if rises:
            extend(prefix + (Step.RISE,), rises - 1, falls, height + 1)
        if falls and height > 0:
            extend(prefix + (Step.FALL,), rises, falls - 1, height - 1)

    half = length // 2
    extend((), half, half, 0)
    return out


@dataclass(frozen=True)
class CountTableEntry:
    """One (alphabet size, length, count) row of a bifix-free counting table."""

    q: int
    n: int
    count: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError("alphabet size must be at least 2")
        if self.n < 1:
            raise ValueError("length must be at least 1")
        if not 0 <= self.count <= self.q**self.n:
            raise ValueError("count must lie between 0 and q**n")


def bifix_free_count(q: int, n: int) -> int:
    """Number of bifix-free words of length n over a q-letter alphabet.

    Bottom-up recurrence: one letter gives q words, an odd length
    multiplies the previous count by q, and an even length 2k
    additionally subtracts the count at k.
    """
    if q < 2:
        raise ValueError("alphabet size must be at least 2")
    if n < 1:
        raise ValueError("length must be at least 1")
    counts = [0] * (n + 1)
    counts[1] = q
    for k in range(2, n + 1):
        if k % 2:
            counts[k] = q * counts[k - 1]
        else:
            counts[k] = q * counts[k - 1] - counts[k // 2]
    return counts[n]


def count_table(q: int, n_min: int, n_max: int) -> list[CountTableEntry]:
    """Counting-table rows for n_min..n_max at one alphabet size."""
    if n_min < 1 or n_min > n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    return [CountTableEntry(q, n, bifix_free_count(q, n)) for n in range(n_min, n_max + 1)]


def enumerate_bifix_free(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> WordSet:
    """Every binary bifix-free word of length n, in ascending text order.

    Walks all 2**n candidates, so n above cap raises CapExceededError.
    The cardinality always equals bifix_free_count(2, n).
    """
    if n < 1:
        raise ValueError("length must be at least 1")
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the enumeration cap {cap}")
    fmt = f"0{n}b"
    words = [w for i in range(1 << n) if is_bifix_free(w := format(i, fmt))]
    return WordSet(n=n, words=tuple(words), provenance="enumeration")


def enumerate_rise_fall(
    n: int,
    height: int | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> WordSet:
    """Bifix-free words of length n that start with 1 and end with 0.

    As paths these open with a rise and close with a fall.  height,
    when given, keeps only words whose path ends at that ordinate; it
    must satisfy -n < height < n and share the parity of n, otherwise
    ImpossibleHeightError.  The complement images of these words are
    exactly the remaining bifix-free words of length n (n >= 2).
    """
    if height is not None:
        if not -n < height < n or (height - n) % 2:
            raise ImpossibleHeightError(f"no length-{n} path ends at height {height}")
    base = enumerate_bifix_free(n, cap=cap)
    picked = [
        w
        for w in base
        if w[0] == "1" and w[-1] == "0" and (height is None or w.end_height == height)
    ]
    return WordSet(n=n, words=tuple(picked), provenance="enumeration")
