"""Binary words, lattice paths, and the border predicates built on them.

A binary word is written most significant symbol first, so "110" means
1, then 1, then 0.  Every word doubles as a lattice path: each 1 is a
rise step (1, 1) and each 0 a fall step (1, -1).  A bifix (border) of a
word is a non-empty factor that is both a strict prefix and a strict
suffix.  Words without bifixes, and pairs of words sharing no
prefix/suffix factor, are the raw material of the synchronization code
sets assembled in the construction module.

Everything here is a pure function over immutable values and is safe to
call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .errors import LengthMismatchError

__all__ = [
    "BinaryWord",
    "Factor",
    "LatticePath",
    "Step",
    "bifixes",
    "border_lengths",
    "cross_bifixes",
    "is_bifix_free",
    "path_to_word",
    "word_to_path",
]


class Step(IntEnum):
    """A lattice step: RISE is (1, 1) and encodes 1, FALL is (1, -1) and encodes 0."""

    RISE = 1
    FALL = -1


_STEP_TO_CHAR = {Step.RISE: "1", Step.FALL: "0"}
_CHAR_TO_STEP = {"1": Step.RISE, "0": Step.FALL}
_COMPLEMENT_TABLE = str.maketrans("01", "10")


class BinaryWord(str):
    """A non-empty string over {0, 1}.

    Subclasses str, so comparison, hashing and slicing behave exactly
    like the text form; slices come back as plain strings.
    """

    __slots__ = ()

    def __new__(cls, text: str) -> BinaryWord:
        word = super().__new__(cls, text)
        if not word:
            raise ValueError("a binary word needs at least one symbol")
        if word.strip("01"):
            raise ValueError(f"binary word may contain only '0' and '1', got {str(word)!r}")
        return word

    def symbol_count(self, symbol: str) -> int:
        """Occurrences of one symbol, '0' or '1'."""
        if symbol not in ("0", "1"):
            raise ValueError(f"symbol must be '0' or '1', got {symbol!r}")
        return self.count(symbol)

    @property
    def end_height(self) -> int:
        """Final ordinate of the word's lattice path: ones minus zeros."""
        return 2 * self.count("1") - len(self)

    def complement(self) -> BinaryWord:
        """Swap 0s and 1s, i.e. mirror the path across the axis."""
        return BinaryWord(self.translate(_COMPLEMENT_TABLE))

    def to_path(self) -> LatticePath:
        return LatticePath(tuple(_CHAR_TO_STEP[c] for c in self))


@dataclass(frozen=True)
class LatticePath:
    """A sequence of rise and fall steps starting at the origin.

    The end height is derived from the steps and always shares the
    parity of the step count.
    """

    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(Step(s) for s in self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def end_height(self) -> int:
        return int(sum(self.steps))

    def heights(self) -> tuple[int, ...]:
        """Ordinate after each step."""
        out: list[int] = []
        h = 0
        for step in self.steps:
            h += int(step)
            out.append(h)
        return tuple(out)

    @property
    def text(self) -> str:
        """The path spelled as a 0/1 string, empty for the empty path."""
        return "".join(_STEP_TO_CHAR[s] for s in self.steps)

    def to_word(self) -> BinaryWord:
        if not self.steps:
            raise ValueError("the empty path has no word form")
        return BinaryWord(self.text)


_FACTOR_ROLES = frozenset({"prefix", "suffix", "bifix", "cross_bifix"})


@dataclass(frozen=True)
class Factor:
    """A non-empty strict factor of some word, tagged with how it occurs."""

    bits: BinaryWord
    role: str = "cross_bifix"

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", BinaryWord(self.bits))
        if self.role not in _FACTOR_ROLES:
            raise ValueError(f"unknown factor role {self.role!r}")

    def __len__(self) -> int:
        return len(self.bits)


def border_lengths(word: str) -> list[int]:
    """Lengths of all strict non-empty borders of word, increasing.

    One failure-function scan gives the longest border in O(n); the
    border-of-border chain then yields all the others.
    """
    n = len(word)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and word[i] != word[k]:
            k = fail[k - 1]
        if word[i] == word[k]:
            k += 1
        fail[i] = k
    chain: list[int] = []
    k = fail[n - 1] if n else 0
    while k:
        chain.append(k)
        k = fail[k - 1]
    chain.reverse()
    return chain


def is_bifix_free(word: str) -> bool:
    """True iff no strict non-empty prefix of word is also a suffix.

    Single-symbol words are bifix-free (there is no strict non-empty
    factor to collide).  Accepts any 0/1 string, not just BinaryWord.
    """
    n = len(word)
    if n == 1:
        return True
    if word[0] == word[-1]:
        return False
    return not border_lengths(word)


def bifixes(word: str) -> list[Factor]:
    """All strict non-empty borders of word, shortest first.

    Empty exactly when is_bifix_free(word) holds.
    """
    return [Factor(word[:k], "bifix") for k in border_lengths(word)]


def cross_bifixes(word: str, other: str) -> list[Factor]:
    """Factors that are a prefix of one word and a suffix of the other.

    Collects both directions for every factor length; a factor matching
    in both directions with the same text appears once.  For word ==
    other this reduces to bifixes(word).  Unequal lengths raise
    LengthMismatchError.
    """
    n = len(word)
    if n != len(other):
        raise LengthMismatchError(f"cannot cross-check lengths {n} and {len(other)}")
    if word == other:
        return bifixes(word)
    found: list[Factor] = []
    for k in range(1, n):
        head_a = word[:k]
        head_b = other[:k]
        hit_a = head_a == other[n - k:]
        hit_b = head_b == word[n - k:]
        if hit_a:
            found.append(Factor(head_a))
        if hit_b and (not hit_a or head_b != head_a):
            found.append(Factor(head_b))
    return found


def word_to_path(word: str) -> LatticePath:
    """One rise step per 1 and one fall step per 0, in written order."""
    return BinaryWord(word).to_path()


def path_to_word(path: LatticePath) -> BinaryWord:
    """Inverse of word_to_path; needs at least one step."""
    return path.to_word()
