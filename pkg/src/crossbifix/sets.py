"""Word collections with canonical ordering and provenance."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import MixedLengthsError
from .words import BinaryWord

PROVENANCES = (
    "cbfs_odd",
    "cbfs_even_m_even",
    "cbfs_even_m_odd",
    "user",
    "enumeration",
    "exclusion",
    "search",
)


@dataclass(frozen=True)
class WordSet:
    """A deduplicated set of equal-length words kept in ascending text order.

    Construction normalizes the words tuple: every entry becomes a
    BinaryWord, duplicates are dropped, and the rest is sorted.
    provenance names the construction rule (or user input) behind the
    set.  An empty set is allowed only with an explicit n.
    """

    n: int
    words: tuple[BinaryWord, ...] = ()
    provenance: str = "user"

    def __post_init__(self) -> None:
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.n < 1:
            raise ValueError("word length must be at least 1")
        normalized = tuple(sorted({BinaryWord(w) for w in self.words}))
        lengths = {len(w) for w in normalized}
        if len(lengths) > 1:
            raise MixedLengthsError(f"one set holds words of lengths {sorted(lengths)}")
        if lengths and lengths != {self.n}:
            raise ValueError(f"words have length {lengths.pop()}, expected {self.n}")
        object.__setattr__(self, "words", normalized)

    @classmethod
    def from_words(
        cls,
        words: Iterable[str],
        provenance: str = "user",
        n: int | None = None,
    ) -> WordSet:
        """Build a set from 0/1 strings, inferring the length unless given."""
        collected = tuple(words)
        if n is None:
            if not collected:
                raise ValueError("cannot infer a length from an empty collection")
            n = len(collected[0])
        return cls(n=n, words=collected, provenance=provenance)

    @cached_property
    def members(self) -> frozenset[str]:
        """Hash-set view for O(1) membership tests."""
        return frozenset(self.words)

    def __iter__(self) -> Iterator[BinaryWord]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self.members

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "provenance": self.provenance,
            "cardinality": len(self.words),
            "words": [str(w) for w in self.words],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> WordSet:
        out = cls(
            n=int(payload["n"]),
            words=tuple(payload["words"]),
            provenance=payload["provenance"],
        )
        declared = int(payload.get("cardinality", len(out.words)))
        if declared != len(out.words):
            raise ValueError(f"payload declares {declared} words but carries {len(out.words)}")
        return out
