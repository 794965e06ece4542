"""Certification of cross-bifix-freeness and non-expandability.

check_set carries two interchangeable checkers: a naive quadratic scan
kept as the trusted oracle, and a prefix-trie scan for larger sets.
Both report identical violations.  is_non_expandable and
expansion_blocker together certify that a set cannot grow inside the
bifix-free words of its length, and max_set_search probes how large a
pairwise-compatible set can get at all (exact branch and bound at
small lengths).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .combinatorics import DEFAULT_ENUMERATION_CAP, enumerate_bifix_free
from .construction import cbfs
from .errors import LengthMismatchError, NoBlockerError
from .sets import WordSet
from .words import BinaryWord, Factor

__all__ = [
    "ConflictWitness",
    "VerificationReport",
    "check_set",
    "expansion_blocker",
    "is_non_expandable",
    "max_set_search",
]


@dataclass(frozen=True)
class ConflictWitness:
    """A shared factor: a strict prefix of word_a that is a strict suffix of word_b.

    word_a == word_b marks a self-violation (the word carries a border
    of its own).
    """

    word_a: BinaryWord
    word_b: BinaryWord
    factor: Factor

    def __post_init__(self) -> None:
        object.__setattr__(self, "word_a", BinaryWord(self.word_a))
        object.__setattr__(self, "word_b", BinaryWord(self.word_b))
        bits = self.factor.bits
        if len(bits) >= len(self.word_a) or len(bits) >= len(self.word_b):
            raise ValueError("a witness factor must be strictly shorter than both words")
        if not self.word_a.startswith(bits) or not self.word_b.endswith(bits):
            raise ValueError("factor must be a prefix of word_a and a suffix of word_b")

    def to_json_dict(self) -> dict:
        return {
            "a": str(self.word_a),
            "b": str(self.word_b),
            "factor": str(self.factor.bits),
        }


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check_set run.

    checked_pairs counts ordered word pairs for the naive method and
    suffix walks for the trie method.
    """

    method: str
    checked_pairs: int
    violations: tuple[ConflictWitness, ...]

    @property
    def set_ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "ok": self.set_ok,
            "method": self.method,
            "checked_pairs": self.checked_pairs,
            "violations": [v.to_json_dict() for v in self.violations],
        }


def _witness(word_a: str, word_b: str, bits: str) -> ConflictWitness:
    role = "bifix" if word_a == word_b else "cross_bifix"
    return ConflictWitness(BinaryWord(word_a), BinaryWord(word_b), Factor(bits, role))


def _check_naive(words: tuple[BinaryWord, ...], n: int) -> tuple[list[ConflictWitness], int]:
    violations = []
    for a in words:
        for b in words:
            for k in range(1, n):
                if a[:k] == b[n - k:]:
                    violations.append(_witness(a, b, a[:k]))
    return violations, len(words) ** 2


def _check_trie(words: tuple[BinaryWord, ...], n: int) -> tuple[list[ConflictWitness], int]:
    # Trie over all proper prefixes; the node reached by word[:d] lists
    # every word carrying that prefix under the None key.
    root: dict = {}
    for w in words:
        node = root
        for ch in w[:-1]:
            node = node.setdefault(ch, {})
            node.setdefault(None, []).append(w)
    violations = []
    probes = 0
    for b in words:
        for k in range(1, n):
            probes += 1
            tail = b[n - k:]
            node = root
            for ch in tail:
                node = node.get(ch)
                if node is None:
                    break
            else:
                for a in node[None]:
                    violations.append(_witness(a, b, tail))
    return violations, probes


def check_set(word_set: WordSet, method: str = "trie") -> VerificationReport:
    """Test pairwise cross-bifix-freeness of an equal-length word set.

    naive scans every ordered pair (a, b), self-pairs included, for a
    prefix of a matching a suffix of b.  trie inserts all proper
    prefixes into a prefix tree and walks every word's proper suffixes
    through it.  Both produce the same violations, sorted by
    (word_a, word_b, factor length); a word that is not itself
    bifix-free shows up as a self-violation.
    """
    if method not in ("naive", "trie"):
        raise ValueError(f"method must be 'naive' or 'trie', got {method!r}")
    if not len(word_set):
        raise ValueError("cannot check an empty set")
    if method == "naive":
        violations, checked = _check_naive(word_set.words, word_set.n)
    else:
        violations, checked = _check_trie(word_set.words, word_set.n)
    violations.sort(key=lambda v: (v.word_a, v.word_b, len(v.factor)))
    return VerificationReport(method=method, checked_pairs=checked, violations=tuple(violations))


def is_non_expandable(
    word_set: WordSet,
    universe_n: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> tuple[bool, BinaryWord | None]:
    """Whether no other bifix-free word of this length fits into the set.

    Exhausts every bifix-free candidate outside the set; each must share
    a factor with some member.  On failure returns the first compatible
    word in ascending text order, otherwise (True, None).
    """
    if universe_n != word_set.n:
        raise LengthMismatchError(f"set holds length {word_set.n}, universe asks {universe_n}")
    n = universe_n
    universe = enumerate_bifix_free(n, cap=cap)
    prefixes = {w[:k] for w in word_set for k in range(1, n)}
    suffixes = {w[n - k:] for w in word_set for k in range(1, n)}
    members = word_set.members
    for gamma in universe:
        if gamma in members:
            continue
        blocked = any(
            gamma[:k] in suffixes or gamma[n - k:] in prefixes for k in range(1, n)
        )
        if not blocked:
            return False, gamma
    return True, None


def expansion_blocker(gamma: str, word_set: WordSet) -> ConflictWitness:
    """A witness pairing gamma with a member it shares a factor with.

    Members are scanned rise-step-first (1 sorts before 0) and factors
    shortest first, so reports are reproducible.  NoBlockerError means
    gamma is compatible with every member, i.e. the set was expandable.
    """
    gamma = BinaryWord(gamma)
    n = len(gamma)
    if n != word_set.n:
        raise LengthMismatchError(f"candidate has length {n}, set holds {word_set.n}")
    if gamma in word_set:
        raise ValueError(f"{gamma} is already a member")
    for member in sorted(word_set.words, reverse=True):
        for k in range(1, n):
            if gamma[:k] == member[n - k:]:
                return _witness(gamma, member, gamma[:k])
            if member[:k] == gamma[n - k:]:
                return _witness(member, gamma, member[:k])
    raise NoBlockerError(f"{gamma} shares no factor with any member")


def _words_conflict(a: str, b: str, n: int) -> bool:
    return any(a[:k] == b[n - k:] or b[:k] == a[n - k:] for k in range(1, n))


def _cover_order(cand: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy clique cover of the candidate subgraph.

    Returns the vertices grouped clique by clique together with their
    1-based clique numbers.  No independent set inside cand can take
    more than one vertex per clique, so the clique number doubles as an
    upper bound for the tail of the branching loop.
    """
    cliques: list[list[int]] = []
    commons: list[int] = []
    m = cand
    while m:
        vbit = m & -m
        m ^= vbit
        v = vbit.bit_length() - 1
        for idx, common in enumerate(commons):
            if common & vbit:
                commons[idx] = common & adj[v]
                cliques[idx].append(v)
                break
        else:
            commons.append(adj[v])
            cliques.append([v])
    order: list[int] = []
    numbers: list[int] = []
    for number, members in enumerate(cliques, 1):
        for v in members:
            order.append(v)
            numbers.append(number)
    return order, numbers


def max_set_search(
    n: int,
    time_limit: float | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> tuple[WordSet, bool]:
    """Search for a maximum cross-bifix-free subset of all bifix-free words.

    Maximum independent set over the pairwise conflict graph, by branch
    and bound with a greedy clique-cover bound and deterministic vertex
    order (ascending text).  Runs to a proven optimum when time_limit
    is None; otherwise the best set found by the deadline comes back
    flagged non-optimal.  Returns (word_set, proven_optimal).
    """
    if n < 2:
        raise ValueError("the search needs n >= 2")
    words = enumerate_bifix_free(n, cap=cap).words
    v_count = len(words)
    adj = [0] * v_count
    for i in range(v_count):
        wi = words[i]
        for j in range(i + 1, v_count):
            if _words_conflict(wi, words[j], n):
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    best_mask = 0
    for v in range(v_count):
        if not adj[v] & best_mask:
            best_mask |= 1 << v
    if n >= 3:
        # The closed-form construction is a valid incumbent and usually a
        # far stronger starting bound than the greedy sweep.
        index = {w: i for i, w in enumerate(words)}
        built_mask = 0
        for w in cbfs(n):
            built_mask |= 1 << index[w]
        if built_mask.bit_count() > best_mask.bit_count():
            best_mask = built_mask
    best_size = best_mask.bit_count()

    deadline = None if time_limit is None else time.perf_counter() + float(time_limit)
    timed_out = False

    def expand(cand: int, size: int, mask: int) -> None:
        nonlocal best_size, best_mask, timed_out
        if deadline is not None and time.perf_counter() > deadline:
            timed_out = True
            return
        order, numbers = _cover_order(cand, adj)
        remaining = cand
        for i in range(len(order) - 1, -1, -1):
            if size + numbers[i] <= best_size:
                return
            v = order[i]
            vbit = 1 << v
            remaining ^= vbit
            picked_size = size + 1
            picked_mask = mask | vbit
            if picked_size > best_size:
                best_size, best_mask = picked_size, picked_mask
            narrowed = remaining & ~adj[v]
            if narrowed:
                expand(narrowed, picked_size, picked_mask)
                if timed_out:
                    return

    expand((1 << v_count) - 1, 0, 0)

    chosen = []
    m = best_mask
    while m:
        vbit = m & -m
        m ^= vbit
        chosen.append(words[vbit.bit_length() - 1])
    return WordSet(n=n, words=tuple(chosen), provenance="search"), not timed_out
