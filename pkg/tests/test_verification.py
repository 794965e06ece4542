"""Set checkers, non-expandability certificates, and the maximum-set search."""

from __future__ import annotations

import itertools
import random

import pytest

from crossbifix import (
    CapExceededError,
    LengthMismatchError,
    NoBlockerError,
    WordSet,
    cbfs,
    cbfs_cardinality,
    check_set,
    enumerate_bifix_free,
    expansion_blocker,
    is_non_expandable,
    max_set_search,
)

# maximum compatible-set sizes confirmed against an independent
# max-clique solver on the complement graph (see test_matches_independent_solver)
MAX_SET_SIZES = {2: 1, 3: 1, 4: 1, 5: 2, 6: 3, 7: 5, 8: 8, 9: 14, 10: 24}


def naive_conflict(a: str, b: str) -> bool:
    n = len(a)
    return any(a[:k] == b[n - k :] or b[:k] == a[n - k :] for k in range(1, n))


class TestCheckSet:
    def test_constructed_sets_are_clean(self):
        for n in (3, 5, 8, 9, 12):
            report = check_set(cbfs(n))
            assert report.set_ok
            assert report.violations == ()

    def test_known_bad_pair(self):
        bad = WordSet.from_words(["111001100", "110011010"])
        for method in ("naive", "trie"):
            report = check_set(bad, method=method)
            assert not report.set_ok
            assert len(report.violations) == 1
            v = report.violations[0]
            assert str(v.word_a) == "110011010"
            assert str(v.word_b) == "111001100"
            assert str(v.factor.bits) == "1100"
            assert v.factor.role == "cross_bifix"

    def test_self_violation_for_bordered_word(self):
        report = check_set(WordSet.from_words(["1001"]))
        assert not report.set_ok
        v = report.violations[0]
        assert v.word_a == v.word_b == "1001"
        assert str(v.factor.bits) == "1"
        assert v.factor.role == "bifix"

    def test_singleton_clean(self):
        assert check_set(WordSet.from_words(["10"])).set_ok

    def test_length_one_words_never_conflict(self):
        report = check_set(WordSet.from_words(["0", "1"]))
        assert report.set_ok

    def test_method_validation(self):
        with pytest.raises(ValueError):
            check_set(cbfs(5), method="fast")
        with pytest.raises(ValueError):
            check_set(WordSet(n=3))

    def test_checked_pairs(self):
        assert check_set(cbfs(7), method="naive").checked_pairs == 25
        assert check_set(cbfs(7), method="trie").checked_pairs == 5 * 6

    def test_methods_agree_on_random_sets(self):
        rng = random.Random(20260822)
        for n in range(2, 13):
            for _ in range(100):
                size = rng.randint(1, 12)
                words = {format(rng.getrandbits(n), f"0{n}b") for _ in range(size)}
                word_set = WordSet.from_words(words, n=n)
                naive = check_set(word_set, method="naive")
                trie = check_set(word_set, method="trie")
                assert naive.set_ok == trie.set_ok
                assert naive.violations == trie.violations

    def test_violations_match_pairwise_oracle(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(2, 8)
            words = sorted({format(rng.getrandbits(n), f"0{n}b") for _ in range(6)})
            word_set = WordSet.from_words(words, n=n)
            report = check_set(word_set)
            expected = set()
            for a, b in itertools.product(words, repeat=2):
                for k in range(1, n):
                    if a[:k] == b[n - k :]:
                        expected.add((a, b, a[:k]))
            got = {(str(v.word_a), str(v.word_b), str(v.factor.bits)) for v in report.violations}
            assert got == expected


class TestNonExpandable:
    def test_small_constructed_sets(self):
        for n in (3, 4, 7, 9):
            verdict, gamma = is_non_expandable(cbfs(n), n)
            assert verdict and gamma is None

    def test_removing_the_first_word_makes_room(self):
        full = cbfs(7)
        removed = full.words[0]
        assert removed == "1101010"
        reduced = WordSet.from_words([w for w in full if w != removed], n=7)
        verdict, gamma = is_non_expandable(reduced, 7)
        assert not verdict
        assert gamma == removed

    def test_universe_length_must_match(self):
        with pytest.raises(LengthMismatchError):
            is_non_expandable(cbfs(5), 6)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            is_non_expandable(cbfs(6), 6, cap=5)

    def test_non_maximal_user_set(self):
        word_set = WordSet.from_words(["11100"])
        verdict, gamma = is_non_expandable(word_set, 5)
        assert not verdict
        # first compatible bifix-free word in text order
        assert gamma == min(
            w
            for w in enumerate_bifix_free(5)
            if w != "11100" and not naive_conflict(w, "11100")
        )


class TestExpansionBlocker:
    def test_short_example(self):
        witness = expansion_blocker("100", cbfs(3))
        assert (str(witness.word_a), str(witness.word_b)) == ("100", "110")
        assert str(witness.factor.bits) == "10"

    def test_rise_first_scan_order(self):
        witness = expansion_blocker("10000", cbfs(5))
        assert str(witness.word_b) == "11100"
        assert str(witness.factor.bits) == "100"

    def test_every_excluded_word_is_blocked(self):
        for n in (5, 8, 10):
            built = cbfs(n)
            for gamma in enumerate_bifix_free(n):
                if gamma in built:
                    continue
                witness = expansion_blocker(gamma, built)
                assert gamma in (witness.word_a, witness.word_b)
                other = witness.word_b if witness.word_a == gamma else witness.word_a
                assert other in built

    def test_member_rejected(self):
        with pytest.raises(ValueError):
            expansion_blocker("110", cbfs(3))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            expansion_blocker("1100", cbfs(3))

    def test_no_blocker(self):
        lonely = WordSet.from_words(["11010"])
        with pytest.raises(NoBlockerError):
            expansion_blocker("11100", lonely)


class TestMaxSetSearch:
    def test_known_sizes(self):
        for n, expected in MAX_SET_SIZES.items():
            if n > 8:
                continue
            found, optimal = max_set_search(n)
            assert optimal
            assert len(found) == expected
            assert check_set(found).set_ok

    def test_matches_independent_solver(self):
        networkx = pytest.importorskip("networkx")
        for n in range(2, 8):
            words = list(enumerate_bifix_free(n))
            graph = networkx.Graph()
            graph.add_nodes_from(words)
            for a, b in itertools.combinations(words, 2):
                if not naive_conflict(a, b):
                    graph.add_edge(a, b)
            _, size = networkx.max_weight_clique(graph, weight=None)
            assert size == MAX_SET_SIZES[n]

    def test_construction_is_beaten_at_ten(self):
        found, optimal = max_set_search(10)
        assert optimal
        assert len(found) == 24
        assert cbfs_cardinality(10) == 23
        assert check_set(found).set_ok

    def test_nine_matches_construction(self):
        found, optimal = max_set_search(9)
        assert optimal
        assert len(found) == cbfs_cardinality(9) == 14

    def test_deterministic(self):
        first, _ = max_set_search(7)
        second, _ = max_set_search(7)
        assert first.words == second.words

    def test_time_limit_still_yields_certificate(self):
        found, optimal = max_set_search(11, time_limit=0.2)
        assert not optimal
        assert len(found) >= cbfs_cardinality(11)
        assert check_set(found).set_ok

    def test_validation(self):
        with pytest.raises(ValueError):
            max_set_search(1)
        with pytest.raises(CapExceededError):
            max_set_search(6, cap=5)

    def test_provenance(self):
        found, _ = max_set_search(5)
        assert found.provenance == "search"
