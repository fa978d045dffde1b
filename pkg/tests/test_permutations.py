import itertools

import pytest

from oracles import apply_word, inversions, shortest_word_length
from qhecke.permutations import (
    all_perms, canonical_reduced_word, coset_decompose, from_word, identity, length, perm_text,
    word_text,
)


def test_from_word_examples():
    assert from_word((1, 2, 1), 3) == (3, 2, 1)
    assert from_word((), 3) == (1, 2, 3)
    assert from_word((1, 2, 1), 3) == from_word((2, 1, 2), 3)


def test_from_word_rejects_bad_index():
    with pytest.raises(ValueError):
        from_word((3,), 3)
    with pytest.raises(ValueError):
        from_word((0,), 3)


def test_from_word_matches_oracle():
    for word in itertools.product(range(1, 4), repeat=4):
        assert from_word(word, 4) == apply_word(word, 4)


def test_canonical_word_examples():
    assert canonical_reduced_word(identity(3)) == ()
    assert canonical_reduced_word((2, 1, 3)) == (1,)
    assert canonical_reduced_word((3, 2, 1)) == (1, 2, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_canonical_words_round_trip(n):
    for w in all_perms(n):
        word = canonical_reduced_word(w)
        assert from_word(word, n) == w
        assert len(word) == length(w) == inversions(w)


@pytest.mark.parametrize("n", range(1, 5))
def test_length_is_shortest_word(n):
    for w in all_perms(n):
        assert length(w) == shortest_word_length(w)


def test_canonical_words_are_staircases():
    # blocks s_m s_{m-1} ... s_k with strictly increasing block tops
    for w in all_perms(5):
        word = canonical_reduced_word(w)
        tops, prev = [], None
        for i in word:
            if prev is None or i != prev - 1:
                tops.append(i)
            prev = i
        assert tops == sorted(set(tops))


def test_coset_examples():
    assert coset_decompose((1, 2, 3), 2) == ((1, 2), None)
    assert coset_decompose((1, 3, 2), 2) == ((1, 2), 2)
    assert coset_decompose((3, 1, 2), 2) == ((1, 2), 1)


@pytest.mark.parametrize("m", range(1, 6))
def test_coset_decomposition_is_a_bijection(m):
    seen = set()
    for w in all_perms(m + 1):
        u, k = coset_decompose(w, m)
        assert len(u) == m
        if k is None:
            assert w == u + (m + 1,)
        else:
            rebuilt = from_word(canonical_reduced_word(u) + tuple(range(m, k - 1, -1)), m + 1)
            assert rebuilt == w
            assert length(w) == length(u) + (m - k + 1)
        seen.add((u, k))
    assert len(seen) == len(all_perms(m + 1)) == (m + 1) * len(all_perms(m))


def test_text_forms():
    assert perm_text((3, 1, 2)) == "[3,1,2]"
    assert word_text(canonical_reduced_word((3, 1, 2))) == "s2 s1"
    assert from_word((2, 1), 3) == (3, 1, 2)
