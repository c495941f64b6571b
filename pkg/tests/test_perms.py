from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from snsuper import perms
from snsuper.errors import InvalidArgument


def word_product(word, n):
    p = perms.identity(n)
    for i in word:
        p = perms.compose(p, perms.adjacent(i, n))
    return p


def inversions(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


@given(st.integers(1, 7).flatmap(lambda n: st.permutations(range(n))))
def test_adjacent_word_reconstructs(p):
    p = tuple(p)
    w = perms.adjacent_word(p)
    assert word_product(w, len(p)) == p
    assert len(w) == inversions(p)
    assert perms.parity(p) == len(w) % 2


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(*[st.permutations(range(n))] * 3)))
def test_group_axioms(abc):
    a, b, c = map(tuple, abc)
    n = len(a)
    assert perms.compose(perms.compose(a, b), c) == perms.compose(a, perms.compose(b, c))
    assert perms.compose(a, perms.inverse(a)) == perms.identity(n)
    assert perms.sign(perms.compose(a, b)) == perms.sign(a) * perms.sign(b)


def test_compose_is_function_composition():
    a, b = (1, 2, 0), (1, 0, 2)
    ab = perms.compose(a, b)
    assert all(ab[i] == a[b[i]] for i in range(3))


def test_transpositions_count():
    assert len(perms.transpositions(5)) == 10
    assert all(perms.parity(t) == 1 for t in perms.transpositions(5))


def test_parse_cycles_and_oneline():
    assert perms.parse_permutation("(1 3)", 3) == (2, 1, 0)
    assert perms.parse_permutation("(1 2 3)", 3) == (1, 2, 0)
    assert perms.parse_permutation("231", 3) == (1, 2, 0)
    assert perms.parse_permutation("2,3,1", 3) == (1, 2, 0)
    # right-to-left: (1 2)(2 3) sends 3 -> 2 -> 1
    assert perms.parse_permutation("(1 2)(2 3)", 3)[2] == 0


@given(st.integers(1, 7).flatmap(lambda n: st.permutations(range(n))))
def test_format_round_trip(p):
    p = tuple(p)
    n = len(p)
    assert perms.parse_permutation(perms.format_cycles(p), n) == p
    assert perms.parse_permutation(perms.format_oneline(p), n) == p


@pytest.mark.parametrize("text", ["(1 1)", "(1 4)", "112", "12a", "(1 2"])
def test_parse_rejects(text):
    with pytest.raises(InvalidArgument):
        perms.parse_permutation(text, 3)


def test_all_permutations():
    assert sorted(perms.all_permutations(4)) == sorted(permutations(range(4)))
