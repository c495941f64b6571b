from math import factorial

import pytest
from sympy.functions.combinatorial.numbers import partition as npartitions
from hypothesis import given

from snsuper.combinatorics import (Partition, StandardTableau, classify, conjugate, content_vector,
                                   covers, diagonal_parity, partitions, residue_sum,
                                   row_reading_tableau, standard_tableaux, tableau_of)
from snsuper.errors import InvalidArgument, NotAWeight

from conftest import brute_conjugate, brute_partitions, class_counts, hook_dim, partition_strategy


@pytest.mark.parametrize("n", range(1, 13))
def test_partition_count_matches_partition_function(n):
    assert len(partitions(n)) == npartitions(n)
    assert [p.parts for p in partitions(n)] == brute_partitions(n)


def test_partitions_of_four_in_order():
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in partitions(1)] == [(1,)]
    assert len(partitions(7)) == 15


@pytest.mark.parametrize("n", [0, -3])
def test_partitions_rejects_nonpositive(n):
    with pytest.raises(InvalidArgument):
        partitions(n)


@pytest.mark.parametrize("bad", [(1, 2), (2, 0), (-1,)])
def test_partition_invariants(bad):
    with pytest.raises(InvalidArgument):
        Partition(bad)


def test_conjugate_examples():
    assert conjugate((3, 1)).parts == (2, 1, 1)
    assert conjugate((2, 2)).parts == (2, 2)
    assert conjugate((5, 5, 5, 3, 1, 1)).parts == (6, 4, 4, 3, 3)


@given(partition_strategy(max_n=12))
def test_conjugate_involution(parts):
    lam = Partition(parts)
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).parts == brute_conjugate(parts)
    assert residue_sum(conjugate(lam)) == -residue_sum(lam)


def test_partition_text_round_trip():
    lam = Partition.parse("3,1,1")
    assert lam.parts == (3, 1, 1) and str(lam) == "3,1,1" and lam.n == 5


@pytest.mark.parametrize("n,E,F", [(3, 1, 1), (5, 3, 1), (7, 7, 1)])
def test_classify_examples(n, E, F):
    t = classify(n)
    assert (len(t.E), len(t.F)) == (E, F)


@pytest.mark.parametrize("n", range(2, 11))
def test_classify_against_pairing(n):
    t = classify(n)
    assert (len(t.E), len(t.F)) == class_counts(n)
    seen = set()
    for c in t.classes:
        seen |= {c.representative, c.mate}
        assert (c.kind == "M") == (c.representative == c.mate)
        assert c.representative.parts >= c.mate.parts
    assert seen == set(partitions(n))
    assert t.representative_of((n,)) == Partition((n,))


def test_classify_rejects_small():
    with pytest.raises(InvalidArgument):
        classify(1)


def test_residue_sum_examples():
    assert residue_sum((4,)) == 6
    assert residue_sum((3, 1, 1)) == 0
    assert residue_sum((5, 5, 5, 3, 1, 1)) == 0


def test_covers_examples():
    assert covers((2, 2)) == [(Partition((2, 1)), 0)]
    assert covers((3, 1)) == [(Partition((2, 1)), 2), (Partition((3,)), -1)]
    assert covers((6,)) == [(Partition((5,)), 5)]


@given(partition_strategy(min_n=2, max_n=12))
def test_covers_distinct_residues(parts):
    cs = covers(parts)
    assert len({k for _, k in cs}) == len(cs)
    assert all(mu.n == sum(parts) - 1 for mu, _ in cs)


@pytest.mark.parametrize("parts,parity", [((2, 1), 1), ((3, 1, 1), 0), ((1,), 0), ((2, 2), 1), ((3, 2, 1), 0)])
def test_diagonal_parity(parts, parity):
    assert diagonal_parity(parts) == parity


def test_diagonal_parity_rejects():
    with pytest.raises(InvalidArgument):
        diagonal_parity((3, 1))


@given(partition_strategy(max_n=8))
def test_tableaux_count_is_hook_formula(parts):
    ts = standard_tableaux(parts)
    assert len(ts) == hook_dim(parts)
    vecs = [content_vector(T) for T in ts]
    assert len(set(vecs)) == len(vecs)
    assert vecs == sorted(vecs)
    for T, a in zip(ts, vecs):
        assert a[0] == 0 and all(-len(a) < x < len(a) for x in a)
        assert tableau_of(parts, a) == T
        assert content_vector(T.transpose()) == tuple(-x for x in a)


@pytest.mark.parametrize("n", range(1, 8))
def test_sum_of_squares(n):
    assert sum(len(standard_tableaux(p)) ** 2 for p in partitions(n)) == factorial(n)


def test_tableaux_examples():
    assert len(standard_tableaux((2, 2))) == 2
    assert len(standard_tableaux((3, 1, 1))) == 6
    assert {content_vector(T) for T in standard_tableaux((2, 1))} == {(0, -1, 1), (0, 1, -1)}


def test_content_vector_example():
    T = StandardTableau(Partition((4, 2, 1)), ((1, 2, 4, 5), (3, 7), (6,)))
    assert content_vector(T) == (0, 1, -1, 2, 3, -2, 0)
    assert content_vector(T.transpose()) == (0, -1, 1, -2, -3, 2, 0)
    assert content_vector(row_reading_tableau((5,))) == (0, 1, 2, 3, 4)


def test_tableau_of_rejects_non_weight():
    with pytest.raises(NotAWeight):
        tableau_of((2, 1), (0, 1, 2))


def test_tableau_validation():
    with pytest.raises(InvalidArgument):
        StandardTableau(Partition((2, 1)), ((2, 1), (3,)))
