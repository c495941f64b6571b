from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st
from sympy.functions.combinatorial.numbers import partition as npartitions

from snsuper import liesuper as ls
from snsuper.errors import InvalidArgument
from snsuper.exactlinalg import EchelonSubspace, ExactMatrix
from snsuper.groups import dihedral_supergroup, symmetric_supergroup
from snsuper.perms import all_permutations, identity, parity

from conftest import class_counts


def element(n, coeffs):
    return ls.sym_element(n, coeffs)


@st.composite
def homogeneous(draw, n=4):
    p = draw(st.integers(0, 1))
    pool = [g for g in all_permutations(n) if parity(g) == p]
    support = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=4, unique=True))
    return element(n, {g: draw(st.integers(-3, 3)) for g in support})


def test_bracket_examples():
    s = element(4, {(1, 0, 2, 3): 1})
    t = element(4, {(0, 1, 3, 2): 1})
    e = element(4, {identity(4): 1})
    assert ls.super_bracket(s, s) == e * 2
    assert ls.super_bracket(s, t) == (s * t) * 2
    assert ls.super_bracket(e, s).is_zero()
    with pytest.raises(InvalidArgument):
        ls.super_bracket(s + e, s)


@given(homogeneous(), homogeneous(), homogeneous())
def test_super_jacobi_and_antisymmetry(x, y, z):
    b = ls.super_bracket
    p, q = x.parity(), y.parity()
    assert b(x, y) == b(y, x) * (-(-1) ** (p * q))
    lhs = b(x, b(y, z))
    rhs = b(b(x, y), z) + b(y, b(x, z)) * ((-1) ** (p * q))
    assert lhs == rhs


@given(homogeneous(), homogeneous())
def test_bracket_vectors_agree(x, y):
    alg = symmetric_supergroup(4).algebra
    p, q = x.parity(), y.parity()
    r, w = ls.bracket_vectors(alg, [int(c) for c in x.vector(p)], p, [int(c) for c in y.vector(q)], q)
    assert ls.GroupAlgebraElement.from_vector(x.group, r, w) == ls.super_bracket(x, y)


def expected_dims(n):
    E, F = class_counts(n)
    return (factorial(n) // 2 - F, factorial(n) // 2 - E + 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_closure_matches_pairwise_oracle(n):
    fast = ls.closure(ls.transposition_elements(n))
    slow = ls.closure(ls.transposition_elements(n), strategy="pairs")
    assert fast.dims == slow.dims == expected_dims(n)
    assert ls.is_subspace(fast, slow) and ls.is_subspace(slow, fast)
    assert ls.is_closed(fast)


@pytest.mark.parametrize("n,total", [(2, 2), (3, 5), (4, 22), (5, 117)])
def test_closure_dims(n, total):
    S = ls.closure(ls.transposition_elements(n))
    assert S.dim == total and S.dims == expected_dims(n)
    assert ls.transposition_sum(n) in S


@pytest.mark.parametrize("n", [3, 4, 5])
def test_modular_selection_agrees(n):
    fast = ls.closure(ls.transposition_elements(n), selection="modular")
    exact = ls.closure(ls.transposition_elements(n))
    assert fast.dims == exact.dims and fast.modular is not None
    assert ls.is_subspace(fast, exact) and ls.is_subspace(exact, fast)
    with pytest.raises(InvalidArgument):
        ls.closure(ls.transposition_elements(n), selection="float")


def test_closure_small_examples():
    S = ls.closure(ls.transposition_elements(2))
    assert S.dims == (1, 1)
    assert element(2, {identity(2): 1}) in S


def test_closure_budget_flags_partial():
    S = ls.closure(ls.transposition_elements(5), budget_seconds=0)
    assert not S.complete and S.passes == 1
    with pytest.raises(InvalidArgument):
        ls.derived(S)


def test_closure_rejects_bad_input():
    with pytest.raises(InvalidArgument):
        ls.closure([])
    mixed = element(3, {identity(3): 1, (1, 0, 2): 1})
    with pytest.raises(InvalidArgument):
        ls.closure([mixed])
    with pytest.raises(InvalidArgument):
        ls.closure(ls.transposition_elements(3), strategy="bogus")


def naive_derived_dims(S):
    """All pairwise brackets of basis elements, reduced in a plain echelon space."""
    alg = S.algebra
    spaces = (EchelonSubspace(alg.N[0]), EchelonSubspace(alg.N[1]))
    for p in (0, 1):
        for q in (0, 1):
            for u in S.rows[p]:
                for v in S.rows[q]:
                    r, w = ls.bracket_vectors(alg, u, p, v, q)
                    spaces[r].insert([int(x) for x in w])
    return spaces[0].dim, spaces[1].dim


@pytest.mark.parametrize("n,dims", [(3, (2, 0)), (4, (11, 8))])
def test_derived_of_small_closures(n, dims):
    S = ls.closure(ls.transposition_elements(n))
    D = ls.derived(S)
    assert D.dims == dims == naive_derived_dims(S)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_derived_group_algebra(n):
    E, F = class_counts(n)
    D = ls.derived(ls.whole_algebra(symmetric_supergroup(n)))
    assert D.dims == (factorial(n) // 2 - F, factorial(n) // 2 - E)
    if n <= 4:
        assert D.dims == naive_derived_dims(ls.whole_algebra(symmetric_supergroup(n)))
    Tn = ls.transposition_sum(n)
    assert Tn not in D
    for t in ls.transposition_elements(n):
        assert (t - Tn * Fraction(2, n * (n - 1))) in D


def test_derived_trivial_examples():
    G = symmetric_supergroup(3)
    span_e = ls.GradedSubspace(G, ([[1, 0, 0]], []))
    assert ls.derived(span_e).dim == 0
    assert ls.derived(ls.whole_algebra(symmetric_supergroup(2))).dim == 1


def test_derived_rejects_non_closed():
    G = symmetric_supergroup(3)
    odd = [1, 0, 0]
    with pytest.raises(InvalidArgument):
        ls.derived(ls.GradedSubspace(G, ([], [odd])))


@pytest.mark.parametrize("n", range(2, 7))
def test_centers_of_symmetric_groups(n):
    G = symmetric_supergroup(n)
    E, F = class_counts(n)
    assert ls.ungraded_center(G).dim == npartitions(n)
    assert ls.graded_center(G).dims == (E + F, 0)
    assert ls.ungraded_center(G).dims[1] == E


def dihedral_classes(n):
    return (n + 3) // 2 if n % 2 else n // 2 + 3


@pytest.mark.parametrize("n", range(3, 11))
def test_centers_of_dihedral_groups(n):
    G = dihedral_supergroup(n)
    assert G.order == 2 * n
    assert ls.ungraded_center(G).dim == dihedral_classes(n)


def test_dihedral_six_odd_center():
    assert ls.ungraded_center(dihedral_supergroup(6)).dims[1] == 2


@pytest.mark.parametrize("n", [3, 4, 5])
def test_lie_center_inside_group_center(n):
    G = symmetric_supergroup(n)
    S = ls.closure(ls.transposition_elements(n))
    Z = ls.graded_center(G, subspace=S, test_elements=ls.transposition_elements(n))
    assert ls.is_subspace(Z, ls.ungraded_center(G))


@pytest.mark.parametrize("gens,grading,dim", [
    (lambda: ls.sl_odd_part(2, 2), lambda: ls.grading_matrix(2, 2), 15),
    (lambda: ls.sl_odd_part(3, 3), lambda: ls.grading_matrix(3, 3), 35),
    (lambda: ls.sq_odd_part(3), lambda: ls.grading_matrix(3, 3), 17),
    (lambda: ls.sq_odd_part(4), lambda: ls.grading_matrix(4, 4), 31),
    (lambda: [(ExactMatrix.identity(10), 0)] + ls.odd_no_diagonal(5), lambda: ls.grading_matrix(5, 5), 49),
])
def test_odd_generation(gens, grading, dim):
    S = ls.matrix_closure(gens(), grading())
    assert S.dim == dim


def test_odd_generation_lands_in_the_right_algebra():
    S = ls.matrix_closure(ls.sq_odd_part(3), ls.grading_matrix(3, 3))
    T = ls.sq_subspace(3)
    assert all(T.contains(X, p) for p in (0, 1) for X in S.basis[p])
    S = ls.matrix_closure(ls.sl_odd_part(2, 2), ls.grading_matrix(2, 2))
    T = ls.sl_subspace(2, 2)
    assert T.dim == ls.sl_dimension(2, 2)
    assert all(T.contains(X, p) for p in (0, 1) for X in S.basis[p])


def test_small_cases_are_not_generated():
    # sq(2) odd part does not generate sq(2); sl(1|1) is not perfect
    assert ls.matrix_closure(ls.sq_odd_part(2), ls.grading_matrix(2, 2)).dim < ls.sq_dimension(2)
    sl11 = ls.sl_subspace(1, 1)
    assert ls.derived_matrix(sl11).dim == 1


def test_matrix_closure_rejects_wrong_parity():
    with pytest.raises(InvalidArgument):
        ls.matrix_closure([(ExactMatrix.identity(4), 1)], ls.grading_matrix(2, 2))
