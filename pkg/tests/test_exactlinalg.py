from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from snsuper.errors import FieldMismatch, InvalidArgument
from snsuper.exactlinalg import (EchelonSubspace, ExactMatrix, ModularEchelon, Quad, annihilator, format_scalar,
                                 independent_subset, nullspace, parse_scalar, quad, rank_of, rref,
                                 solve_linear, sqrt_extend, squarefree_decomposition, subspace_insert)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
squarefree = st.sampled_from([-7, -3, -2, -1, 2, 3, 5, 6, 7])


def as_sympy(x):
    if isinstance(x, Quad):
        return sympy.Rational(x.a.numerator, x.a.denominator) + \
            sympy.Rational(x.b.numerator, x.b.denominator) * sympy.sqrt(x.d)
    return sympy.Rational(x.numerator, x.denominator)


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(st.integers(-3, 3), min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


@given(fractions, fractions, fractions, fractions, squarefree)
def test_quad_field_ops_match_sympy(a, b, c, e, d):
    x, y = quad(a, b, d), quad(c, e, d)
    for got, want in [(x + y, as_sympy(x) + as_sympy(y)), (x - y, as_sympy(x) - as_sympy(y)),
                      (x * y, as_sympy(x) * as_sympy(y))]:
        assert sympy.simplify(as_sympy(got) - want) == 0
    if y:
        assert sympy.simplify(as_sympy(x / y) - as_sympy(x) / as_sympy(y)) == 0
        assert (x / y) * y == x


def test_quad_collapses_and_mismatch():
    assert quad(3, 0, 5) == Fraction(3)
    assert isinstance(quad(3, 0, 5), Fraction)
    with pytest.raises(FieldMismatch):
        Quad(1, 1, 2) + Quad(1, 1, 3)


@given(st.fractions(min_value=-50, max_value=50, max_denominator=30).filter(bool))
def test_sqrt_extend_squares_back(c):
    r = sqrt_extend(c)
    assert r * r == c
    s, d = squarefree_decomposition(c)
    assert s > 0 and s * s * d == c
    assert sympy.factorint(abs(d)) == {p: 1 for p in sympy.factorint(abs(d))}


def test_sqrt_extend_examples():
    assert sqrt_extend(4) == 2
    assert sqrt_extend(Fraction(-3, 4)) == Quad(0, Fraction(1, 2), -3)
    assert sqrt_extend(5) == Quad(0, 1, 5)
    with pytest.raises(InvalidArgument):
        sqrt_extend(0)


@given(fractions, fractions, squarefree)
def test_scalar_text_round_trip(a, b, d):
    x = quad(a, b, d)
    assert parse_scalar(format_scalar(x)) == x
    assert parse_scalar(format_scalar(a)) == a


def test_format_examples():
    assert format_scalar(Fraction(-3, 4)) == "-3/4"
    assert format_scalar(Quad(0, Fraction(1, 2), -3)) == "0+1/2√-3"


@given(matrices())
def test_rref_matches_sympy(rows):
    R, rank = rref(ExactMatrix(rows))
    S, piv = sympy.Matrix(rows).rref()
    assert rank == len(piv) == rank_of(rows)
    assert [[as_sympy(x) for x in r] for r in R.rows] == S.tolist()


def test_rref_examples():
    I = ExactMatrix.identity(3)
    assert rref(I) == (I, 3)
    Z = ExactMatrix.zeros(2, 3)
    assert rref(Z) == (Z, 0)
    assert rref(ExactMatrix([[1, 2], [2, 4]])) == (ExactMatrix([[1, 2], [0, 0]]), 1)


def test_rref_over_quadratic_field():
    r = Quad(0, 1, 2)
    R, rank = rref(ExactMatrix([[1, r], [r, 2]]))
    assert rank == 1 and R == ExactMatrix([[1, r], [0, 0]])
    with pytest.raises(FieldMismatch):
        rref(ExactMatrix([[Quad(0, 1, 2), Quad(0, 1, 3)]]))


@given(matrices(), matrices())
def test_matmul_matches_sympy(a, b):
    assume(len(a[0]) == len(b))
    got = ExactMatrix(a) @ ExactMatrix(b)
    assert [[as_sympy(x) for x in r] for r in got.rows] == (sympy.Matrix(a) * sympy.Matrix(b)).tolist()


def test_matmul_large_uses_same_arithmetic():
    A = ExactMatrix([[Fraction(i - j, 1 + (i * j) % 5) for j in range(70)] for i in range(70)])
    B = A.transpose()
    got = A @ B
    assert got == ExactMatrix.from_flint(A.to_flint() * B.to_flint())


@given(matrices())
def test_nullspace_rank_nullity(rows):
    A = ExactMatrix(rows)
    N = nullspace(A)
    _, rank = rref(A)
    assert len(N) == A.ncols - rank
    for v in N:
        assert all(x == 0 for x in A.apply(v))
    ann = annihilator(rows, len(rows[0]))
    assert len(ann) == A.ncols - rank
    assert all(sum(a * r for a, r in zip(v, row)) == 0 for v in ann for row in rows)


def test_solve_linear_examples():
    B = ExactMatrix([[1, 2], [3, 4]])
    sol = solve_linear(ExactMatrix.identity(2), B)
    assert sol.consistent and sol.particular == B and sol.nullity == 0
    sol = solve_linear(ExactMatrix.zeros(2), ExactMatrix.zeros(2, 1))
    assert sol.nullity == 2
    sol = solve_linear(ExactMatrix([[1, 1], [0, 0]]), ExactMatrix([[1], [0]]))
    assert sol.consistent and sol.nullity == 1
    assert not solve_linear(ExactMatrix([[0]]), ExactMatrix([[1]])).consistent
    with pytest.raises(InvalidArgument):
        solve_linear(ExactMatrix.identity(2), ExactMatrix.identity(3))


@given(matrices(), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_solve_linear_solutions_satisfy(rows, x):
    A = ExactMatrix(rows)
    x = x[:A.ncols]
    b = ExactMatrix([[v] for v in A.apply(x)])
    sol = solve_linear(A, b)
    assert sol.consistent
    assert A @ sol.particular == b


def test_subspace_insert_examples():
    S = EchelonSubspace(3)
    S1, grew = subspace_insert(S, [1, 0, 0])
    assert grew and S1.dim == 1 and S.dim == 0
    S2, grew = subspace_insert(S1, [1, 0, 0])
    assert not grew and S2.dim == 1
    T, g1 = subspace_insert(EchelonSubspace(3), [1, 1, 0])
    T, g2 = subspace_insert(T, [0, 1, 0])
    assert g1 and g2 and T.dim == 2
    with pytest.raises(InvalidArgument):
        subspace_insert(T, [1, 2])


@given(matrices(cols=st.just(4)))
def test_echelon_dim_is_rank(rows):
    S = EchelonSubspace(4, rows)
    assert S.dim == rank_of(rows)
    assert all(r in S for r in rows)
    R, rank = rref(ExactMatrix(rows))
    assert S.basis() == [r for r in R.rows[:rank]]
    picked = independent_subset(rows)
    assert len(picked) == S.dim
    assert rank_of([rows[i] for i in picked]) == S.dim


@given(matrices())
def test_json_round_trip(rows):
    M = ExactMatrix(rows).scale(Fraction(1, 3))
    assert ExactMatrix.from_json(M.to_json()) == M


def test_blocks_and_trace():
    A, B = ExactMatrix([[1, 2], [3, 4]]), ExactMatrix.identity(2)
    M = ExactMatrix.blocks([[A, B], [B, A]])
    assert M.shape == (4, 4) and M.trace() == 10
    with pytest.raises(InvalidArgument):
        ExactMatrix([[1, 2], [3]])


@given(matrices(rows=st.integers(1, 12), cols=st.just(6)), st.integers(1, 5))
def test_modular_echelon_matches_rational_rank(rows, batch):
    E = ModularEchelon(6)
    picked = []
    for lo in range(0, len(rows), batch):
        picked += [lo + k for k in E.insert_batch(rows[lo:lo + batch])]
    assert E.dim == len(picked) == rank_of(rows)
    assert picked == independent_subset(rows)
    assert all(E.contains(r) for r in rows)


def test_modular_echelon_sees_multiples_of_the_prime_as_zero():
    p = ModularEchelon.PRIME
    E = ModularEchelon(2)
    assert E.insert_batch([[p, 2 * p]]) == []
    with pytest.raises(InvalidArgument):
        ModularEchelon(10, prime=2 ** 31 - 1)
