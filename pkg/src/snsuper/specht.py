"""Young's seminormal form over Q.

Basis vectors v_T are indexed by standard tableaux in content-vector order.
The root v_T0 is the row-reading tableau; whenever s_i moves T to U = s_i T
with i above i+1's row (an ascent), v_U := (s_i - c) v_T with
c = 1/(a_{i+1} - a_i).  These choices are path independent, so every v_T is
fixed by any chain of ascents from the root.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import flint

from .combinatorics import (Partition, _as_partition, conjugate, content_vector,
                            row_reading_tableau, standard_tableaux)
from .errors import Inconsistency, InvalidArgument
from .exactlinalg import ExactMatrix
from .perms import adjacent_word, compose, identity


def _step(T, i):
    """Classify the action of s_i on v_T.

    Returns ("row", None), ("col", None), or (U, c, ascent) where U = s_i T.
    """
    pos = T.positions()
    (r1, c1), (r2, c2) = pos[i - 1], pos[i]
    if r1 == r2:
        return ("row",)
    if c1 == c2:
        return ("col",)
    alpha_i, alpha_j = c1 - r1, c2 - r2
    return (T.swap(i), Fraction(1, alpha_j - alpha_i), r1 < r2)


@dataclass(frozen=True)
class SeminormalRep:
    shape: Partition
    basis: tuple
    contents: tuple
    gens: tuple  # gens[i-1] = S(s_i)
    _flint: tuple = field(repr=False, compare=False)

    @property
    def n(self):
        return self.shape.n

    @property
    def dim(self):
        return len(self.basis)

    def index(self, T):
        return self._index()[T]

    def _index(self):
        idx = getattr(self, "_idx_cache", None)
        if idx is None:
            idx = {T: k for k, T in enumerate(self.basis)}
            object.__setattr__(self, "_idx_cache", idx)
        return idx

    def gen(self, i):
        if not 1 <= i < self.n:
            raise InvalidArgument(f"generator index {i} out of range for n={self.n}")
        return self.gens[i - 1]

    def flint_gen(self, i):
        return self._flint[i - 1]


@lru_cache(maxsize=None)
def seminormal_rep(lam):
    lam = _as_partition(lam)
    n = lam.n
    basis = standard_tableaux(lam)
    index = {T: k for k, T in enumerate(basis)}
    f = len(basis)
    gens = []
    for i in range(1, n):
        M = [[Fraction(0)] * f for _ in range(f)]
        for a, T in enumerate(basis):
            st = _step(T, i)
            if st[0] == "row":
                M[a][a] = Fraction(1)
            elif st[0] == "col":
                M[a][a] = Fraction(-1)
            else:
                U, c, ascent = st
                b = index[U]
                M[a][a] = c
                # columns are images: s_i v_T = c v_T + (1 or 1-c^2) v_U
                M[b][a] = Fraction(1) if ascent else 1 - c * c
        gens.append(ExactMatrix._raw(tuple(tuple(r) for r in M), f))
    fl = tuple(g.to_flint() for g in gens)
    return SeminormalRep(lam, basis, tuple(content_vector(T) for T in basis), tuple(gens), fl)


def _check_perm(R, sigma):
    if len(sigma) != R.n or sorted(sigma) != list(range(R.n)):
        raise InvalidArgument(f"{sigma} is not a permutation of {R.n} points")


def flint_rep_of_permutation(R, sigma):
    _check_perm(R, sigma)
    M = flint.fmpq_mat(R.dim, R.dim)
    for k in range(R.dim):
        M[k, k] = 1
    for i in adjacent_word(sigma):
        M = M * R._flint[i - 1]
    return M


def rep_of_permutation(R, sigma):
    """S(sigma) as the product of generator matrices along the insertion-sort word."""
    return ExactMatrix.from_flint(flint_rep_of_permutation(R, sigma))


def all_flint_matrices(R):
    """S(sigma) for every sigma, by breadth-first search over the Cayley graph."""
    n = R.n
    e = identity(n)
    I = flint.fmpq_mat(R.dim, R.dim)
    for k in range(R.dim):
        I[k, k] = 1
    out = {e: I}
    queue = deque([e])
    gens = [(i, tuple(range(i - 1)) + (i, i - 1) + tuple(range(i + 1, n))) for i in range(1, n)]
    while queue:
        p = queue.popleft()
        for i, s in gens:
            q = compose(p, s)
            if q not in out:
                out[q] = out[p] * R._flint[i - 1]
                queue.append(q)
    return out


def jucys_murphy(R, j):
    """L_j = sum of (i, j) over i < j; diagonal with the j-th contents."""
    if not 1 <= j <= R.n:
        raise InvalidArgument(f"index {j} out of range for n={R.n}")
    total = flint.fmpq_mat(R.dim, R.dim)
    for i in range(j - 1):
        t = list(range(R.n))
        t[i], t[j - 1] = j - 1, i
        total = total + flint_rep_of_permutation(R, tuple(t))
    return ExactMatrix.from_flint(total)


@dataclass(frozen=True)
class Intertwiner:
    source: Partition
    target: Partition
    matrix: ExactMatrix
    selfsquare: Fraction
    signs: tuple  # scalar attached to v_T for each basis T of source


def _raw_signs(lam):
    """eps(T) with phi0 v_T = eps(T) v_{T'}, propagated along ascents from the root."""
    lam = _as_partition(lam)
    basis = standard_tableaux(lam)
    root = row_reading_tableau(lam)
    eps = {root: Fraction(1)}
    queue = deque([root])
    while queue:
        T = queue.popleft()
        for i in range(1, lam.n):
            st = _step(T, i)
            if len(st) == 1 or not st[2]:
                continue
            U, c, _ = st
            if U in eps:
                continue
            # T' -> U' is an ascent in the conjugate iff i sits left of i+1 in T
            pos = T.positions()
            if pos[i - 1][1] < pos[i][1]:
                eps[U] = -eps[T]
            else:
                eps[U] = -(1 - c * c) * eps[T]
            queue.append(U)
    if len(eps) != len(basis):
        raise Inconsistency(f"ascent graph of {lam} is not connected")
    return eps


def _phi_matrix(lam, eps):
    basis = standard_tableaux(lam)
    target = standard_tableaux(conjugate(lam))
    tidx = {T: k for k, T in enumerate(target)}
    f = len(basis)
    M = [[Fraction(0)] * f for _ in range(f)]
    for a, T in enumerate(basis):
        M[tidx[T.transpose()]][a] = eps[T]
    return ExactMatrix._raw(tuple(tuple(r) for r in M), f)


@lru_cache(maxsize=None)
def intertwiner(lam):
    """phi: S^lam -> S^lam' with phi(sigma v) = sign(sigma) sigma phi(v).

    The representative of {lam, lam'} (the lexicographically larger one) gets
    eps(root) = 1; its mate gets the inverse map.  For self-conjugate lam the
    rational map squares to selfsquare * id.
    """
    lam = _as_partition(lam)
    mate = conjugate(lam)
    basis = standard_tableaux(lam)
    if lam == mate:
        eps = _raw_signs(lam)
        squares = {eps[T] * eps[T.transpose()] for T in basis}
        if len(squares) != 1:
            raise Inconsistency(f"phi0^2 is not scalar for {lam}")
        c = squares.pop()
        return Intertwiner(lam, mate, _phi_matrix(lam, eps), c, tuple(eps[T] for T in basis))
    if lam.parts > mate.parts:
        eps = _raw_signs(lam)
    else:
        # inverse of the representative's map: v_T -> (1 / eps_rep(T')) v_T'
        eps_rep = _raw_signs(mate)
        eps = {T: 1 / eps_rep[T.transpose()] for T in basis}
    return Intertwiner(lam, mate, _phi_matrix(lam, eps), Fraction(1), tuple(eps[T] for T in basis))
