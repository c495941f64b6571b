"""Super commutators in group algebras and matrix superalgebras.

The bracket closure of a homogeneous set X is computed by ad-saturation:
the Lie superalgebra generated by X is spanned by right-normed brackets
[x1, [x2, ... [x_{k-1}, x_k]]], so it is the smallest subspace containing X
that is stable under ad_x for every x in X.  Each pass brackets the newly
found vectors with the generators and keeps the independent ones, using
exact integer row reduction.  A literal pairwise worklist is kept as an
independent oracle for small cases.
"""
from fractions import Fraction
from math import gcd, lcm
import random
import sys
import time

import flint
import numpy as np

from . import perms
from .errors import InvalidArgument
from .exactlinalg import (EchelonSubspace, ExactMatrix, ModularEchelon, annihilator, as_scalar,
                          echelon_from_rows, independent_subset, integer_rows, _ZERO)
from .groups import symmetric_supergroup


class GroupAlgebraElement:
    """Finite linear combination of group elements with rational coefficients."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group, coeffs=None):
        self.group = group
        self.coeffs = {g: as_scalar(c) for g, c in (coeffs or {}).items() if c}

    @classmethod
    def basis(cls, group, g, c=1):
        return cls(group, {tuple(g): c})

    @property
    def n(self):
        return self.group.degree

    def parity(self):
        """0 or 1 for homogeneous nonzero elements, None otherwise (0 for zero)."""
        ps = {self.group.parity(g) for g in self.coeffs}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def is_homogeneous(self):
        return self.parity() is not None

    def components(self):
        out = (GroupAlgebraElement(self.group), GroupAlgebraElement(self.group))
        for g, c in self.coeffs.items():
            out[self.group.parity(g)].coeffs[g] = c
        return out

    def _same(self, other):
        if other.group != self.group:
            raise InvalidArgument("elements of different group algebras")

    def __add__(self, other):
        self._same(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, _ZERO) + c
        return GroupAlgebraElement(self.group, out)

    def __neg__(self):
        return GroupAlgebraElement(self.group, {g: -c for g, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            self._same(other)
            out = {}
            for a, x in self.coeffs.items():
                for b, y in other.coeffs.items():
                    ab = perms.compose(a, b)
                    out[ab] = out.get(ab, _ZERO) + x * y
            return GroupAlgebraElement(self.group, out)
        c = as_scalar(other)
        return GroupAlgebraElement(self.group, {g: c * x for g, x in self.coeffs.items()})

    def __rmul__(self, c):
        return self * c

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.group == other.group and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self):
        return not self.coeffs

    def vector(self, p):
        """Dense coordinates of the parity-p component."""
        alg = self.group.algebra
        v = [_ZERO] * alg.N[p]
        for g, c in self.coeffs.items():
            if self.group.parity(g) == p:
                v[alg.idx[p][g]] = c
        return v

    @classmethod
    def from_vector(cls, group, p, v):
        alg = group.algebra
        return cls(group, {alg.byp[p][k]: c for k, c in enumerate(v) if c})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = [f"{c}*{perms.format_cycles(g)}" for g, c in sorted(self.coeffs.items())]
        return " + ".join(terms)


def sym_element(n, coeffs):
    return GroupAlgebraElement(symmetric_supergroup(n), coeffs)


def transposition_elements(n):
    G = symmetric_supergroup(n)
    return [GroupAlgebraElement.basis(G, t) for t in perms.transpositions(n)]


def transposition_sum(n):
    """T_n, the sum of all transpositions."""
    G = symmetric_supergroup(n)
    return GroupAlgebraElement(G, {t: 1 for t in perms.transpositions(n)})


def super_bracket(x, y):
    """[x, y] = xy - (-1)^{|x||y|} yx for homogeneous x, y."""
    p, q = x.parity(), y.parity()
    if p is None or q is None:
        raise InvalidArgument("super_bracket needs homogeneous arguments")
    s = -1 if (p & q) else 1
    return x * y - (y * x) * s


def bracket(x, y):
    """Bilinear extension of the super bracket to arbitrary elements."""
    out = GroupAlgebraElement(x.group)
    for a in x.components():
        for b in y.components():
            if a.coeffs and b.coeffs:
                out = out + super_bracket(a, b)
    return out


# ---------------------------------------------------------------------------
# graded subspaces of group algebras


class GradedSubspace:
    """Parity-split subspace of CG kept as independent integer rows per parity."""

    def __init__(self, group, rows, complete=True, passes=0, generators=None):
        self.group = group
        self.algebra = group.algebra
        self.rows = (list(rows[0]), list(rows[1]))
        self.complete = complete
        self.passes = passes
        self.generators = generators
        self.modular = None  # per-parity ModularEchelon when rows were screened mod p
        self._ann = [None, None]
        self._ech = [None, None]

    @property
    def dims(self):
        return (len(self.rows[0]), len(self.rows[1]))

    @property
    def dim(self):
        return sum(self.dims)

    def _echelon(self, p):
        if self._ech[p] is None:
            self._ech[p] = echelon_from_rows(self.rows[p], self.algebra.N[p])
        return self._ech[p]

    @property
    def even(self):
        return self._echelon(0)

    @property
    def odd(self):
        return self._echelon(1)

    def annihilator(self, p):
        if self._ann[p] is None:
            self._ann[p] = annihilator(self.rows[p], self.algebra.N[p])
        return self._ann[p]

    def contains_vector(self, v, p):
        v = integer_rows([v])[0]
        return all(sum(a * x for a, x in zip(ann, v) if x) == 0 for ann in self.annihilator(p))

    def contains(self, x):
        return all(self.contains_vector(x.vector(p), p) for p in (0, 1))

    __contains__ = contains

    def elements(self, p=None):
        ps = (0, 1) if p is None else (p,)
        return [GroupAlgebraElement.from_vector(self.group, q, r) for q in ps for r in self.rows[q]]

    def __repr__(self):
        flag = "" if self.complete else ", partial"
        return f"GradedSubspace({self.group}, dims={self.dims}{flag})"


def _int_vector(x, p):
    return np.array(integer_rows([x.vector(p)])[0], dtype=object).astype(np.int64)


_LIMIT = 1 << 52


def _ad(alg, x, f, p):
    """[x, f] for a homogeneous element x and an integer vector f of parity p."""
    q = x.parity()
    out = None
    for g, c in x.coeffs.items():
        L, R, s = alg.ad_gather(g, p)
        term = f[L] - s * f[R]
        if c != 1:
            c = Fraction(c)
            if c.denominator != 1:
                raise InvalidArgument("closure generators need integer coefficients")
            term = term * int(c)
        out = term if out is None else out + term
    if out is not None and out.size and int(np.abs(out).max()) > _LIMIT:
        raise OverflowError("coordinates too large for int64 arithmetic")
    return (p + q) & 1, out


def _integral(gens):
    out = []
    for g in gens:
        den = 1
        for c in g.coeffs.values():
            den = lcm(den, Fraction(c).denominator)
        out.append(g * den if den != 1 else g)
    return out


def _report(progress, msg):
    if progress:
        print(msg, file=sys.stderr if progress is True else progress, flush=True)


def closure(generators, strategy="ad", budget_seconds=None, progress=None, chunk=4096,
            selection="rational"):
    """Smallest graded subspace containing the generators and closed under the bracket.

    ``strategy="ad"`` saturates under ad_x for the generators (fast, exact);
    ``strategy="pairs"`` brackets each new basis vector with every basis
    vector (slow, used as an oracle).  With a budget the computation stops
    after the pass in which the budget ran out and returns a partial result.

    ``selection="modular"`` screens candidates modulo a prime instead of over
    Q.  Accepted rows are still exact brackets and provably independent, so
    the dimension is a certified lower bound; it is the practical choice once
    n! / 2 reaches the thousands.
    """
    generators = list(generators)
    if not generators:
        raise InvalidArgument("closure of an empty set")
    group = generators[0].group
    for g in generators:
        if g.group != group:
            raise InvalidArgument("generators from different group algebras")
        if not g.is_homogeneous():
            raise InvalidArgument(f"generator {g} is not homogeneous")
    generators = [g for g in generators if not g.is_zero()]
    if strategy == "pairs":
        return _closure_pairs(group, generators, budget_seconds, progress)
    if strategy != "ad":
        raise InvalidArgument(f"unknown closure strategy {strategy!r}")
    if selection == "modular":
        return _closure_modular(group, generators, budget_seconds, progress, chunk)
    if selection != "rational":
        raise InvalidArgument(f"unknown selection {selection!r}")
    alg = group.algebra
    gens = _integral(generators)
    W = ([], [])
    front = ([], [])
    for p in (0, 1):
        vecs = [_int_vector(g, p) for g in gens if g.parity() == p]
        keep = independent_subset([v.tolist() for v in vecs])
        W[p].extend(vecs[k] for k in keep)
        front[p].extend(vecs[k] for k in keep)
    start = time.monotonic()
    passes = 0
    complete = True
    while front[0] or front[1]:
        passes += 1
        cands = ([], [])
        for p in (0, 1):
            for f in front[p]:
                for x in gens:
                    q, v = _ad(alg, x, f, p)
                    if v.any():
                        cands[q].append(v)
        new = ([], [])
        for q in (0, 1):
            for lo in range(0, len(cands[q]), chunk):
                block = cands[q][lo:lo + chunk]
                rows = W[q] + block
                keep = independent_subset([r.tolist() for r in rows])
                base = len(W[q])
                fresh = [rows[k] for k in keep if k >= base]
                W[q][:] = [rows[k] for k in keep]
                new[q].extend(fresh)
                if len(W[q]) == alg.N[q]:
                    break
        front = new
        _report(progress, f"pass {passes}: dims even={len(W[0])} odd={len(W[1])} "
                          f"({time.monotonic() - start:.1f}s)")
        if budget_seconds is not None and time.monotonic() - start > budget_seconds and (front[0] or front[1]):
            complete = False
            _report(progress, "budget exhausted; returning a partial closure")
            break
    rows = tuple([r.tolist() for r in W[p]] for p in (0, 1))
    return GradedSubspace(group, rows, complete, passes, generators)


def _closure_modular(group, generators, budget_seconds, progress, chunk):
    alg = group.algebra
    gens = _integral(generators)
    ech = (ModularEchelon(alg.N[0]), ModularEchelon(alg.N[1]))
    W = ([], [])
    front = ([], [])

    def flush(q, block):
        for k in ech[q].insert_batch(np.array(block)):
            W[q].append(block[k])
            front_new[q].append(block[k])
        block.clear()

    front_new = ([], [])
    for p in (0, 1):
        flush(p, [_int_vector(g, p) for g in gens if g.parity() == p])
    front = front_new
    start = time.monotonic()
    passes = 0
    complete = True
    while front[0] or front[1]:
        passes += 1
        front_new = ([], [])
        cands = ([], [])
        for p in (0, 1):
            for f in front[p]:
                for x in gens:
                    q, v = _ad(alg, x, f, p)
                    if v.any():
                        cands[q].append(v)
                        if len(cands[q]) >= chunk:
                            flush(q, cands[q])
        for q in (0, 1):
            if cands[q]:
                flush(q, cands[q])
        front = front_new
        _report(progress, f"pass {passes}: dims even={len(W[0])} odd={len(W[1])} "
                          f"({time.monotonic() - start:.1f}s, modular)")
        if budget_seconds is not None and time.monotonic() - start > budget_seconds and (front[0] or front[1]):
            complete = False
            _report(progress, "budget exhausted; returning a partial closure")
            break
    rows = tuple([r.tolist() for r in W[p]] for p in (0, 1))
    S = GradedSubspace(group, rows, complete, passes, generators)
    S.modular = ech
    return S


def bracket_vectors(alg, u, p, v, q):
    """[u, v] for integer coordinate vectors u (parity p) and v (parity q)."""
    u = np.asarray(u, dtype=object)
    v = np.asarray(v, dtype=object)
    r = (p + q) & 1
    iu = np.nonzero(u)[0]
    iv = np.nonzero(v)[0]
    out = np.zeros(alg.N[r], dtype=object)
    if len(iu) and len(iv):
        P = alg.product_table(p, q)[np.ix_(iu, iv)]
        Q = alg.product_table(q, p)[np.ix_(iv, iu)].T
        c = np.outer(u[iu], v[iv])
        s = -1 if (p & q) else 1
        np.add.at(out, P.ravel(), c.ravel())
        np.add.at(out, Q.ravel(), (-s * c).ravel())
    return r, out


def ad_matrix(alg, r, q, p):
    """Matrix of f -> [r, f] from parity p to parity p + q, for an integer vector r of parity q."""
    r = np.asarray(r, dtype=np.int64)
    out_par = (p + q) & 1
    M = np.zeros((alg.N[out_par], alg.N[p]), dtype=np.int64)
    P = alg.product_table(q, p)  # r_i f_j
    Q = alg.product_table(p, q)  # f_j r_i
    s = -1 if (p & q) else 1
    nz = np.nonzero(r)[0]
    cols = np.arange(alg.N[p])
    for i in nz:
        np.add.at(M, (P[i, :], cols), r[i])
        np.add.at(M, (Q[:, i], cols), -s * r[i])
    return out_par, M


def _closure_pairs(group, generators, budget_seconds, progress):
    alg = group.algebra
    S = (EchelonSubspace(alg.N[0]), EchelonSubspace(alg.N[1]))
    basis = ([], [])
    work = []
    for g in generators:
        p = g.parity()
        v = g.vector(p)
        if S[p].insert(v):
            basis[p].append(v)
            work.append((v, p))
    start = time.monotonic()
    passes = 0
    complete = True
    while work:
        passes += 1
        new = []
        for v, p in work:
            for q in (0, 1):
                for u in list(basis[q]):
                    r, w = bracket_vectors(alg, v, p, u, q)
                    w = [as_scalar(int(x)) if not isinstance(x, Fraction) else x for x in w]
                    if S[r].insert(w):
                        basis[r].append(w)
                        new.append((w, r))
        work = new
        _report(progress, f"pass {passes}: dims even={S[0].dim} odd={S[1].dim}")
        if budget_seconds is not None and time.monotonic() - start > budget_seconds and work:
            complete = False
            break
    rows = tuple(integer_rows(basis[p]) for p in (0, 1))
    return GradedSubspace(group, rows, complete, passes, list(generators))


# ---------------------------------------------------------------------------
# derived subalgebras


def _kernel_matrix(alg, a, p, q):
    """K[i, j] = a[s_i r_j] - (-1)^{pq} a[r_j s_i]: the bracket paired against a."""
    a = np.asarray(a, dtype=object)
    P = alg.product_table(p, q)
    Q = alg.product_table(q, p)
    s = -1 if (p & q) else 1
    return a[P] - s * a[Q.T]


def _to_fmpz(rows):
    rows = [list(map(int, r)) for r in rows]
    return flint.fmpz_mat(rows) if rows else None


def bracket_certificate(S, C, pairs=None):
    """Pairs of basis rows of S whose bracket escapes span(C).

    For each vector a annihilating C (parity r) and each parity pair (p, q)
    with p + q = r, the matrix G_p K_a G_q^T lists <a, [g_i, g_j]> for all
    basis rows g_i, g_j.  An empty result proves [S, S] is inside C.
    """
    alg = S.algebra
    bad = []
    for r in (0, 1):
        ann = C.annihilator(r)
        if not ann:
            continue
        for p, q in ((0, 0), (1, 1)) if r == 0 else ((0, 1),):
            if pairs is not None and (p, q) not in pairs:
                continue
            Gp, Gq = _to_fmpz(S.rows[p]), _to_fmpz(S.rows[q])
            if Gp is None or Gq is None:
                continue
            for a in ann:
                K = flint.fmpz_mat([[int(x) for x in row] for row in _kernel_matrix(alg, a, p, q)])
                B = Gp * K * Gq.transpose()
                for i, row in enumerate(B.tolist()):
                    for j, x in enumerate(row):
                        if x != 0:
                            bad.append((p, i, q, j))
    return bad


def is_closed(S):
    return not bracket_certificate(S, S)


def derived(S, seed=0, extra=2, progress=None):
    """[S, S] for a subalgebra S of a group algebra.

    Candidates come from ad_x(S) over the attached generators of S when
    available (for a closure these span [S, S] already) and otherwise from
    brackets of each basis row with a few random combinations.  An exact
    certificate then checks every basis pair and adds any missing bracket,
    so the result never depends on the candidates being complete.
    """
    if not isinstance(S, GradedSubspace):
        return derived_matrix(S)
    if not S.complete:
        raise InvalidArgument("derived of a partial closure")
    if bracket_certificate(S, S):
        raise InvalidArgument("subspace is not closed under the bracket")
    alg = S.algebra
    rows = ([], [])
    vecs = [[np.array(r, dtype=np.int64) for r in S.rows[p]] for p in (0, 1)]
    if S.generators:
        for x in _integral(S.generators):
            for p in (0, 1):
                for f in vecs[p]:
                    q, v = _ad(alg, x, f, p)
                    if v.any():
                        rows[q].append(v.tolist())
    else:
        rng = random.Random(seed)
        for p in (0, 1):
            if not S.rows[p]:
                continue
            for q in (0, 1):
                if not vecs[q]:
                    continue
                B = flint.fmpz_mat(S.rows[p])
                for _ in range(extra):
                    comb = sum(rng.randint(-1, 1) * f for f in vecs[q])
                    r, M = ad_matrix(alg, comb, q, p)
                    rows[r].extend(_primitive(v) for v in (B * flint.fmpz_mat(M.T.tolist())).tolist()
                                   if any(v))
    D = _span(S.group, rows)
    while True:
        bad = bracket_certificate(S, D)
        _report(progress, f"derived: dims={D.dims}, {len(bad)} missing brackets")
        if not bad:
            return D
        for p, i, q, j in bad[:64]:
            r, w = bracket_vectors(alg, S.rows[p][i], p, S.rows[q][j], q)
            rows[r].append([int(x) for x in w])
        D = _span(S.group, rows)


def _primitive(v):
    v = [int(x) for x in v]
    g = gcd(*v)
    return [x // g for x in v] if g > 1 else v


def _span(group, rows):
    out = []
    for p in (0, 1):
        keep = independent_subset(rows[p])
        out.append([rows[p][k] for k in keep])
    return GradedSubspace(group, out)


def even_part(S):
    return GradedSubspace(S.group, (S.rows[0], []), S.complete)


def whole_algebra(group):
    """CG itself; the group generators are attached to seed derived computations."""
    alg = group.algebra
    rows = tuple([[int(i == k) for i in range(alg.N[p])] for k in range(alg.N[p])] for p in (0, 1))
    gens = [GroupAlgebraElement.basis(group, g) for g in group.generators]
    return GradedSubspace(group, rows, generators=gens)


# ---------------------------------------------------------------------------
# centers


def center(group, graded=True, subspace=None, test_elements=None):
    """Elements of ``subspace`` (default all of CG) that (super)commute with the test elements.

    The test elements default to the group generators, which suffices for
    the whole algebra; for a Lie subalgebra pass its generating set.
    """
    alg = group.algebra
    if test_elements is None:
        test_elements = [GroupAlgebraElement.basis(group, g) for g in group.generators]
    test_elements = _integral(test_elements)
    out = ([], [])
    for p in (0, 1):
        if subspace is None:
            basis = [[int(i == k) for i in range(alg.N[p])] for k in range(alg.N[p])]
        else:
            basis = subspace.rows[p]
        if not basis:
            continue
        B = np.array(basis, dtype=np.int64)
        images = []
        for y in test_elements:
            q = y.parity()
            s = -1 if (graded and p & q) else 1
            # a y - s y a, computed row-wise through gathers
            acc = None
            for g, c in y.coeffs.items():
                R = alg.right_gather(g, p)
                L = alg.left_gather(g, p)
                term = (B[:, R] - s * B[:, L]) * int(c)
                acc = term if acc is None else acc + term
            images.append(acc)
        M = np.concatenate(images, axis=1)  # one row per basis vector
        X, nullity = flint.fmpz_mat(M.T.tolist()).nullspace()
        cols = X.tolist()
        for k in range(nullity):
            c = np.array([int(cols[i][k]) for i in range(len(basis))], dtype=object)
            out[p].append([int(x) for x in c @ np.array(basis, dtype=object)])
    return _span(group, out)


def graded_center(group, subspace=None, test_elements=None):
    return center(group, True, subspace, test_elements)


def ungraded_center(group, subspace=None, test_elements=None):
    return center(group, False, subspace, test_elements)


def is_subspace(A, B):
    """span(A) inside span(B), parity by parity."""
    return all(B.contains_vector(r, p) for p in (0, 1) for r in A.rows[p])


# ---------------------------------------------------------------------------
# matrix superalgebras


def grading_matrix(m, n):
    return ExactMatrix.diag([1] * m + [-1] * n)


def matrix_parity(X, grading):
    """0 or 1 if X is homogeneous for the grading, None otherwise."""
    conj = grading @ X @ grading
    if conj == X:
        return 0
    if conj == -X:
        return 1
    return None


def matrix_bracket(X, p, Y, q):
    s = -1 if (p & q) else 1
    return (X @ Y) - (Y @ X).scale(s), (p + q) & 1


def _unit(d, i, j):
    return ExactMatrix([[int(r == i and c == j) for c in range(d)] for r in range(d)])


def gl_basis(m, n):
    d = m + n
    return [(_unit(d, i, j), int((i < m) != (j < m))) for i in range(d) for j in range(d)]


def sl_odd_part(m, n):
    return [(X, p) for X, p in gl_basis(m, n) if p == 1]


def _q_odd(B):
    m = B.nrows
    Z = ExactMatrix.zeros(m)
    return ExactMatrix.blocks([[Z, B], [B, Z]])


def sq_odd_part(m):
    """Odd part of sq(m): [[0, B], [B, 0]] with trace(B) = 0."""
    out = []
    for i in range(m):
        for j in range(m):
            if i != j:
                out.append((_q_odd(_unit(m, i, j)), 1))
    for i in range(m - 1):
        out.append((_q_odd(_unit(m, i, i) - _unit(m, i + 1, i + 1)), 1))
    return out


def odd_no_diagonal(m):
    """[[0, B], [B, 0]] with B a zero-diagonal matrix unit."""
    return [(_q_odd(_unit(m, i, j)), 1) for i in range(m) for j in range(m) if i != j]


class MatrixSubspace:
    """Graded subspace of square matrices, stored as echelon bases of flattened matrices."""

    def __init__(self, size, grading):
        self.size = size
        self.grading = grading
        self.parts = (EchelonSubspace(size * size), EchelonSubspace(size * size))
        self.basis = ([], [])

    def insert(self, X, p):
        if self.parts[p].insert(X.flatten()):
            self.basis[p].append(X)
            return True
        return False

    @property
    def dims(self):
        return (self.parts[0].dim, self.parts[1].dim)

    @property
    def dim(self):
        return sum(self.dims)

    def contains(self, X, p):
        return self.parts[p].contains(X.flatten())

    def __repr__(self):
        return f"MatrixSubspace(dims={self.dims})"


def matrix_closure(generators, grading):
    """Bracket closure of parity-tagged matrices, by the pairwise worklist."""
    d = grading.nrows
    S = MatrixSubspace(d, grading)
    work = []
    for X, p in generators:
        if not X.is_zero() and matrix_parity(X, grading) != p:
            raise InvalidArgument(f"generator is not homogeneous of parity {p}")
        if S.insert(X, p):
            work.append((X, p))
    while work:
        new = []
        for X, p in work:
            for q in (0, 1):
                for Y in list(S.basis[q]):
                    Z, r = matrix_bracket(X, p, Y, q)
                    if S.insert(Z, r):
                        new.append((Z, r))
        work = new
    return S


def derived_matrix(S):
    D = MatrixSubspace(S.size, S.grading)
    for p in (0, 1):
        for q in (0, 1):
            for X in S.basis[p]:
                for Y in S.basis[q]:
                    Z, r = matrix_bracket(X, p, Y, q)
                    D.insert(Z, r)
    return D


def sl_dimension(m, n):
    return (m + n) ** 2 - 1


def sq_dimension(m):
    return 2 * m * m - 1


def gl_closure_of(basis_pairs, grading):
    """Span (not closure) of parity-tagged matrices, for membership checks."""
    S = MatrixSubspace(grading.nrows, grading)
    for X, p in basis_pairs:
        S.insert(X, p)
    return S


def sl_subspace(m, n):
    """sl(m|n): supertrace-zero matrices."""
    d = m + n
    out = [(X, p) for X, p in gl_basis(m, n) if p == 1]
    out += [(_unit(d, i, j), 0) for i in range(d) for j in range(d)
            if i != j and (i < m) == (j < m)]
    diag = [1] * m + [-1] * n
    for i in range(d - 1):
        # E_ii - str-sign adjusted E_{i+1,i+1}
        X = _unit(d, i, i).scale(diag[i]) - _unit(d, i + 1, i + 1).scale(diag[i + 1])
        out.append((X, 0))
    return gl_closure_of(out, grading_matrix(m, n))


def sq_subspace(m):
    """sq(m) = {[[A, B], [B, A]] : trace(B) = 0}."""
    out = list(sq_odd_part(m))
    Z = ExactMatrix.zeros(m)
    for i in range(m):
        for j in range(m):
            A = _unit(m, i, j)
            out.append((ExactMatrix.blocks([[A, Z], [Z, A]]), 0))
    return gl_closure_of(out, grading_matrix(m, m))
