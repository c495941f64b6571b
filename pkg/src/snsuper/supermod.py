"""Simple supermodules W^lam of CS_n.

For a non-self-conjugate representative lam the ambient basis is the
seminormal basis of S^lam followed by that of S^lam'; every permutation acts
block-diagonally, the grading swaps the blocks through phi, and the odd
involution is J = diag(1, -1).  For self-conjugate lam the ambient space is
S^lam itself, graded by phi0 / sqrt(c).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import flint

from .combinatorics import Partition, _as_partition, classify, conjugate, covers, residue_sum
from .errors import Inconsistency, InvalidArgument, NotInQ
from .exactlinalg import ExactMatrix, rref, solve_linear, sqrt_extend, _ZERO
from .perms import transpositions
from .specht import (all_flint_matrices, flint_rep_of_permutation, intertwiner,
                     jucys_murphy, seminormal_rep)


def _block_diag(A, B):
    Z1 = ExactMatrix.zeros(A.nrows, B.ncols)
    Z2 = ExactMatrix.zeros(B.nrows, A.ncols)
    return ExactMatrix.blocks([[A, Z1], [Z2, B]])


def _flint_block_diag(A, B):
    a, b = A.nrows(), B.nrows()
    M = flint.fmpq_mat(a + b, a + b)
    for i in range(a):
        for j in range(a):
            M[i, j] = A[i, j]
    for i in range(b):
        for j in range(b):
            M[a + i, a + j] = B[i, j]
    return M


@dataclass(frozen=True)
class SuperModuleRep:
    shape: Partition
    kind: str  # "Q" or "M"
    dim: int
    grading: ExactMatrix
    odd_involution: object  # ExactMatrix for Q-kind, None for M-kind
    phi0: ExactMatrix  # rational operator proportional to the grading
    selfsquare: Fraction  # phi0^2 = selfsquare * id
    sqrt_c: object  # scalar with grading = phi0 / sqrt_c

    @property
    def n(self):
        return self.shape.n

    @property
    def parts(self):
        """Seminormal reps making up the ambient basis, in order."""
        if self.kind == "Q":
            return (seminormal_rep(self.shape), seminormal_rep(conjugate(self.shape)))
        return (seminormal_rep(self.shape),)

    def weights(self):
        """Content vector attached to each ambient basis vector."""
        return [a for R in self.parts for a in R.contents]

    def gen(self, i):
        mats = [R.gen(i) for R in self.parts]
        return mats[0] if len(mats) == 1 else _block_diag(*mats)

    def flint_action(self, sigma):
        mats = [flint_rep_of_permutation(R, sigma) for R in self.parts]
        return mats[0] if len(mats) == 1 else _flint_block_diag(*mats)

    def action(self, sigma):
        return ExactMatrix.from_flint(self.flint_action(sigma))

    def all_flint_actions(self):
        tables = [all_flint_matrices(R) for R in self.parts]
        if len(tables) == 1:
            return tables[0]
        return {s: _flint_block_diag(tables[0][s], tables[1][s]) for s in tables[0]}

    def field(self):
        return self.grading.discriminant()


@lru_cache(maxsize=None)
def supermodule(lam):
    lam = _as_partition(lam)
    if lam.n < 2:
        raise InvalidArgument("supermodules need n >= 2")
    table = classify(lam.n)
    if table.representative_of(lam) != lam:
        raise InvalidArgument(f"{lam} is not a class representative; use {table.representative_of(lam)}")
    phi = intertwiner(lam)
    f = phi.matrix.nrows
    if lam != conjugate(lam):
        back = intertwiner(conjugate(lam)).matrix
        Z = ExactMatrix.zeros(f)
        gamma = ExactMatrix.blocks([[Z, back], [phi.matrix, Z]])
        J = ExactMatrix.diag([1] * f + [-1] * f)
        return SuperModuleRep(lam, "Q", 2 * f, gamma, J, gamma, Fraction(1), Fraction(1))
    root = sqrt_extend(phi.selfsquare)
    gamma = phi.matrix.scale(1 / root)
    return SuperModuleRep(lam, "M", f, gamma, None, phi.matrix, phi.selfsquare, root)


def supermodules(n):
    return [supermodule(c.representative) for c in classify(n).classes]


def odd_trace(W, theta):
    """Half the trace of J theta; requires theta to commute with J."""
    if W.kind != "Q":
        raise InvalidArgument("odd trace is defined only for Q-kind supermodules")
    J = W.odd_involution
    if J @ theta != theta @ J:
        raise NotInQ("operator does not commute with J")
    return (J @ theta).trace() / 2


def supertrace(W, theta):
    """trace(Gamma theta); over Q(sqrt c) for M-kind."""
    return (W.grading @ theta).trace()


def supertrace_vanishes(W, theta):
    """Rational test for supertrace zero: trace(phi0 theta) == 0."""
    return not (W.phi0 @ theta).trace()


def parity_split(W, theta):
    """(even, odd) components of theta with respect to the grading, computed over Q."""
    conj = (W.phi0 @ theta @ W.phi0).scale(1 / W.selfsquare)
    return (theta + conj).scale(Fraction(1, 2)), (theta - conj).scale(Fraction(1, 2))


def tn_image(W):
    """W(T_n) with the sign s such that W(T_n) = s * res(lam) * J (Q-kind) or 0 (M-kind).

    The sign is 0 when the image is zero.
    """
    n = W.n
    total = None
    for t in transpositions(n):
        m = W.flint_action(t)
        total = m if total is None else total + m
    M = ExactMatrix.from_flint(total)
    res = residue_sum(W.shape)
    if W.kind == "M":
        if not M.is_zero():
            raise Inconsistency(f"T_n acts nontrivially on the M-kind module {W.shape}")
        return M, 0
    if res == 0:
        if not M.is_zero():
            raise Inconsistency(f"T_n should vanish on {W.shape}")
        return M, 0
    for s in (1, -1):
        if M == W.odd_involution.scale(s * res):
            return M, s
    raise Inconsistency(f"T_n is not +-res*J on {W.shape}")


def homogeneous_basis(W):
    """Basis change P whose columns are even vectors then odd vectors.

    Q-kind: (e_T +- Gamma e_T)/2 over tableaux T of the representative.
    M-kind: the same over the 'positive' weights (last content > 0, or = 0
    and lexicographically larger than its negative).
    """
    d = W.dim
    G = W.grading
    if W.kind == "Q":
        seeds = list(range(d // 2))
    else:
        seeds = [k for k, a in enumerate(W.weights())
                 if a[-1] > 0 or (a[-1] == 0 and a > tuple(-x for x in a))]
    cols = []
    for sgn in (1, -1):
        for k in seeds:
            e = [Fraction(int(i == k)) for i in range(d)]
            g = G.col(k)
            cols.append([(x + sgn * y) / 2 for x, y in zip(e, g)])
    return ExactMatrix([[c[i] for c in cols] for i in range(d)])


def supermatrix(W, sigma):
    """W(sigma) written in the homogeneous basis."""
    P = homogeneous_basis(W)
    return _inverse(P) @ W.action(sigma) @ P


def _inverse(P):
    sol = solve_linear(P, ExactMatrix.identity(P.nrows))
    if not sol.consistent or sol.nullity:
        raise Inconsistency("basis change is singular")
    return sol.particular


# ---------------------------------------------------------------------------
# restriction to S_{n-1}


@dataclass(frozen=True)
class BranchSummand:
    mu: Partition  # cover carrying the eigenvalue `residue`
    residue: int
    representative: Partition  # label of the target supermodule
    multiplicity: int  # 2 when the summand is W^mu + Pi W^mu
    dim: int
    parity_shifted: bool  # summand identified with Pi W^mu rather than W^mu


@dataclass(frozen=True)
class BranchReport:
    shape: Partition
    summands: tuple

    @property
    def dim(self):
        return sum(s.dim for s in self.summands)


def _solve_even_iso(src_gens, src_grading, src_weights, tgt_gens, tgt_grading, tgt_weights):
    """Invertible X with X A_i = B_i X and X Gamma_s = Gamma_t X, or None.

    Unknowns are restricted to pairs of equal weight since the Jucys-Murphy
    elements of S_{n-1} are diagonal in both bases.
    """
    ds, dt = len(src_weights), len(tgt_weights)
    if ds != dt:
        return None
    unknowns = [(b, a) for a in range(ds) for b in range(dt) if src_weights[a] == tgt_weights[b]]
    uidx = {u: k for k, u in enumerate(unknowns)}
    by_col = {}
    by_row = {}
    for (b, a), k in uidx.items():
        by_col.setdefault(a, []).append((b, k))
        by_row.setdefault(b, []).append((a, k))
    eqs = []
    for A, B in list(zip(src_gens, tgt_gens)) + [(src_grading, tgt_grading)]:
        # (X A - B X)[b, a] = sum_c X[b, c] A[c, a] - sum_c B[b, c] X[c, a]
        for a in range(ds):
            Acol = [(c, A.rows[c][a]) for c in range(ds) if A.rows[c][a]]
            for b in range(dt):
                row = {}
                for c, x in Acol:
                    k = uidx.get((b, c))
                    if k is not None:
                        row[k] = row.get(k, _ZERO) + x
                Brow = B.rows[b]
                for c, k in by_col.get(a, ()):
                    y = Brow[c]
                    if y:
                        row[k] = row.get(k, _ZERO) - y
                row = {k: v for k, v in row.items() if v}
                if row:
                    eqs.append(row)
    m = len(unknowns)
    if not eqs:
        eqs = [{}]
    A = ExactMatrix([[e.get(k, _ZERO) for k in range(m)] for e in eqs], ncols=m)
    sol = solve_linear(A, ExactMatrix.zeros(A.nrows, 1))
    basis = sol.nullspace
    if not basis:
        return None
    # a fixed generic combination; retry with other weights if singular
    for shift in range(1, 8):
        coeffs = [Fraction(shift + 3 * j) for j in range(len(basis))]
        x = [sum((c * v[k] for c, v in zip(coeffs, basis)), _ZERO) for k in range(m)]
        X = [[_ZERO] * ds for _ in range(dt)]
        for (b, a), k in uidx.items():
            X[b][a] = x[k]
        X = ExactMatrix(X)
        if rref(X)[1] == dt:
            return X
    return None


def _restricted_weights(weights, keep):
    return [weights[k][:-1] for k in keep]


def branch(W):
    """Restrict W^lam to S_{n-1} and identify each eigenspace summand."""
    n = W.n
    if n < 3:
        raise InvalidArgument("branching needs n >= 3")
    lam = W.shape
    weights = W.weights()
    d = W.dim
    if W.kind == "Q":
        Ln = _block_diag(jucys_murphy(W.parts[0], n), jucys_murphy(W.parts[1], n))
        op = W.odd_involution @ Ln
    else:
        Ln = jucys_murphy(W.parts[0], n)
        op = Ln @ Ln
    if not op.is_diagonal():
        raise Inconsistency("Jucys-Murphy operator is not diagonal")
    eig = [op.rows[k][k] for k in range(d)]
    table = classify(n - 1) if n - 1 >= 2 else None
    summands = []
    for mu, res in covers(lam):
        if W.kind == "M" and res < 0:
            continue
        value = Fraction(res) if W.kind == "Q" else Fraction(res * res)
        keep = [k for k in range(d) if eig[k] == value]
        src_gens = []
        for i in range(1, n - 1):
            G = W.gen(i)
            # invariance of the eigenspace
            if any(G.rows[r][c] for c in keep for r in range(d) if r not in set(keep)):
                raise Inconsistency(f"eigenspace {res} of {lam} is not S_(n-1)-stable")
            src_gens.append(G.submatrix(keep, keep))
        src_grading = W.grading.submatrix(keep, keep)
        src_weights = _restricted_weights(weights, keep)
        rep = table.representative_of(mu) if table else mu
        target = supermodule(rep) if table else None
        doubled = W.kind == "Q" and mu == conjugate(mu)
        found = None
        for shifted in (False, True):
            tg, tG, tw = _target(target, doubled, shifted, n - 1)
            X = _solve_even_iso(src_gens, src_grading, src_weights, tg, tG, tw)
            if X is not None:
                found = shifted
                break
        if found is None:
            raise Inconsistency(f"cannot identify the {res}-eigenspace of {lam} with W^{rep}")
        summands.append(BranchSummand(mu, res, rep, 2 if doubled else 1, len(keep), found))
    report = BranchReport(lam, tuple(summands))
    if report.dim != d:
        raise Inconsistency(f"branch summands of {lam} miss dimensions")
    return report


def _target(T, doubled, shifted, m):
    gens = [T.gen(i) for i in range(1, m)]
    G = T.grading
    w = [a for a in T.weights()]
    if doubled:
        gens = [_block_diag(g, g) for g in gens]
        G = _block_diag(G, -G)
        w = w + w
    if shifted:
        G = -G
    return gens, G, w


def group_dual_test(W):
    """Does an even invertible intertwiner W -> W* exist?  (W* : sigma -> W(sigma^-1)^T.)

    In the weight basis such a map is diagonal; sqrt(c) cancels from the
    grading condition, so the system is rational.
    """
    if W.kind != "M":
        raise InvalidArgument("group_dual_test expects an M-kind supermodule")
    d = W.dim
    eqs = []
    mats = [(W.gen(i), W.gen(i).transpose()) for i in range(1, W.n)]
    mats.append((W.phi0, W.phi0.transpose()))
    # X diagonal with entries x_k:  x_r A[r, c] - B[r, c] x_c = 0, only nonzero entries matter
    seen = set()
    for A, B in mats:
        for r in range(d):
            for c in range(d):
                a, b = A.rows[r][c], B.rows[r][c]
                if not a and not b:
                    continue
                row = {}
                if a:
                    row[r] = a
                if b:
                    row[c] = row.get(c, _ZERO) - b
                key = tuple(sorted((k, v) for k, v in row.items() if v))
                if key and key not in seen:
                    seen.add(key)
                    eqs.append(dict(key))
    M = ExactMatrix([[e.get(k, _ZERO) for k in range(d)] for e in eqs], ncols=d)
    null = solve_linear(M, ExactMatrix.zeros(M.nrows, 1)).nullspace
    # by Schur a nonzero solution is invertible; test a generic one anyway
    return _generic_invertible(null, d)


def _generic_invertible(null, d):
    if not null:
        return False
    x = [sum((Fraction(j + 1) * v[k] for j, v in enumerate(null)), _ZERO) for k in range(d)]
    return all(x)


def commutant_dimension(W):
    """Dimension of the ungraded commutant of the image, via flint nullspace."""
    d = W.dim
    gens = [W.gen(i).to_flint() for i in range(1, W.n)]
    blocks = []
    for G in gens:
        # X G - G X = 0 on vec(X) with row-major vec: (I kron G^T - G kron I)
        rows = []
        for r in range(d):
            for c in range(d):
                eq = [0] * (d * d)
                for k in range(d):
                    eq[r * d + k] += G[k, c]
                    eq[k * d + c] -= G[r, k]
                rows.append(eq)
        blocks.extend(rows)
    M = flint.fmpq_mat(len(blocks), d * d, [x for r in blocks for x in r])
    return d * d - M.rank()


def dimension_bound(lam):
    """(bound, exact): the exact dimension of W^lam for the small exceptions, else a lower bound."""
    lam = _as_partition(lam)
    n = lam.n
    if lam == conjugate(lam):
        if (n, lam.parts) in ((3, (2, 1)), (4, (2, 2))):
            return 2, True
        if (n, lam.parts) == (5, (3, 1, 1)):
            return 6, True
        return n + 3, False
    if lam.parts in ((n,), (1,) * n):
        return 2, True
    return 2 * n - 2, False
