"""Exact scalars, dense matrices and row reduction.

Scalars are ``fractions.Fraction`` or :class:`Quad` (an element a + b*sqrt(d)
of a quadratic field).  Heavy rational work (rank, rref, nullspaces of
matrices with hundreds of rows) is delegated to FLINT through python-flint;
everything else is plain Python.
"""
from fractions import Fraction
from math import lcm
import re

import flint
import numpy as np
from sympy import factorint

from .errors import FieldMismatch, InvalidArgument


class Quad:
    """a + b*sqrt(d) with rational a, b and squarefree integer d != 0, 1.

    Use :func:`quad` to build values; it collapses to a Fraction when b == 0.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = int(d)

    def _coerce(self, other):
        if isinstance(other, Quad):
            if other.d != self.d:
                raise FieldMismatch(f"sqrt({self.d}) and sqrt({other.d}) mixed")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad(self.a + o[0], self.b + o[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return Quad(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad(self.a - o[0], self.b - o[1], self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad(o[0] - self.a, o[1] - self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = o
        return quad(self.a * a + self.d * self.b * b, self.a * b + self.b * a, self.d)

    __rmul__ = __mul__

    def conjugate(self):
        return Quad(self.a, -self.b, self.d)

    def norm(self):
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self):
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("Quad division by zero")
        return quad(self.a / nrm, -self.b / nrm, self.d)

    def __truediv__(self, other):
        if isinstance(other, Quad):
            self._coerce(other)
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return quad(self.a / other, self.b / other, self.d)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Fraction(1), self
        while k:
            if k & 1:
                out = base * out
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, Quad):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Quad({format_scalar(self)})"


def quad(a, b, d):
    a, b = Fraction(a), Fraction(b)
    if b == 0 or d == 0:
        return a
    return Quad(a, b, d)


def as_scalar(x):
    if isinstance(x, (Fraction, Quad)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, (flint.fmpq, flint.fmpz)):
        return Fraction(int(x.p), int(x.q)) if isinstance(x, flint.fmpq) else Fraction(int(x))
    raise InvalidArgument(f"not an exact scalar: {x!r}")


def discriminant(x):
    return x.d if isinstance(x, Quad) else 0


def _frac_str(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x):
    """Canonical text: "p/q" for rationals, "a+b√d" for quadratic elements."""
    if isinstance(x, Quad):
        b = _frac_str(x.b)
        sign = "" if b.startswith("-") else "+"
        return f"{_frac_str(x.a)}{sign}{b}√{x.d}"
    return _frac_str(x)


_QUAD = re.compile(r"^\s*([-+]?\d+(?:/\d+)?)\s*([-+]\s*\d+(?:/\d+)?)\s*(?:\*\s*)?√\s*\(?\s*(-?\d+)\s*\)?\s*$")


def parse_scalar(text):
    text = str(text).strip()
    m = _QUAD.match(text)
    if m:
        return quad(Fraction(m.group(1)), Fraction(m.group(2).replace(" ", "")), int(m.group(3)))
    try:
        return Fraction(text)
    except ValueError:
        raise InvalidArgument(f"cannot parse scalar {text!r}") from None


def squarefree_decomposition(c):
    """Write a nonzero rational c as r**2 * d with rational r > 0 and squarefree integer d."""
    c = Fraction(c)
    if c == 0:
        raise InvalidArgument("zero has no squarefree decomposition")
    # c = p/q = p*q / q^2
    m = c.numerator * c.denominator
    d = -1 if m < 0 else 1
    r = Fraction(1, c.denominator)
    for prime, e in factorint(abs(m)).items():
        r *= prime ** (e // 2)
        if e % 2:
            d *= prime
    return r, d


def sqrt_extend(c):
    """An exact square root of the nonzero rational c, in Q(sqrt(d)) with d the squarefree core."""
    r, d = squarefree_decomposition(c)
    return r if d == 1 else Quad(0, r, d)


def common_discriminant(values):
    d = 0
    for x in values:
        if isinstance(x, Quad):
            if d and x.d != d:
                raise FieldMismatch(f"sqrt({d}) and sqrt({x.d}) mixed")
            d = x.d
    return d


_ZERO = Fraction(0)
_ONE = Fraction(1)


class ExactMatrix:
    """Immutable dense matrix of exact scalars."""

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(as_scalar(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise InvalidArgument("ragged matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._hash = None

    @classmethod
    def _raw(cls, rows, ncols):
        m = cls.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, r, c=None):
        c = r if c is None else c
        return cls._raw(tuple((_ZERO,) * c for _ in range(r)), c)

    @classmethod
    def identity(cls, n):
        return cls.diag([_ONE] * n)

    @classmethod
    def diag(cls, entries):
        entries = [as_scalar(x) for x in entries]
        k = len(entries)
        return cls._raw(tuple(tuple(entries[i] if i == j else _ZERO for j in range(k))
                              for i in range(k)), k)

    @classmethod
    def blocks(cls, grid):
        """Assemble a block matrix from a grid of ExactMatrix blocks."""
        rows = []
        for brow in grid:
            for i in range(brow[0].nrows):
                rows.append(tuple(x for b in brow for x in b.rows[i]))
        return cls._raw(tuple(rows), len(rows[0]) if rows else 0)

    @classmethod
    def from_flint(cls, m):
        return cls._raw(tuple(tuple(_from_flint_scalar(x) for x in r) for r in m.tolist()), m.ncols())

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def tolist(self):
        return [list(r) for r in self.rows]

    def discriminant(self):
        return common_discriminant(x for r in self.rows for x in r)

    def is_rational(self):
        return all(not isinstance(x, Quad) for r in self.rows for x in r)

    def _check_same(self, other):
        if self.shape != other.shape:
            raise InvalidArgument(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        return ExactMatrix._raw(tuple(tuple(a + b for a, b in zip(r, s))
                                      for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other):
        self._check_same(other)
        return ExactMatrix._raw(tuple(tuple(a - b for a, b in zip(r, s))
                                      for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self):
        return ExactMatrix._raw(tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def scale(self, c):
        c = as_scalar(c)
        return ExactMatrix._raw(tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise InvalidArgument(f"cannot multiply {self.shape} by {other.shape}")
        if self.nrows * self.ncols * other.ncols > 4000 and self.is_rational() and other.is_rational():
            return ExactMatrix.from_flint(self.to_flint() * other.to_flint())
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(sum((a * c[k] for k, a in nz), _ZERO) for c in cols))
        return ExactMatrix._raw(tuple(out), other.ncols)

    def apply(self, v):
        return tuple(sum((a * x for a, x in zip(r, v) if a), _ZERO) for r in self.rows)

    def transpose(self):
        return ExactMatrix._raw(tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    @property
    def T(self):
        return self.transpose()

    def trace(self):
        if self.nrows != self.ncols:
            raise InvalidArgument("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), _ZERO)

    def submatrix(self, rows, cols):
        return ExactMatrix._raw(tuple(tuple(self.rows[i][j] for j in cols) for i in rows), len(cols))

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    def is_diagonal(self):
        return all(not x for i, r in enumerate(self.rows) for j, x in enumerate(r) if i != j)

    def flatten(self):
        return tuple(x for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.rows))
        return self._hash

    def to_flint(self):
        if not self.is_rational():
            raise FieldMismatch("matrix has irrational entries")
        return flint.fmpq_mat(self.nrows, self.ncols,
                              [flint.fmpq(x.numerator, x.denominator) for r in self.rows for x in r])

    def to_json(self):
        return [[format_scalar(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data):
        return cls([[parse_scalar(x) for x in r] for r in data], ncols=len(data[0]) if data else 0)

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.rows)
        return f"ExactMatrix[{body}]"


def _from_flint_scalar(x):
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    return Fraction(int(x))


def rref(M):
    """Reduced row-echelon form and rank; pivots are the first nonzero entries."""
    common_discriminant(M.flatten())
    rows = [list(r) for r in M.rows]
    rank, pivots = _rref_inplace(rows, M.ncols)
    return ExactMatrix._raw(tuple(tuple(r) for r in rows), M.ncols), rank


def _rref_inplace(rows, ncols, stop=None):
    """Gauss-Jordan elimination in place on a list of mutable rows.

    Pivot columns are searched left to right, stopping before column ``stop``
    (defaults to all columns).  Returns (rank, pivot columns).
    """
    stop = ncols if stop is None else stop
    rank = 0
    pivots = []
    for c in range(stop):
        p = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        piv = rows[rank]
        inv = 1 / piv[c]
        if inv != 1:
            piv[:] = [x * inv for x in piv]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], piv)]
        pivots.append(c)
        rank += 1
        if rank == len(rows):
            break
    return rank, pivots


class EchelonSubspace:
    """A subspace kept as fully reduced echelon rows (sparse dicts keyed by column)."""

    def __init__(self, ambient_dim, rows=None):
        self.ambient_dim = ambient_dim
        self._rows = {}  # pivot column -> row dict
        for v in rows or ():
            self.insert(v)

    def copy(self):
        out = EchelonSubspace(self.ambient_dim)
        out._rows = {p: dict(r) for p, r in self._rows.items()}
        return out

    @property
    def dim(self):
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self):
        return sorted(self._rows)

    def _sparse(self, v):
        if isinstance(v, dict):
            return {k: as_scalar(x) for k, x in v.items() if x}
        if len(v) != self.ambient_dim:
            raise InvalidArgument(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        return {k: as_scalar(x) for k, x in enumerate(v) if x}

    def reduce(self, v):
        """Residual of v after eliminating every pivot column."""
        r = self._sparse(v)
        for p in sorted(self._rows):
            f = r.get(p)
            if f:
                for k, x in self._rows[p].items():
                    y = r.get(k, _ZERO) - f * x
                    if y:
                        r[k] = y
                    else:
                        r.pop(k, None)
        return r

    def contains(self, v):
        return not self.reduce(v)

    __contains__ = contains

    def insert(self, v):
        """Add v to the span in place; returns True iff the dimension grew."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {k: x * inv for k, x in r.items()}
        for q, row in self._rows.items():
            f = row.get(p)
            if f:
                for k, x in r.items():
                    y = row.get(k, _ZERO) - f * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        self._rows[p] = r
        return True

    def basis(self):
        """Dense basis rows in pivot order."""
        return [tuple(self._rows[p].get(k, _ZERO) for k in range(self.ambient_dim))
                for p in sorted(self._rows)]

    def sparse_basis(self):
        return [dict(self._rows[p]) for p in sorted(self._rows)]

    def as_matrix(self):
        return ExactMatrix._raw(tuple(self.basis()), self.ambient_dim)

    def __eq__(self, other):
        if not isinstance(other, EchelonSubspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis() == other.basis()

    def __repr__(self):
        return f"EchelonSubspace(dim={self.dim}, ambient={self.ambient_dim})"


def subspace_insert(S, v):
    """Functional insert: returns (new subspace, grew) and leaves S untouched."""
    T = S.copy()
    grew = T.insert(v)
    return T, grew


class LinearSolution:
    """Solutions of A X = B: ``particular`` (None if inconsistent) plus nullspace of A."""

    def __init__(self, particular, nullspace, consistent):
        self.particular = particular
        self.nullspace = nullspace
        self.consistent = consistent

    @property
    def nullity(self):
        return len(self.nullspace)

    def __repr__(self):
        return f"LinearSolution(consistent={self.consistent}, nullity={self.nullity})"


def solve_linear(A, B):
    """Solve A X = B exactly over the field generated by the entries."""
    if A.nrows != B.nrows:
        raise InvalidArgument(f"A has {A.nrows} rows but B has {B.nrows}")
    common_discriminant(A.flatten() + B.flatten())
    n = A.ncols
    rows = [list(a) + list(b) for a, b in zip(A.rows, B.rows)]
    rank, pivots = _rref_inplace(rows, n + B.ncols, stop=n)
    consistent = all(not any(rows[i][n:]) for i in range(rank, len(rows)))
    null = _nullspace_from_rref(rows, pivots, n)
    particular = None
    if consistent:
        X = [[_ZERO] * B.ncols for _ in range(n)]
        for i, p in enumerate(pivots):
            X[p] = rows[i][n:]
        particular = ExactMatrix._raw(tuple(tuple(r) for r in X), B.ncols)
    return LinearSolution(particular, null, consistent)


def _nullspace_from_rref(rows, pivots, n):
    free = [c for c in range(n) if c not in set(pivots)]
    out = []
    for f in free:
        v = [_ZERO] * n
        v[f] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        out.append(tuple(v))
    return out


def nullspace(A):
    """Basis of {x : A x = 0}."""
    common_discriminant(A.flatten())
    rows = [list(r) for r in A.rows]
    _, pivots = _rref_inplace(rows, A.ncols)
    return _nullspace_from_rref(rows, pivots, A.ncols)


# ---------------------------------------------------------------------------
# FLINT-backed kernels for large rational systems


def integer_rows(vectors):
    """Scale rational vectors to primitive integer rows (same span, row by row)."""
    out = []
    for v in vectors:
        den = 1
        for x in v:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in v])
    return out


def independent_subset(rows):
    """Indices of the greedy (first-come) maximal independent subset of integer rows."""
    if not rows:
        return []
    M = flint.fmpz_mat(rows).transpose()
    R, _, rank = M.rref()
    piv = []
    c = 0
    for r in range(rank):
        while R[r, c] == 0:
            c += 1
        piv.append(c)
        c += 1
    return piv


def rank_of(rows, ncols=None):
    if not rows:
        return 0
    return flint.fmpz_mat(rows).rank()


def annihilator(rows, ncols):
    """Integer basis of {a : <a, r> = 0 for every row r}."""
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    M = flint.fmpz_mat(rows)
    X, nullity = M.nullspace()
    cols = X.tolist()
    return [[int(cols[i][k]) for i in range(ncols)] for k in range(nullity)]


def flint_rref_rows(rows, ncols):
    """Exact reduced echelon basis (as Fraction tuples) of the span of integer rows."""
    if not rows:
        return []
    R, den, rank = flint.fmpz_mat(rows).rref()
    out = []
    d = int(den)
    for r in R.tolist()[:rank]:
        out.append(tuple(Fraction(int(x), d) for x in r))
    return out


def echelon_from_rows(rows, ncols):
    """EchelonSubspace spanned by integer rows, reduced with FLINT."""
    S = EchelonSubspace(ncols)
    for r in flint_rref_rows(rows, ncols):
        p = next(k for k, x in enumerate(r) if x)
        S._rows[p] = {k: x for k, x in enumerate(r) if x}
    return S


class ModularEchelon:
    """Reduced echelon basis modulo a prime, for fast independence screening.

    Integer rows that are independent mod p are independent over Q, so the
    dimension reached here is an exact lower bound for the rational span of
    everything accepted.  Arithmetic runs in float64 BLAS: with p < 2**20 every
    dot product of reduced residues stays below 2**53 and is exact.
    """

    PRIME = 1048573

    def __init__(self, ncols, prime=PRIME):
        if (ncols + 1) * (prime - 1) ** 2 >= 2 ** 53:
            raise InvalidArgument("prime too large for exact float64 reduction")
        self.ncols = ncols
        self.prime = prime
        self.basis = np.zeros((0, ncols))
        self.pivots = np.zeros(0, dtype=np.int64)

    @property
    def dim(self):
        return len(self.pivots)

    def _mod(self, A):
        return np.mod(A, self.prime)

    def reduce(self, rows):
        C = self._mod(np.asarray(rows, dtype=np.float64).reshape(-1, self.ncols))
        if self.dim:
            C = self._mod(C - self._mod(C[:, self.pivots] @ self.basis))
        return C

    def contains(self, row):
        return not self.reduce(row).any()

    def insert_batch(self, rows):
        """Add rows in order; returns the indices of the rows that enlarged the span."""
        R = self.reduce(rows)
        live = np.nonzero(R.any(axis=1))[0]
        if not len(live):
            return []
        p = self.prime
        # greedy independent subset of the residuals: pivot columns of the transpose
        T = flint.nmod_mat(R[live].T.astype(np.int64).tolist(), p)
        rt = T.rref()[0]
        picked, c = [], 0
        for r, row in enumerate(rt.tolist()):
            while c < len(live) and int(row[c]) == 0:
                c += 1
            if c == len(live):
                break
            picked.append(int(live[c]))
            c += 1
        new, rank = flint.nmod_mat(R[picked].astype(np.int64).tolist(), p).rref()
        new = np.array([[int(x) for x in r] for r in new.tolist()[:rank]], dtype=np.float64)
        piv = np.array([int(np.flatnonzero(r)[0]) for r in new], dtype=np.int64)
        if self.dim:
            self.basis = self._mod(self.basis - self._mod(self.basis[:, piv] @ new))
        self.basis = np.vstack([self.basis, new])
        self.pivots = np.concatenate([self.pivots, piv])
        return picked
