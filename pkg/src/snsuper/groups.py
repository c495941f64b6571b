"""Finite supergroups realized as permutation groups, and their group-algebra coordinates."""
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import perms
from .errors import InvalidArgument


@dataclass(frozen=True)
class FiniteSupergroup:
    """A permutation group with a Z/2 grading given by an index-2 subgroup."""
    name: str
    degree: int
    elements: tuple
    grading: tuple  # grading[k] is the parity of elements[k]
    generators: tuple

    def parity(self, g):
        return self._parity[g]

    @cached_property
    def _parity(self):
        return dict(zip(self.elements, self.grading))

    @property
    def order(self):
        return len(self.elements)

    def __str__(self):
        return self.name

    @cached_property
    def algebra(self):
        return GroupAlgebra(self)


def _closure_of(gens, degree):
    e = perms.identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = perms.compose(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def symmetric_supergroup(n):
    if n < 1:
        raise InvalidArgument(f"S_n needs n >= 1, got {n}")
    els = tuple(sorted(perms.all_permutations(n)))
    gens = tuple(perms.adjacent(i, n) for i in range(1, n))
    return FiniteSupergroup(f"S{n}", n, els, tuple(perms.parity(p) for p in els), gens)


@lru_cache(maxsize=None)
def dihedral_supergroup(n):
    """Symmetries of the n-gon; rotations are even and reflections odd."""
    if n < 3:
        raise InvalidArgument(f"D_n needs n >= 3, got {n}")
    r = tuple((i + 1) % n for i in range(n))
    s = tuple((-i) % n for i in range(n))
    els = tuple(sorted(_closure_of((r, s), n)))
    rotations = set()
    g = perms.identity(n)
    for _ in range(n):
        rotations.add(g)
        g = perms.compose(g, r)
    return FiniteSupergroup(f"D{n}", n, els, tuple(0 if x in rotations else 1 for x in els), (r, s))


class GroupAlgebra:
    """Coordinates on CG split by parity; each part is ordered lexicographically."""

    def __init__(self, group):
        self.group = group
        self.byp = ([], [])
        for g, p in zip(group.elements, group.grading):
            self.byp[p].append(g)
        self.byp = tuple(tuple(sorted(b)) for b in self.byp)
        self.idx = tuple({g: k for k, g in enumerate(b)} for b in self.byp)
        self.N = (len(self.byp[0]), len(self.byp[1]))
        self._prod = {}
        self._gather = {}

    def parity(self, g):
        return self.group.parity(g)

    def locate(self, g):
        p = self.group.parity(g)
        return p, self.idx[p][g]

    def product_table(self, p, q):
        """table[i, j] = index (in parity p+q) of byp[p][i] * byp[q][j]."""
        key = (p, q)
        if key not in self._prod:
            r = (p + q) & 1
            target = self.idx[r]
            self._prod[key] = np.array([[target[perms.compose(a, b)] for b in self.byp[q]]
                                        for a in self.byp[p]], dtype=np.int64)
        return self._prod[key]

    def ad_gather(self, x, p):
        """Index arrays (L, R, s) with [x, f][t] = f[L[t]] - s * f[R[t]] for f of parity p.

        x is a group element of parity q; the result has parity p + q and
        s = (-1)^(p q).
        """
        key = (x, p)
        if key not in self._gather:
            q = self.parity(x)
            xi = perms.inverse(x)
            src = self.idx[p]
            out = self.byp[(p + q) & 1]
            L = np.array([src[perms.compose(xi, t)] for t in out], dtype=np.int64)
            R = np.array([src[perms.compose(t, xi)] for t in out], dtype=np.int64)
            self._gather[key] = (L, R, -1 if p & q else 1)
        return self._gather[key]

    def right_gather(self, x, p):
        """Index array G with (f x)[t] = f[G[t]] for f of parity p."""
        q = self.parity(x)
        xi = perms.inverse(x)
        return np.array([self.idx[p][perms.compose(t, xi)] for t in self.byp[(p + q) & 1]],
                        dtype=np.int64)

    def left_gather(self, x, p):
        q = self.parity(x)
        xi = perms.inverse(x)
        return np.array([self.idx[p][perms.compose(xi, t)] for t in self.byp[(p + q) & 1]],
                        dtype=np.int64)
