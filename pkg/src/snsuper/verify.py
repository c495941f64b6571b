"""Theorem checkers returning exact pass/fail reports."""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
import json
import random
import time

import flint
import numpy as np

from . import liesuper as ls
from .combinatorics import (classify, conjugate, covers, diagonal_parity, partitions,
                            residue_sum, standard_tableaux)
from .errors import Inconsistency
from .exactlinalg import ExactMatrix
from .groups import dihedral_supergroup, symmetric_supergroup
from .perms import all_permutations, compose
from .specht import (flint_rep_of_permutation, intertwiner, jucys_murphy, seminormal_rep)
from .supermod import (branch, dimension_bound, group_dual_test, supermodule,
                       supermodules, tn_image)


@dataclass
class Check:
    name: str
    expected: str
    actual: str
    passed: bool
    millis: int = 0

    def to_json(self):
        return {"name": self.name, "expected": self.expected, "actual": self.actual,
                "pass": bool(self.passed), "millis": int(self.millis)}


@dataclass
class VerificationReport:
    n: object  # int, or None for checks not tied to a degree
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_json(self):
        return {"n": self.n, "checks": [c.to_json() for c in self.checks], "pass": self.passed}


@dataclass
class VerifyConfig:
    max_n: int = 6
    include_7: bool = False
    budget_seconds: float = 3600.0
    threads: int = 1
    progress: bool = False
    seminormal_max: int = 8
    branching_max: int = 7
    duality_max: int = 8
    dihedral_max: int = 10


def _timed(name, expected, fn):
    t0 = time.perf_counter()
    try:
        actual, ok = fn()
    except Inconsistency as exc:
        actual, ok = f"inconsistency: {exc}", False
    return Check(name, str(expected), str(actual), bool(ok), round(1000 * (time.perf_counter() - t0)))


def _counts(n):
    table = classify(n)
    return len(table.E), len(table.F)


# ---------------------------------------------------------------------------
# cached heavy objects


MODULAR_FROM = 7  # rational rref of thousands of columns is memory bound; screen mod p instead


@lru_cache(maxsize=None)
def transposition_closure(n, budget_seconds=None, progress=False):
    selection = "modular" if n >= MODULAR_FROM else "rational"
    return ls.closure(ls.transposition_elements(n), budget_seconds=budget_seconds, progress=progress,
                      selection=selection)


@lru_cache(maxsize=None)
def derived_group_algebra(n):
    return ls.derived(ls.whole_algebra(symmetric_supergroup(n)))


# ---------------------------------------------------------------------------
# census


def dihedral_expected(n):
    return (n // 2 - 1, 2) if n % 2 == 0 else (n // 2, 1)


def check_block_census(group):
    """(number of M-blocks, number of Q-blocks) from the graded and ungraded centers."""
    even = ls.graded_center(group).dims[0]
    q = ls.ungraded_center(group).dims[1]
    return even - q, q


def census_checks(group, expected):
    return [_timed(f"census {group}", expected,
                   lambda: (lambda got: (got, got == tuple(expected)))(check_block_census(group)))]


# ---------------------------------------------------------------------------
# main theorem


def check_main_theorem(n, budget_seconds=None, progress=False):
    fact = factorial(n)
    E, F = _counts(n)
    checks = []
    t0 = time.perf_counter()
    S = transposition_closure(n, budget_seconds, progress)
    ms = round(1000 * (time.perf_counter() - t0))
    tag = "" if S.complete else " (partial: budget exhausted)"
    checks.append(Check("closure dim", str(fact - E - F + 1), f"{S.dim}{tag}",
                        S.complete and S.dim == fact - E - F + 1, ms))
    checks.append(Check("closure even dim", str(fact // 2 - F), f"{S.dims[0]}{tag}",
                        S.complete and S.dims[0] == fact // 2 - F))
    checks.append(Check("closure odd dim", str(fact // 2 - E + 1), f"{S.dims[1]}{tag}",
                        S.complete and S.dims[1] == fact // 2 - E + 1))
    if not S.complete:
        return checks
    Tn = ls.transposition_sum(n)
    if S.modular is not None:
        # rows are exact brackets independent mod p, hence over Q: the dimension is a
        # certified lower bound, matching the upper bound dim D(CS_n) + 1
        v = np.array([int(x) for x in Tn.vector(1)])
        checks.append(_timed("T_n in closure (mod p)", True, lambda: (lambda ok: (ok, ok))(S.modular[1].contains(v))))
        return checks
    checks.append(_timed("T_n in closure", True, lambda: (Tn in S, Tn in S)))
    D = derived_group_algebra(n)
    checks.append(_timed("D(CS_n) dims", (fact // 2 - F, fact // 2 - E), lambda: (D.dims, D.dims == (fact // 2 - F, fact // 2 - E))))
    checks.append(_timed("D(CS_n) inside closure", True, lambda: (lambda ok: (ok, ok))(ls.is_subspace(D, S))))
    checks.append(_timed("T_n outside D(CS_n)", True, lambda: (Tn not in D, Tn not in D)))
    c = Fraction(2, n * (n - 1))

    def gens_in_derived():
        ok = all((t - Tn * c) in D for t in ls.transposition_elements(n))
        return ok, ok

    checks.append(_timed("tau - 2/(n(n-1)) T_n in D(CS_n)", True, gens_in_derived))
    return checks


def check_derived_dims(n):
    """Derived algebras: of CS_n, of the closure, and of its even part."""
    fact = factorial(n)
    table = classify(n)
    E, F = len(table.E), len(table.F)
    checks = []
    D = derived_group_algebra(n)
    checks.append(_timed("D(CS_n) total", fact - E - F, lambda: (D.dim, D.dim == fact - E - F)))
    S = transposition_closure(n)
    if not S.complete:
        return checks
    # sl(1|1) blocks (f = 2, self-conjugate) are not perfect: their odd part drops out
    small = sum(1 for lam in table.F if len(standard_tableaux(lam)) == 2)
    want = (fact // 2 - F, fact // 2 - E - 2 * small)
    Dg = ls.derived(S)
    checks.append(_timed("D(g_n) dims", want, lambda: (Dg.dims, Dg.dims == want)))
    checks.append(_timed("D(g_n) inside D(CS_n)", True, lambda: (lambda ok: (ok, ok))(ls.is_subspace(Dg, D))))
    f2 = sum(len(standard_tableaux(lam)) ** 2 - 1 for lam in table.E)
    f2 += sum(2 * ((len(standard_tableaux(lam)) // 2) ** 2 - 1) for lam in table.F)
    D0 = ls.derived(ls.even_part(S))
    checks.append(_timed("D(g_0) dim", f2, lambda: (D0.dim, D0.dim == f2)))
    return checks


# ---------------------------------------------------------------------------
# block images


def _image_data(W, rows_by_parity):
    """Images of the given group-algebra rows, flattened, plus trace functionals.

    Returns (image rows per parity as fmpq_mat, otr functional, phi0 functional).
    """
    alg = symmetric_supergroup(W.n).algebra
    mats = W.all_flint_actions()
    d = W.dim
    out = []
    for p in (0, 1):
        if not rows_by_parity[p]:
            out.append(None)
            continue
        R = flint.fmpq_mat(alg.N[p], d * d)
        for k, sigma in enumerate(alg.byp[p]):
            m = mats[sigma]
            for i in range(d):
                for j in range(d):
                    x = m[i, j]
                    if x != 0:
                        R[k, i * d + j] = x
        out.append(flint.fmpq_mat(flint.fmpz_mat(rows_by_parity[p])) * R)
    return out


def _trace_functional(W, op, p):
    """Vector sigma -> trace(op W(sigma)) over permutations of parity p."""
    alg = symmetric_supergroup(W.n).algebra
    mats = W.all_flint_actions()
    opf = op.to_flint()
    d = W.dim
    out = []
    for s in alg.byp[p]:
        m = opf * mats[s]
        out.append(sum((m[k, k] for k in range(d)), flint.fmpq(0)))
    return out


def _dot_rows(rows, vec):
    return [sum(int(x) * v for x, v in zip(r, vec) if x) for r in rows]


def block_image_checks(W, S, D):
    f = W.dim // 2 if W.kind == "Q" else W.dim
    res = residue_sum(W.shape)
    checks = []
    t0 = time.perf_counter()
    imgs = _image_data(W, S.rows)
    stacked = [m for m in imgs if m is not None]
    rank = flint.fmpq_mat(sum(m.nrows() for m in stacked), W.dim ** 2,
                          [x for m in stacked for r in m.tolist() for x in r]).rank()
    ms = round(1000 * (time.perf_counter() - t0))
    label = f"image W^{W.shape}"
    if W.kind == "Q":
        want = 2 * f * f - 1 + (1 if res else 0)
        checks.append(Check(f"{label} dim", str(want), str(rank), rank == want, ms))
        d = W.dim
        off = [i * d + j for i in range(d) for j in range(d) if (i < f) != (j < f)]

        def commute():
            bad = sum(1 for m in stacked for r in m.tolist() for k in off if r[k] != 0)
            return f"{bad} nonzero off-diagonal entries", bad == 0

        checks.append(_timed(f"{label} commutes with J", "0 nonzero off-diagonal entries", commute))

        def otr_zero():
            vec = _trace_functional(W, W.odd_involution, 1)
            vals = _dot_rows(D.rows[1], vec)
            bad = sum(1 for v in vals if v != 0)
            return f"{bad} nonzero odd traces on D(CS_n)", bad == 0

        checks.append(_timed(f"{label} odd trace on derived part", "0 nonzero odd traces on D(CS_n)", otr_zero))
    else:
        want = f * f - 1
        checks.append(Check(f"{label} dim", str(want), str(rank), rank == want, ms))

        def phi_zero():
            bad = 0
            for p in (0, 1):
                vec = _trace_functional(W, W.phi0, p)
                bad += sum(1 for v in _dot_rows(S.rows[p], vec) if v != 0)
            return f"{bad} nonzero phi0-traces", bad == 0

        checks.append(_timed(f"{label} phi0-supertrace", "0 nonzero phi0-traces", phi_zero))
    return checks, rank


def check_block_images(n, threads=1):
    S = transposition_closure(n)
    if not S.complete:
        return [Check("block images", "complete closure", "partial closure", False)]
    D = derived_group_algebra(n)
    mods = supermodules(n)
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(lambda W: block_image_checks(W, S, D), mods))
    else:
        results = [block_image_checks(W, S, D) for W in mods]
    checks = [c for cs, _ in results for c in cs]
    # the total action map is injective iff the block algebras fill CS_n
    sizes = sum(W.dim * W.dim // (2 if W.kind == "Q" else 1) for W in mods)
    checks.append(Check("sum of block algebra dims", str(factorial(n)), str(sizes), sizes == factorial(n)))
    raw = sum(r for _, r in results)
    checks.append(Check("sum of block images >= closure dim", f">= {S.dim}", str(raw), raw >= S.dim))
    # images of D(CS_n) are independent across blocks; T_n adds one shared direction
    nonzero = sum(1 for W in mods if W.kind == "Q" and residue_sum(W.shape))
    total = raw - max(nonzero - 1, 0)
    checks.append(Check("sum of block images minus shared T_n", str(S.dim), str(total), total == S.dim))
    return checks


# ---------------------------------------------------------------------------
# branching, T_n, duality, bounds


def expected_branch(lam):
    """Summands (mu, residue, multiplicity, dim) predicted by the restriction rule."""
    self_conj = lam == conjugate(lam)
    out = []
    for mu, k in covers(lam):
        f = len(standard_tableaux(mu))
        mu_sc = mu == conjugate(mu)
        if self_conj:
            if k < 0:
                continue
            out.append((mu, k, 1, f if k == 0 else 2 * f))
        else:
            out.append((mu, k, 2 if mu_sc else 1, 2 * f))
    return out


def check_branching(n):
    checks = []
    for W in supermodules(n):
        want = [(str(mu), k, m, d) for mu, k, m, d in expected_branch(W.shape)]

        def run(W=W):
            rep = branch(W)
            got = [(str(s.mu), s.residue, s.multiplicity, s.dim) for s in rep.summands]
            shifted = [str(s.mu) for s in rep.summands if s.parity_shifted]
            text = str(got) + (f" parity-shifted {shifted}" if shifted else "")
            return text, got == want

        checks.append(_timed(f"branch W^{W.shape}", want, run))
    return checks


def check_tn_action(n):
    checks = []
    for W in supermodules(n):
        res = residue_sum(W.shape)
        want = "0" if W.kind == "M" or res == 0 else f"+-{res}*J"

        def run(W=W, res=res):
            _, s = tn_image(W)
            return ("0" if s == 0 else f"{'+' if s > 0 else '-'}{res}*J"), True

        checks.append(_timed(f"W^{W.shape}(T_n)", want, run))
    return checks


def check_self_duality(n):
    checks = []
    for lam in partitions(n):
        if lam != conjugate(lam):
            continue
        want = diagonal_parity(lam) == 0
        W = supermodule(lam)
        checks.append(_timed(f"dual W^{lam}", want, lambda W=W, want=want: (lambda g: (g, g == want))(group_dual_test(W))))
        c = intertwiner(lam).selfsquare
        checks.append(_timed(f"sign of phi0^2 for {lam}", "positive" if want else "negative",
                             lambda c=c, want=want: ("positive" if c > 0 else "negative", (c > 0) == want)))
    return checks


def check_dimension_bounds(n):
    checks = []
    for W in supermodules(n):
        bound, exact = dimension_bound(W.shape)
        want = f"= {bound}" if exact else f">= {bound}"
        ok = W.dim == bound if exact else W.dim >= bound
        checks.append(Check(f"dim W^{W.shape}", want, str(W.dim), ok))
    return checks


# ---------------------------------------------------------------------------
# seminormal form


def check_seminormal(n, pairs=100, seed=0):
    checks = []
    rng = random.Random(seed)
    perms_n = all_permutations(n) if n <= 8 else None
    for lam in partitions(n):
        R = seminormal_rep(lam)
        I = flint.fmpq_mat(R.dim, R.dim)
        for k in range(R.dim):
            I[k, k] = 1
        g = [R.flint_gen(i) for i in range(1, n)]

        def coxeter():
            for i in range(n - 1):
                if g[i] * g[i] != I:
                    return f"s_{i + 1}^2 != 1", False
                if i + 1 < n - 1 and g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1]:
                    return f"braid fails at {i + 1}", False
                for j in range(i + 2, n - 1):
                    if g[i] * g[j] != g[j] * g[i]:
                        return f"s_{i + 1}, s_{j + 1} do not commute", False
            return "ok", True

        def multiplicative():
            for _ in range(pairs):
                a, b = rng.choice(perms_n), rng.choice(perms_n)
                lhs = flint_rep_of_permutation(R, compose(a, b))
                if lhs != flint_rep_of_permutation(R, a) * flint_rep_of_permutation(R, b):
                    return f"fails at {a}, {b}", False
            return f"{pairs} pairs ok", True

        def spectra():
            mats = [jucys_murphy(R, j) for j in range(1, n + 1)]
            if not all(M.is_diagonal() for M in mats):
                return "not diagonal", False
            got = [tuple(int(M[k, k]) for M in mats) for k in range(R.dim)]
            return ("content vectors" if got == list(R.contents) else "mismatch"), got == list(R.contents)

        checks.append(_timed(f"S^{lam} Coxeter relations", "ok", coxeter))
        checks.append(_timed(f"S^{lam} multiplicative", f"{pairs} pairs ok", multiplicative))
        checks.append(_timed(f"S^{lam} JM spectrum", "content vectors", spectra))
    return checks


# ---------------------------------------------------------------------------
# matrix superalgebras


def check_odd_generation():
    checks = []
    for m in (2, 3):
        def run(m=m):
            S = ls.matrix_closure(ls.sl_odd_part(m, m), ls.grading_matrix(m, m))
            target = ls.sl_subspace(m, m)
            same = all(target.contains(X, p) for p in (0, 1) for X in S.basis[p])
            return S.dim, same and S.dim == target.dim == ls.sl_dimension(m, m)
        checks.append(_timed(f"sl({m}|{m}) from odd part", ls.sl_dimension(m, m), run))
    for m in (3, 4):
        def run(m=m):
            S = ls.matrix_closure(ls.sq_odd_part(m), ls.grading_matrix(m, m))
            target = ls.sq_subspace(m)
            same = all(target.contains(X, p) for p in (0, 1) for X in S.basis[p])
            return S.dim, same and S.dim == target.dim == ls.sq_dimension(m)
        checks.append(_timed(f"sq({m}) from odd part", ls.sq_dimension(m), run))

    def run5():
        gens = [(ExactMatrix.identity(10), 0)] + ls.odd_no_diagonal(5)
        S = ls.matrix_closure(gens, ls.grading_matrix(5, 5))
        target = ls.sq_subspace(5)
        same = all(target.contains(X, p) for p in (0, 1) for X in S.basis[p])
        return S.dim, same and S.dim == ls.sq_dimension(5)

    checks.append(_timed("sq(5) from identity and zero-diagonal odd part", ls.sq_dimension(5), run5))
    return checks


# ---------------------------------------------------------------------------


def run_all(max_n, config=None):
    """Every checker up to its bound; returns a list of reports (one per n, then extras)."""
    config = config or VerifyConfig(max_n=max_n)
    reports = []
    closure_max = 7 if config.include_7 else 6
    for n in range(2, max_n + 1):
        rep = VerificationReport(n)
        if n <= closure_max:
            budget = config.budget_seconds if n >= 7 else None
            rep.checks += check_main_theorem(n, budget, config.progress)
            if transposition_closure(n, budget, config.progress).complete:
                if n <= 6:
                    rep.checks += check_derived_dims(n)
                    rep.checks += check_block_images(n, config.threads)
        if n <= 6:
            E, F = _counts(n)
            rep.checks += census_checks(symmetric_supergroup(n), (F, E))
        if 3 <= n <= config.branching_max:
            rep.checks += check_branching(n)
        if n <= config.branching_max:
            rep.checks += check_tn_action(n)
        if n <= config.seminormal_max:
            rep.checks += check_seminormal(n)
        if n <= config.duality_max:
            rep.checks += check_self_duality(n)
            rep.checks += check_dimension_bounds(n)
        reports.append(rep)
    extra = VerificationReport(None)
    for m in range(3, config.dihedral_max + 1):
        extra.checks += census_checks(dihedral_supergroup(m), dihedral_expected(m))
    extra.checks += check_odd_generation()
    reports.append(extra)
    return reports


def reports_to_json(reports):
    return {"reports": [r.to_json() for r in reports], "pass": all(r.passed for r in reports)}


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
