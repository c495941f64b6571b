"""Command-line front end: `python -m snsuper <command> ...`."""
import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from math import factorial

from . import liesuper as ls
from . import verify as vf
from .combinatorics import Partition, classify, conjugate, content_vector, partitions, standard_tableaux
from .errors import InvalidArgument, NotAWeight
from .exactlinalg import format_scalar
from .groups import dihedral_supergroup, symmetric_supergroup
from .perms import format_oneline, parse_permutation
from .specht import intertwiner, jucys_murphy, rep_of_permutation, seminormal_rep
from .supermod import branch, supermodule

BUDGET_ENV = "SNSUPER_BUDGET"
DEFAULT_BUDGET = 3600.0


@dataclass
class Result:
    """What a command produced: a JSON payload, a flat table, and a verdict."""
    payload: dict
    table: list = field(default_factory=list)
    ok: bool = True
    text: str = ""


def _partition(text):
    try:
        return Partition.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}")


def _positive(text):
    k = int(text)
    if k < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return k


def _matrix_table(M):
    return [{f"c{j}": v for j, v in enumerate(row)} for row in M.to_json()]


def _matrix_text(M):
    cells = M.to_json()
    width = max((len(c) for r in cells for c in r), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def _budget(args):
    if args.budget is not None:
        return args.budget
    return float(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


# ---------------------------------------------------------------------------
# commands


def cmd_partitions(args):
    rows = []
    table = classify(args.n) if args.classify else None
    for lam in partitions(args.n):
        row = {"partition": str(lam), "conjugate": str(conjugate(lam)),
               "dim": len(standard_tableaux(lam))}
        if table is not None:
            row["representative"] = str(table.representative_of(lam))
            row["kind"] = table.kind_of(lam)
        rows.append(row)
    payload = {"n": args.n, "partitions": rows}
    if table is not None:
        payload["classes"] = [{"representative": str(c.representative), "mate": str(c.mate), "kind": c.kind}
                              for c in table.classes]
    return Result(payload, rows)


def cmd_tableaux(args):
    rows = [{"index": k, "rows": "/".join(" ".join(map(str, r)) for r in T.rows), "content": list(content_vector(T))}
            for k, T in enumerate(standard_tableaux(args.shape))]
    return Result({"shape": str(args.shape), "tableaux": rows}, rows)


def cmd_rep(args):
    R = seminormal_rep(args.shape)
    if args.gen is not None:
        M = R.gen(args.gen)
        what = {"generator": args.gen}
    else:
        sigma = parse_permutation(args.perm, R.n)
        M = rep_of_permutation(R, sigma)
        what = {"permutation": format_oneline(sigma)}
    return Result({"shape": str(args.shape), **what, "matrix": M.to_json()}, _matrix_table(M),
                  text=_matrix_text(M))


def cmd_jm(args):
    R = seminormal_rep(args.shape)
    M = jucys_murphy(R, args.j)
    return Result({"shape": str(args.shape), "j": args.j, "matrix": M.to_json()}, _matrix_table(M),
                  text=_matrix_text(M))


def cmd_phi(args):
    phi = intertwiner(args.shape)
    payload = {"source": str(phi.source), "target": str(phi.target),
               "selfsquare": format_scalar(phi.selfsquare), "matrix": phi.matrix.to_json()}
    text = f"phi: S^{phi.source} -> S^{phi.target}, phi' phi = {format_scalar(phi.selfsquare)}\n"
    return Result(payload, _matrix_table(phi.matrix), text=text + _matrix_text(phi.matrix))


def cmd_supermodule(args):
    W = supermodule(args.shape)
    d = W.field()
    fld = f"Q(sqrt({d}))" if d else "Q"
    payload = {"shape": str(W.shape), "kind": W.kind, "dim": W.dim, "field": fld,
               "grading": W.grading.to_json(),
               "odd_involution": W.odd_involution.to_json() if W.odd_involution is not None else None,
               "generators": [W.gen(i).to_json() for i in range(1, W.n)]}
    text = f"W^{W.shape}: kind {W.kind}, dim {W.dim}, over {fld}\ngrading:\n{_matrix_text(W.grading)}"
    return Result(payload, _matrix_table(W.grading), text=text)


def cmd_branch(args):
    W = supermodule(args.shape)
    rep = branch(W)
    rows = [{"mu": str(s.mu), "residue": s.residue, "representative": str(s.representative),
             "multiplicity": s.multiplicity, "dim": s.dim, "parity_shifted": s.parity_shifted}
            for s in rep.summands]
    return Result({"shape": str(W.shape), "dim": W.dim, "summands": rows}, rows, ok=rep.dim == W.dim)


def cmd_closure(args):
    n = args.n
    selection = args.selection
    if selection == "auto":
        selection = "modular" if n >= vf.MODULAR_FROM else "rational"
    S = ls.closure(ls.transposition_elements(n), strategy=args.strategy, selection=selection,
                   budget_seconds=_budget(args), progress=not args.quiet)
    table = classify(n)
    want = factorial(n) - len(table.classes) + 1
    Tn = ls.transposition_sum(n)
    if S.modular is not None:
        has_tn = S.modular[1].contains([int(x) for x in Tn.vector(1)])
    else:
        has_tn = Tn in S
    ok = S.complete and S.dim == want and has_tn
    payload = {"n": n, "dims": {"even": S.dims[0], "odd": S.dims[1]}, "dim": S.dim, "selection": selection,
               "expected_dim": want, "complete": S.complete, "passes": S.passes, "T_n_in_closure": has_tn}
    if args.json:
        alg = symmetric_supergroup(n).algebra
        full = dict(payload)
        full["basis"] = {name: {"elements": [format_oneline(g) for g in alg.byp[p]], "rows": [list(map(int, r)) for r in S.rows[p]]}
                         for p, name in ((0, "even"), (1, "odd"))}
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(vf.dumps(full))
    row = {"n": n, "even": S.dims[0], "odd": S.dims[1], "dim": S.dim, "expected": want, "complete": S.complete}
    return Result(payload, [row], ok=ok)


def cmd_blocks(args):
    if args.family == "sym":
        if args.n < 2:
            raise InvalidArgument("S_n census needs n >= 2")
        G = symmetric_supergroup(args.n)
        t = classify(args.n)
        want = (len(t.F), len(t.E))
    else:
        G = dihedral_supergroup(args.n)
        want = vf.dihedral_expected(args.n)
    M, Q = vf.check_block_census(G)
    row = {"group": str(G), "M": M, "Q": Q, "expected_M": want[0], "expected_Q": want[1]}
    return Result(row, [row], ok=(M, Q) == want, text=f"{G}: M={M}, Q={Q} (expected M={want[0]}, Q={want[1]})")


def cmd_matrixlie(args):
    if args.family == "sl":
        if len(args.dims) != 2:
            raise InvalidArgument("sl needs two sizes: sl M N")
        m, k = args.dims
        grading = ls.grading_matrix(m, k)
        target = ls.sl_subspace(m, k)
        name = f"sl({m}|{k})"
        gens = ls.sl_odd_part(m, k)
    else:
        if len(args.dims) != 1:
            raise InvalidArgument("sq needs one size: sq M")
        (m,) = args.dims
        grading = ls.grading_matrix(m, m)
        target = ls.sq_subspace(m)
        name = f"sq({m})"
        gens = ls.sq_odd_part(m)
    row = {"algebra": name, "dim": target.dim, "even": target.dims[0], "odd": target.dims[1]}
    ok = True
    if args.odd_generation:
        S = ls.matrix_closure(gens, grading)
        inside = all(target.contains(X, p) for p in (0, 1) for X in S.basis[p])
        ok = inside and S.dims == target.dims
        row.update({"generated_even": S.dims[0], "generated_odd": S.dims[1], "odd_generated": ok})
    return Result(row, [row], ok=ok)


def cmd_verify(args):
    config = vf.VerifyConfig(max_n=args.max_n, include_7=args.include_7, budget_seconds=_budget(args),
                             threads=args.threads, progress=not args.quiet)
    reports = vf.run_all(args.max_n, config)
    payload = vf.reports_to_json(reports)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(vf.dumps(payload))
    rows = [{"n": r.n, **c.to_json()} for r in reports for c in r.checks]
    lines = [f"[{'PASS' if c.passed else 'FAIL'}] n={r.n} {c.name}: expected {c.expected}, got {c.actual}"
             for r in reports for c in r.checks]
    lines.append("ALL PASS" if payload["pass"] else "SOME CHECKS FAILED")
    return Result(payload, rows, ok=payload["pass"], text="\n".join(lines))


# ---------------------------------------------------------------------------


def build_parser():
    def output_options(top):
        o = argparse.ArgumentParser(add_help=False)
        o.add_argument("--format", choices=("json", "csv", "pretty"),
                       default="pretty" if top else argparse.SUPPRESS, help="output format (default: pretty)")
        o.add_argument("--output", default=None if top else argparse.SUPPRESS,
                       help="write output here instead of stdout")
        return o

    # options may go before or after the command; the subcommand copy must not clobber the first
    common = output_options(False)
    p = argparse.ArgumentParser(prog="snsuper", description=__doc__, parents=[output_options(True)])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("partitions", parents=[common], help="list partitions of N")
    s.add_argument("n", type=_positive)
    s.add_argument("--classify", action="store_true", help="add the Q/M class of each partition")
    s.set_defaults(func=cmd_partitions)

    s = sub.add_parser("tableaux", parents=[common], help="standard tableaux with content vectors")
    s.add_argument("shape", type=_partition)
    s.set_defaults(func=cmd_tableaux)

    s = sub.add_parser("rep", parents=[common], help="seminormal matrix of a generator or permutation")
    s.add_argument("shape", type=_partition)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--gen", type=_positive, help="adjacent transposition s_i (1-based)")
    g.add_argument("--perm", help='cycles "(1 3)(2 4)" or one-line "3142"')
    s.set_defaults(func=cmd_rep)

    s = sub.add_parser("jm", parents=[common], help="Jucys-Murphy matrix L_j")
    s.add_argument("shape", type=_partition)
    s.add_argument("j", type=_positive)
    s.set_defaults(func=cmd_jm)

    s = sub.add_parser("phi", parents=[common], help="intertwiner S^lam -> S^lam'")
    s.add_argument("shape", type=_partition)
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("supermodule", parents=[common], help="supermodule W^lam for a class representative")
    s.add_argument("shape", type=_partition)
    s.set_defaults(func=cmd_supermodule)

    s = sub.add_parser("branch", parents=[common], help="restriction of W^lam to S_{n-1}")
    s.add_argument("shape", type=_partition)
    s.set_defaults(func=cmd_branch)

    budget_help = f"wall-clock budget in seconds (default: ${BUDGET_ENV} or {DEFAULT_BUDGET:g})"
    s = sub.add_parser("closure", parents=[common], help="Lie superalgebra generated by transpositions")
    s.add_argument("n", type=_positive)
    s.add_argument("--json", metavar="PATH", help="also write dims and basis rows to PATH")
    s.add_argument("--strategy", choices=("ad", "pairs"), default="ad")
    s.add_argument("--selection", choices=("auto", "rational", "modular"), default="auto",
                   help="independence test over Q or mod a prime (auto: modular from n = 7)")
    s.add_argument("--budget", type=float, help=budget_help)
    s.add_argument("--quiet", action="store_true", help="no progress on stderr")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("blocks", parents=[common], help="count M- and Q-type blocks")
    s.add_argument("family", choices=("sym", "dihedral"))
    s.add_argument("n", type=_positive)
    s.set_defaults(func=cmd_blocks)

    s = sub.add_parser("matrixlie", parents=[common], help="sl(m|n) and sq(m)")
    s.add_argument("family", choices=("sl", "sq"))
    s.add_argument("dims", type=_positive, nargs="+")
    s.add_argument("--odd-generation", action="store_true", help="check the odd part generates the algebra")
    s.set_defaults(func=cmd_matrixlie)

    s = sub.add_parser("verify", parents=[common], help="run every theorem check")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--include-7", action="store_true", help="also saturate at n = 7 (slow)")
    s.add_argument("--json", metavar="PATH", help="write the JSON report to PATH")
    s.add_argument("--budget", type=float, help=budget_help)
    s.add_argument("--threads", type=_positive, default=1)
    s.add_argument("--quiet", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def _csv(rows):
    buf = io.StringIO()
    keys = []
    for r in rows:
        keys += [k for k in r if k not in keys]
    w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    return buf.getvalue()


def _pretty(result):
    if result.text:
        return result.text + "\n"
    if not result.table:
        return vf.dumps(result.payload) + "\n"
    keys = []
    for r in result.table:
        keys += [k for k in r if k not in keys]
    cells = [[str(r.get(k, "")) for k in keys] for r in result.table]
    widths = [max([len(k)] + [len(c[i]) for c in cells]) for i, k in enumerate(keys)]
    out = ["  ".join(k.ljust(w) for k, w in zip(keys, widths))]
    out += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(out) + "\n"


def render(result, fmt):
    if fmt == "json":
        return vf.dumps(result.payload) + "\n"
    if fmt == "csv":
        return _csv(result.table)
    return _pretty(result)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.max_n < 2:
        parser.error("--max-n must be at least 2")
    try:
        result = args.func(args)
    except (InvalidArgument, NotAWeight) as exc:
        print(f"snsuper {args.command}: error: {exc}", file=sys.stderr)
        return 2
    out = render(result, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0 if result.ok else 1


if __name__ == "__main__":
    sys.exit(main())
