"""Command line front end: ``e6chev <command> ...`` (or ``python -m e6chev``)."""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys
from pathlib import Path

from . import tablesio
from .commutator import generate_all, render_coeff
from .constants import check_relations, derive_constants, evaluate_table
from .fields import parse_field, parse_scalar
from .liealg import build_algebra, commutator_crosscheck, jacobi_scan
from .rootgraph import EMITTERS, build_graph, export
from .rootsys import FUNDAMENTAL, build_e6, height, neg, add_vectors
from .signcalc import all_positive, read_assignment
from .unipotent import UnipotentGroup


class UsageError(Exception):
    pass


def _rows_out(header, rows, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "md":
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def _frac(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _assignment(spec: str | None):
    if spec in (None, "positive"):
        return all_positive()
    return read_assignment(spec)


def cmd_roots(args) -> int:
    system = build_e6()
    header = ["index", "tuple", "height"] + (["coords"] if args.coords else [])
    rows = []
    for k, r in enumerate(system.positives, start=1):
        row = [k, "".join(map(str, r)), height(r)]
        if args.coords:
            row.append("(" + ",".join(_frac(x) for x in system.coords(r)) + ")")
        rows.append(row)
    sys.stdout.write(_rows_out(header, rows, args.format))
    return 0


def cmd_constants(args) -> int:
    table = derive_constants()
    if args.mode == "positive":
        table = evaluate_table(table)
    system = table.system
    seconds = system.positives if args.part == "pos-pos" else tuple(neg(s) for s in system.positives)
    rows = [(system.index(r), system.index(s), render_coeff(table.n(r, s)))
            for r in system.positives for s in seconds if add_vectors(r, s) in system]
    sys.stdout.write(_rows_out(["r_index", "s_index", "value"], rows, args.format))
    return 0


def cmd_verify_constants(args) -> int:
    symbolic = derive_constants()
    numeric = evaluate_table(symbolic)
    ok = True
    for tid in ("T3", "T4", "T5", "T6"):
        rep = tablesio.verify_table(tid, args.fixtures, symbolic, numeric)
        print(rep.summary())
        for c in rep.mismatches:
            print(f"  cell {c.key}: fixture {c.expected} engine {c.actual}")
        ok &= rep.ok
    return 0 if ok else 1


def cmd_formulas(args) -> int:
    table = derive_constants()
    if args.case == "special":
        table = evaluate_table(table, _assignment(args.signs))
    elif args.signs:
        raise UsageError("--signs only applies to the special case")
    rules = generate_all(args.case, table).lists()[args.list]
    system = table.system
    rows = []
    for k, rule in enumerate(rules, start=1):
        for term in rule.terms:
            rows.append((f"{k:03d}", system.index(rule.s), system.index(rule.r),
                         system.index(term.target), render_coeff(term.coeff)))
    sys.stdout.write(_rows_out(["no", "s_index", "r_index", "target_index", "coeff"], rows, args.format))
    return 0


def cmd_verify_jacobi(args) -> int:
    table = evaluate_table(derive_constants(), _assignment(args.signs))
    rep = jacobi_scan(build_algebra(table))
    print(f"jacobi: {'PASS' if rep.ok else 'FAIL'} {rep.checked} triples, {len(rep.violations)} violations")
    for v in rep.violations[:50]:
        print("  " + " ".join(v))
    return 0 if rep.ok else 1


def cmd_verify_adjoint(args) -> int:
    fld = parse_field(args.field)
    rep = commutator_crosscheck(evaluate_table(derive_constants()), fld, args.samples, random.Random(args.seed))
    print(f"adjoint: {'PASS' if rep.ok else 'FAIL'} {rep.samples} samples over {fld.name}, "
          f"{len(rep.failures)} failures")
    return 0 if rep.ok else 1


def cmd_collect(args) -> int:
    fld = parse_field(args.field)
    group = UnipotentGroup(evaluate_table(derive_constants(), _assignment(args.signs)), fld)
    stream = open(args.word) if args.word else sys.stdin
    word = []
    for n, line in enumerate(stream, start=1):
        line = line.split("#")[0].strip()
        if not line:
            continue
        try:
            idx, scalar = line.split()
            word.append((int(idx), parse_scalar(scalar, fld)))
        except ValueError as exc:
            raise UsageError(f"line {n}: expected 'root_index scalar', got {line!r}") from exc
    for k, c in group.collect(word).letters():
        print(k, _frac(c) if hasattr(c, "denominator") else c)
    return 0


def cmd_graph(args) -> int:
    labels = tuple(x.strip() for x in args.labels.split(",") if x.strip())
    g = build_graph(args.sign, labels, evaluate_table(derive_constants()))
    fmt = args.format or ("dot" if args.emit == "dot" else "csv")
    try:
        sys.stdout.write(export(g, args.emit, fmt))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return 0


def cmd_verify(args) -> int:
    tables = args.tables.split(",") if args.tables else list(tablesio.TABLES)
    unknown = [t for t in tables if t not in tablesio.TABLES]
    if unknown:
        raise UsageError(f"unknown tables {unknown}")
    symbolic = derive_constants()
    numeric = evaluate_table(symbolic)
    ok = True
    for tid in tables:
        rep = tablesio.verify_table(tid, args.fixtures, symbolic, numeric)
        print(rep.summary())
        for c in rep.mismatches:
            print(f"  cell {c.key}: fixture {c.expected} engine {c.actual}")
        ok &= rep.ok
    rel = check_relations(symbolic)
    print(f"relations: {'PASS' if rel.ok else 'FAIL'} {rel.summary()}")
    jac = jacobi_scan(build_algebra(numeric))
    print(f"jacobi: {'PASS' if jac.ok else 'FAIL'} {jac.checked} triples, {len(jac.violations)} violations")
    return 0 if ok and rel.ok and jac.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="e6chev", description="Chevalley structure constants and commutator formulas for E6.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("roots", help="positive roots in the fixed order")
    s.add_argument("--format", choices=("csv", "md"), default="csv")
    s.add_argument("--coords", action="store_true", help="add the R^8 coordinates")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("constants", help="structure constants N_{r,s}")
    s.add_argument("--mode", choices=("symbolic", "positive"), default="symbolic")
    s.add_argument("--part", choices=("pos-pos", "mixed"), default="pos-pos")
    s.add_argument("--format", choices=("csv", "md"), default="csv")
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("verify-constants", help="diff constants against table fixtures")
    s.add_argument("--fixtures", type=Path, required=True)
    s.set_defaults(func=cmd_verify_constants)

    s = sub.add_parser("formulas", help="commutator formula lists")
    s.add_argument("--case", choices=("general", "special"), default="general")
    s.add_argument("--signs", help="assignment CSV (special case only)")
    s.add_argument("--list", choices=("pospos", "negneg", "mixed"), default="pospos")
    s.add_argument("--format", choices=("csv", "md"), default="csv")
    s.set_defaults(func=cmd_formulas)

    s = sub.add_parser("verify-jacobi", help="Jacobi identity on all basis triples")
    s.add_argument("--signs", help="assignment CSV (default: all signs +1)")
    s.set_defaults(func=cmd_verify_jacobi)

    s = sub.add_parser("verify-adjoint", help="group commutators vs the adjoint representation")
    s.add_argument("--field", default="fp:101")
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify_adjoint)

    s = sub.add_parser("collect", help="collect a word of positive root elements")
    s.add_argument("--field", default="q")
    s.add_argument("--signs", default="positive", help="'positive' or an assignment CSV")
    s.add_argument("word", nargs="?", help="file of 'root_index scalar' lines (default stdin)")
    s.set_defaults(func=cmd_collect)

    s = sub.add_parser("graph", help="root graphs, path counts and K-numbers")
    s.add_argument("--sign", choices=("neg", "pos"), default="neg")
    s.add_argument("--labels", default=",".join(FUNDAMENTAL))
    s.add_argument("--emit", choices=EMITTERS, default="paths")
    s.add_argument("--format", choices=("csv", "dot"))
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("verify", help="diff every table and run the relation and Jacobi suites")
    s.add_argument("--fixtures", type=Path, required=True)
    s.add_argument("--tables", help="comma separated ids, e.g. T1,T7,LG-mixed")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        parser.exit(2, f"e6chev {args.command}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
