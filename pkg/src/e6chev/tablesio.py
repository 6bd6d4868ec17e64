"""Fixture ingestion, table generation and cell-level diffs.

Every table is a flat list of records ``table,row,col,value,note``.  Rows and
columns are signed root indices for the matrix-like tables; Table 1 uses the
column keys ``tuple``/``height`` and the formula lists use one row per rule
with the column keys ``number``, ``s``, ``r``, ``target`` and ``coeff``.

A note beginning with ``paper-typo`` marks a reference cell known to be wrong;
such cells show up in reports but never decide pass or fail.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from pathlib import Path

from .commutator import generate_all, render_coeff
from .constants import ConstantTable, derive_constants, extraspecial_pair, positive_table
from .rootgraph import FULL_LABELS, REDUCED_LABELS, build_graph, k_numbers, path_counts
from .rootsys import RootSystem, add_vectors, height
from .signcalc import MonomialParseError, parse_monomial

HEADER = ("table", "row", "col", "value", "note")
TYPO = "paper-typo"

MATCH, MISMATCH, SKIPPED, REORDERED = "match", "mismatch", "paper-typo-skipped", "reordered"

LISTS = ("LG-pospos", "LG-negneg", "LG-mixed", "LS-pospos", "LS-negneg", "LS-mixed")
TABLES = tuple(f"T{k}" for k in range(1, 13)) + LISTS
RULE_FIELDS = ("number", "s", "r", "target", "coeff")


class FixtureError(ValueError):
    """Schema or value error in a fixture file."""


@dataclass(frozen=True)
class Record:
    table: str
    row: str
    col: str
    value: str
    note: str = ""

    @property
    def key(self) -> tuple[str, str]:
        return (self.row, self.col)

    @property
    def flagged(self) -> bool:
        return self.note.startswith(TYPO)


@dataclass
class Fixture:
    table: str | None
    records: list[Record] = field(default_factory=list)

    def by_key(self) -> dict[tuple[str, str], Record]:
        return {r.key: r for r in self.records}

    def notes(self) -> list[Record]:
        return [r for r in self.records if r.note]


def file_name(table: str) -> str:
    """T1 -> T01.csv; list ids keep their name."""
    if table.startswith("T") and table[1:].isdigit():
        return f"T{int(table[1:]):02d}.csv"
    return f"{table}.csv"


# -- ingestion ---------------------------------------------------------------

def _check_value(rec: Record, line: int) -> None:
    if rec.flagged:
        return  # typo cells keep whatever the source table shows, even nothing
    v, col = rec.value, rec.col
    try:
        if col == "tuple":
            if len(v) != 6 or not v.isdigit():
                raise ValueError(v)
        elif col == "number":
            int(v)
        elif col == "coeff" or rec.table in ("T2", "T3", "T4"):
            parse_monomial(v)
        else:
            int(v)
    except (ValueError, MonomialParseError) as exc:
        raise FixtureError(f"line {line}: bad value {v!r} for column {col!r}") from exc


def ingest(path) -> Fixture:
    """Parse a fixture CSV; an empty file is a valid empty fixture."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if not text.strip():
        return Fixture(None)
    reader = csv.reader(io.StringIO(text))
    head = next(reader)
    if tuple(head[:4]) != HEADER[:4] or len(head) > 5:
        raise FixtureError(f"line 1: expected header {','.join(HEADER)}, got {','.join(head)}")
    out = Fixture(None)
    seen = set()
    for line, cells in enumerate(reader, start=2):
        if not cells:
            continue
        if len(cells) not in (4, 5):
            raise FixtureError(f"line {line}: expected 4 or 5 fields, got {len(cells)}")
        rec = Record(*cells) if len(cells) == 5 else Record(*cells, "")
        if out.table is None:
            out.table = rec.table
        elif rec.table != out.table:
            raise FixtureError(f"line {line}: table {rec.table!r} differs from {out.table!r}")
        if rec.key in seen:
            raise FixtureError(f"line {line}: duplicate cell {rec.key}")
        seen.add(rec.key)
        _check_value(rec, line)
        out.records.append(rec)
    return out


def emit(records) -> str:
    """Byte-deterministic CSV (UTF-8, LF, header row)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in records:
        w.writerow([r.table, r.row, r.col, r.value, r.note])
    return buf.getvalue()


# -- generation --------------------------------------------------------------

def _num(v) -> str:
    return render_coeff(v)


def table1(system: RootSystem) -> list[Record]:
    out = []
    for k, r in enumerate(system.positives, start=1):
        out.append(Record("T1", str(k), "tuple", "".join(map(str, r))))
        out.append(Record("T1", str(k), "height", str(height(r))))
    return out


def table2(system: RootSystem, table: ConstantTable) -> list[Record]:
    out = []
    for t in system.positives:
        if height(t) == 1:
            continue
        r, s = extraspecial_pair(t, system)
        out.append(Record("T2", str(system.index(r)), str(system.index(s)), str(table.n(r, s))))
    return out


def _pairs(system: RootSystem, kind: str):
    pos = system.positives
    if kind == "pospos":
        return [(r, s) for r in pos for s in pos if add_vectors(r, s) in system]
    negs = [tuple(-x for x in s) for s in pos]
    return [(r, s) for r in pos for s in negs if add_vectors(r, s) in system]


def constant_cells(tid: str, table: ConstantTable) -> list[Record]:
    """Tables 3-6 as cells of N_{r,s}, r positive."""
    system = table.system
    if tid == "T3":
        pairs = [(r, s) for r, s in _pairs(system, "pospos")
                 if system.index(r) < system.index(s) and extraspecial_pair(add_vectors(r, s), system) != (r, s)]
    elif tid == "T4":
        pairs = [(r, s) for r, s in _pairs(system, "mixed") if system.index(add_vectors(r, s)) < 0]
    elif tid == "T5":
        pairs = _pairs(system, "pospos")
    elif tid == "T6":
        pairs = _pairs(system, "mixed")
    else:
        raise ValueError(tid)
    return [Record(tid, str(system.index(r)), str(system.index(s)), _num(table.n(r, s))) for r, s in pairs]


def list_cells(tid: str, table: ConstantTable) -> list[Record]:
    case = "general" if tid.startswith("LG") else "special"
    which = tid.split("-")[1]
    rules = generate_all(case, table).lists()[which]
    system = table.system
    out = []
    for k, rule in enumerate(rules, start=1):
        (term,) = rule.terms  # one term per rule in E6
        vals = (f"{k:03d}", system.index(rule.s), system.index(rule.r), system.index(term.target),
                render_coeff(term.coeff))
        out.extend(Record(tid, str(k), f, str(v)) for f, v in zip(RULE_FIELDS, vals))
    return out


GRAPH_TABLES = {
    "T7": ("neg", FULL_LABELS, "paths"),
    "T8": ("neg", FULL_LABELS, "knumbers"),
    "T9": ("pos", FULL_LABELS, "knumbers"),
    "T10": ("neg", REDUCED_LABELS, "paths"),
    "T11": ("neg", REDUCED_LABELS, "knumbers"),
    "T12": ("pos", REDUCED_LABELS, "knumbers"),
}


def graph_cells(tid: str, table: ConstantTable) -> list[Record]:
    sign, labels, what = GRAPH_TABLES[tid]
    g = build_graph(sign, labels, table)
    m = path_counts(g) if what == "paths" else k_numbers(g)
    return [Record(tid, str(ri), str(cj), str(int(m[i, j])))
            for i, ri in enumerate(g.vertices) for j, cj in enumerate(g.vertices)]


def generate(tid: str, symbolic: ConstantTable | None = None, numeric: ConstantTable | None = None) -> list[Record]:
    """Engine output for a table id, in the fixture key space."""
    symbolic = symbolic or derive_constants()
    numeric = numeric or positive_table()
    system = symbolic.system
    if tid == "T1":
        return table1(system)
    if tid == "T2":
        return table2(system, symbolic)
    if tid in ("T3", "T4"):
        return constant_cells(tid, symbolic)
    if tid in ("T5", "T6"):
        return constant_cells(tid, numeric)
    if tid in GRAPH_TABLES:
        return graph_cells(tid, numeric)
    if tid in LISTS:
        return list_cells(tid, symbolic if tid.startswith("LG") else numeric)
    raise ValueError(f"unknown table {tid!r}")


# -- diffing -----------------------------------------------------------------

@dataclass(frozen=True)
class Cell:
    key: tuple[str, str]
    expected: str | None  # fixture value, None if absent
    actual: str | None  # engine value, None if absent
    classification: str
    note: str = ""


@dataclass
class DiffReport:
    table: str
    cells: list[Cell] = field(default_factory=list)
    fixture_cells: int = 0
    consumed: int = 0

    def by_class(self, cls: str) -> list[Cell]:
        return [c for c in self.cells if c.classification == cls]

    @property
    def mismatches(self) -> list[Cell]:
        return self.by_class(MISMATCH)

    @property
    def covered(self) -> bool:
        return self.consumed == self.fixture_cells

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.covered

    def summary(self) -> str:
        counts = {k: len(self.by_class(k)) for k in (MATCH, MISMATCH, SKIPPED, REORDERED)}
        parts = ", ".join(f"{v} {k}" for k, v in counts.items() if v or k == MISMATCH)
        status = "PASS" if self.ok else "FAIL"
        cov = "" if self.covered else f" (coverage {self.consumed}/{self.fixture_cells})"
        return f"{self.table}: {status} {parts}{cov}"


def canonical(value: str | None, col: str) -> str | None:
    """Canonical text of a cell value; monomials are normalised, numbers stripped."""
    if value is None or value == "":
        return None
    if col in ("tuple", "number"):
        return value
    try:
        return str(int(value))
    except ValueError:
        pass
    try:
        return str(parse_monomial(value))
    except MonomialParseError:
        return value


def _classify(key, exp: Record | None, act: Record | None) -> Cell:
    col = key[1]
    e = canonical(exp.value, col) if exp else None
    a = canonical(act.value, col) if act else None
    if exp is not None and exp.flagged:
        return Cell(key, e, a, SKIPPED, exp.note)
    return Cell(key, e, a, MATCH if e == a else MISMATCH, exp.note if exp else "")


def diff(fixture: Fixture, generated: list[Record]) -> DiffReport:
    """Cell-by-cell comparison; blank on one side only is a mismatch."""
    tid = fixture.table or (generated[0].table if generated else "?")
    if any(r.table != tid for r in generated):
        raise ValueError("generated records belong to another table")
    if tid in LISTS:
        return diff_list(fixture, generated)
    exp, act = fixture.by_key(), {r.key: r for r in generated}
    rep = DiffReport(tid, fixture_cells=len(fixture.records))
    keys = list(exp) + [k for k in act if k not in exp]
    for key in keys:
        rep.cells.append(_classify(key, exp.get(key), act.get(key)))
        rep.consumed += key in exp
    return rep


def _rules(records) -> dict[str, dict[str, Record]]:
    out: dict[str, dict[str, Record]] = {}
    for r in records:
        out.setdefault(r.row, {})[r.col] = r
    return out


def diff_list(fixture: Fixture, generated: list[Record]) -> DiffReport:
    """Diff a formula list rule by rule.

    A rule is paired with the generated rule at the same position when their
    (s, r) agree; otherwise with the generated rule having the same (s, r),
    and its number cell is classified ``reordered``.  Rules whose s or r cell
    is flagged are paired by position.
    """
    tid = fixture.table or generated[0].table
    exp, act = _rules(fixture.records), _rules(generated)
    by_pair = {(v["s"].value, v["r"].value): k for k, v in act.items()}
    rep = DiffReport(tid, fixture_cells=len(fixture.records))
    used = set()
    for pos, rule in exp.items():
        pair = (rule["s"].value, rule["r"].value) if "s" in rule and "r" in rule else None
        flagged = any(rule[f].flagged for f in ("s", "r") if f in rule)
        mate = pos
        if not flagged and pair is not None:
            same = act.get(pos)
            if not same or (same["s"].value, same["r"].value) != pair:
                mate = by_pair.get(pair, pos)
        used.add(mate)
        gen = act.get(mate, {})
        for f, rec in rule.items():
            key = (pos, f)
            if f == "number" and mate != pos and not rec.flagged:
                rep.cells.append(Cell(key, rec.value, gen["number"].value if "number" in gen else None,
                                      REORDERED, f"engine position {mate}"))
            else:
                rep.cells.append(_classify(key, rec, gen.get(f)))
            rep.consumed += 1
    for pos, rule in act.items():
        if pos not in used:
            for f, rec in rule.items():
                rep.cells.append(_classify((pos, f), None, rec))
    return rep


def verify_table(tid: str, fixtures_dir, symbolic=None, numeric=None) -> DiffReport:
    fx = ingest(Path(fixtures_dir) / file_name(tid))
    if fx.table is None:
        fx.table = tid
    return diff(fx, generate(tid, symbolic, numeric))
