"""The shipped comparison tables: loading, recomputation and matching.

Each row pairs two planar points with printed bound values. Rows are checked
three ways: value by value under the printed header, as a multiset of values
(which tolerates columns printed under the wrong header), and against the
caption's claim about which bound is smallest.
"""

from __future__ import annotations

import csv
import itertools
from collections import Counter
from dataclasses import dataclass
from importlib import resources

import numpy as np

from radialqc.bounds import TIE_TOL, bound_2j, bound_B, bound_D, bound_K, bound_M_tabulated
from radialqc.errors import DomainError

TABLE_IDS = tuple(range(1, 8))
# rounding of the printed values plus float noise
TOLERANCES = {1: 5e-5, 2: 5e-5, 3: 5e-3, 4: 5e-3, 5: 5e-3, 6: 5e-3, 7: 5e-3}
EPS = 1e-12


@dataclass(frozen=True)
class TableRow:
    table_id: int
    k: int
    x: tuple[float, float]
    y: tuple[float, float]
    p: float
    claim: str
    printed: dict[str, float]

    @property
    def headers(self) -> tuple[str, ...]:
        return tuple(self.printed)


def _parse(record: list[str]) -> TableRow:
    tid, k, xr, xi, yr, yi, p, claim, *pairs = record
    printed = {}
    for pair in pairs:
        head, _, val = pair.partition(":")
        printed[head] = float(val)
    return TableRow(int(tid), int(k), (float(xr), float(xi)), (float(yr), float(yi)), float(p), claim, printed)


def load_tables(path=None) -> dict[int, list[TableRow]]:
    """Parse the table file (the packaged copy unless ``path`` is given)."""
    if path is None:
        text = resources.files("radialqc").joinpath("data/tables.csv").read_text()
    else:
        with open(path, newline="") as fh:
            text = fh.read()
    reader = csv.reader(line for line in text.splitlines() if line.strip())
    next(reader)
    tables: dict[int, list[TableRow]] = {}
    for record in reader:
        row = _parse(record)
        tables.setdefault(row.table_id, []).append(row)
    return tables


def dilatation_for(p: float) -> float:
    """The exterior corollary is parameterised by K with p = -1/K."""
    return -1.0 / p


def recompute(row: TableRow) -> dict[str, float]:
    """Recomputed values for every symbol the row prints, in printed order."""
    x, y, p = np.array(row.x), np.array(row.y), row.p
    if p > 0:
        funcs = {"M": bound_M_tabulated, "D": bound_D, "B": bound_B, "K": bound_K}
        vals = {s: float(f(x, y, p)) for s, f in funcs.items()}
    else:
        # these rows include a point inside the unit disk, so the exterior domain is not enforced
        vals = {
            "M": float(bound_M_tabulated(x, y, p)),
            "D": float(bound_D(x, y, p)),
            "2j": float(bound_2j(x, y, dilatation_for(p), check_domain=False)),
        }
    return {h: vals[h] for h in row.headers}


def _minimal(values: dict[str, float]) -> frozenset[str]:
    best = min(values.values())
    return frozenset(s for s, v in values.items() if v - best <= TIE_TOL)


@dataclass(frozen=True)
class RowReport:
    row: TableRow
    recomputed: dict[str, float]
    tolerance: float
    header_match: dict[str, bool]
    multiset_match: bool
    # printed header -> recomputed symbol of the closest consistent assignment
    assignment: dict[str, str]
    assignment_error: float
    recomputed_minimal: frozenset[str]

    @property
    def per_header_ok(self) -> bool:
        return all(self.header_match.values())

    @property
    def claim_holds(self) -> bool:
        """The caption's symbol is the smallest recomputed bound."""
        return self.recomputed_minimal == frozenset({self.row.claim})

    def claim_holds_under(self, assignment: dict[str, str]) -> bool:
        """The claim read through a header assignment: the column printed under the
        caption's symbol holds the smallest recomputed bound."""
        return self.recomputed_minimal == frozenset({assignment[self.row.claim]})


@dataclass(frozen=True)
class TableReport:
    table_id: int
    rows: list[RowReport]
    # header -> symbol assignment shared by most rows; identity when headers are right
    assignment: dict[str, str]

    @property
    def exchanges(self) -> list[tuple[str, ...]]:
        """Non-trivial cycles of the shared assignment, e.g. [("D", "K")]."""
        seen, cycles = set(), []
        for start in self.assignment:
            if start in seen or self.assignment[start] == start:
                continue
            cycle, h = [], start
            while h not in seen:
                seen.add(h)
                cycle.append(h)
                h = self.assignment[h]
            cycles.append(tuple(cycle))
        return cycles

    @property
    def per_header_ok(self) -> bool:
        return all(r.per_header_ok for r in self.rows)

    @property
    def multiset_ok(self) -> bool:
        return all(r.multiset_match for r in self.rows)

    @property
    def claim_ok(self) -> bool:
        return all(r.claim_holds for r in self.rows)

    @property
    def claim_ok_under_exchange(self) -> bool:
        return all(r.claim_holds_under(self.assignment) for r in self.rows)


def compare_row(row: TableRow) -> RowReport:
    rec = recompute(row)
    tol = TOLERANCES[row.table_id] + EPS
    heads = row.headers
    header_match = {h: abs(rec[h] - row.printed[h]) <= tol for h in heads}
    printed = np.sort([row.printed[h] for h in heads])
    computed = np.sort([rec[h] for h in heads])
    multiset = bool(np.all(np.abs(printed - computed) <= tol))
    best, best_err = None, np.inf
    # identity first, so it wins ties
    for perm in itertools.permutations(heads):
        err = max(abs(row.printed[h] - rec[s]) for h, s in zip(heads, perm))
        if err < best_err:
            best, best_err = dict(zip(heads, perm)), err
    return RowReport(row, rec, tol, header_match, multiset, best, float(best_err), _minimal(rec))


def compare_table(table_id: int, tables: dict[int, list[TableRow]] | None = None) -> TableReport:
    if table_id not in TABLE_IDS:
        raise DomainError(f"unknown table id {table_id!r}; expected one of 1..7")
    tables = load_tables() if tables is None else tables
    rows = [compare_row(r) for r in tables[table_id]]
    # the assignment consistent with most rows; rows that match nothing do not vote
    votes = Counter(tuple(r.assignment.items()) for r in rows if r.assignment_error <= r.tolerance)
    if votes:
        shared = dict(max(votes.items(), key=lambda kv: (kv[1], _is_identity(kv[0])))[0])
    else:
        shared = {h: h for h in rows[0].row.headers}
    return TableReport(table_id, rows, shared)


def _is_identity(items) -> bool:
    return all(h == s for h, s in items)
