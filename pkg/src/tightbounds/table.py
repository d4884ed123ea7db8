"""The knowledge table: objects x exact-rational invariants x boolean properties.

Tables are immutable snapshots.  Anything mutation-shaped (appending a
counterexample) returns a fresh table, so conjecture runs taken against one
version are never disturbed by later appends.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .graphs import (
    GRAPH_BOOLEAN_COLUMNS,
    GRAPH_NUMERIC_COLUMNS,
    Graph,
    compute_invariant_vector,
)
from .integers import (
    INTEGER_BOOLEAN_COLUMNS,
    INTEGER_NUMERIC_COLUMNS,
    IntegerRecord,
    compute_integer_record,
)
from .rationals import format_rational, parse_rational

GRAPH_DOMAIN = "graph"
INTEGER_DOMAIN = "integer"


class TableError(ValueError):
    """Malformed table construction or lookup."""


class TableFormatError(TableError):
    """Persistence-layer parse failure; message carries the line number."""


@dataclass(frozen=True)
class Hypothesis:
    """A conjunction of boolean columns used as a conjecture premise."""

    conjuncts: frozenset[str]

    def __init__(self, conjuncts: Iterable[str]) -> None:
        object.__setattr__(self, "conjuncts", frozenset(conjuncts))
        if not self.conjuncts:
            raise TableError("hypothesis needs at least one conjunct")

    def validate(self, table: "KnowledgeTable") -> None:
        unknown = self.conjuncts - set(table.boolean_columns)
        if unknown:
            raise TableError(f"unknown property name(s): {', '.join(sorted(unknown))}")

    def render(self, boolean_columns: Sequence[str]) -> str:
        """Conjuncts joined by ' and ' in table column order."""
        ordered = [c for c in boolean_columns if c in self.conjuncts]
        ordered.extend(sorted(self.conjuncts - set(boolean_columns)))
        return " and ".join(ordered)


# The four premise conjunctions used by the default graph pipeline.
DEFAULT_GRAPH_HYPOTHESES = (
    Hypothesis({"connected"}),
    Hypothesis({"tree"}),
    Hypothesis({"connected", "regular"}),
    Hypothesis({"connected", "bipartite"}),
)


@dataclass(frozen=True)
class KnowledgeTable:
    """Immutable rows of (id, numeric cells, boolean cells).

    ``sources`` retains the raw objects behind rows when known (None for rows
    loaded from disk); it is deliberately excluded from equality so that a
    save/load round trip compares equal.
    """

    domain: str
    numeric_columns: tuple[str, ...]
    boolean_columns: tuple[str, ...]
    ids: tuple[str, ...]
    numeric_rows: tuple[tuple[Fraction, ...], ...]
    boolean_rows: tuple[tuple[bool, ...], ...]
    sources: tuple[object | None, ...] = field(compare=False, default=())

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for name in self.ids:
            if name in seen:
                raise TableError(f"duplicate id {name}")
            seen.add(name)
        if not self.sources:
            object.__setattr__(self, "sources", (None,) * len(self.ids))

    # -- lookups ---------------------------------------------------------

    @property
    def row_count(self) -> int:
        return len(self.ids)

    def numeric_index(self, column: str) -> int:
        try:
            return self.numeric_columns.index(column)
        except ValueError:
            raise TableError(f"unknown invariant name: {column}") from None

    def boolean_index(self, column: str) -> int:
        try:
            return self.boolean_columns.index(column)
        except ValueError:
            raise TableError(f"unknown property name: {column}") from None

    def value(self, row: int, column: str) -> Fraction:
        return self.numeric_rows[row][self.numeric_index(column)]

    def flag(self, row: int, column: str) -> bool:
        return self.boolean_rows[row][self.boolean_index(column)]

    def select_rows(self, hypothesis: Hypothesis) -> tuple[int, ...]:
        """Indices of rows where every conjunct holds, in table order."""
        hypothesis.validate(self)
        cols = [self.boolean_index(c) for c in hypothesis.conjuncts]
        return tuple(
            i
            for i in range(self.row_count)
            if all(self.boolean_rows[i][c] for c in cols)
        )

    # -- construction ----------------------------------------------------

    def append_object(self, obj: Graph | IntegerRecord | int) -> "KnowledgeTable":
        """Return a new table with one extra fully computed row."""
        if self.domain == GRAPH_DOMAIN:
            if not isinstance(obj, Graph):
                raise TableError(f"domain mismatch: expected a graph, got {type(obj).__name__}")
            name = obj.id
            vector = compute_invariant_vector(obj)
            values, flags, source = vector.values, vector.flags, obj
        elif self.domain == INTEGER_DOMAIN:
            if isinstance(obj, int):
                obj = compute_integer_record(obj)
            if not isinstance(obj, IntegerRecord):
                raise TableError(f"domain mismatch: expected an integer, got {type(obj).__name__}")
            name = str(obj.value)
            values, flags, source = obj.values, obj.flags, obj
        else:
            raise TableError(f"unknown domain {self.domain!r}")
        if name in self.ids:
            raise TableError(f"duplicate id {name}")
        return KnowledgeTable(
            domain=self.domain,
            numeric_columns=self.numeric_columns,
            boolean_columns=self.boolean_columns,
            ids=self.ids + (name,),
            numeric_rows=self.numeric_rows + (tuple(values[c] for c in self.numeric_columns),),
            boolean_rows=self.boolean_rows + (tuple(flags[c] for c in self.boolean_columns),),
            sources=self.sources + (source,),
        )


def build_graph_table(graphs: Sequence[Graph]) -> KnowledgeTable:
    """One row per graph, columns fixed in the standard order."""
    if not graphs:
        raise TableError("graph list must be non-empty")
    ids: list[str] = []
    numeric_rows = []
    boolean_rows = []
    for g in graphs:
        if g.id in ids:
            raise TableError(f"duplicate id {g.id}")
        try:
            vector = compute_invariant_vector(g)
        except Exception as exc:
            raise TableError(f"invariant computation failed for {g.id}: {exc}") from exc
        ids.append(g.id)
        numeric_rows.append(tuple(vector.values[c] for c in GRAPH_NUMERIC_COLUMNS))
        boolean_rows.append(tuple(vector.flags[c] for c in GRAPH_BOOLEAN_COLUMNS))
    return KnowledgeTable(
        domain=GRAPH_DOMAIN,
        numeric_columns=GRAPH_NUMERIC_COLUMNS,
        boolean_columns=GRAPH_BOOLEAN_COLUMNS,
        ids=tuple(ids),
        numeric_rows=tuple(numeric_rows),
        boolean_rows=tuple(boolean_rows),
        sources=tuple(graphs),
    )


def build_integer_table(records: Sequence[IntegerRecord]) -> KnowledgeTable:
    """One row per integer record, ids being the decimal values."""
    if not records:
        raise TableError("record list must be non-empty")
    ids = tuple(str(r.value) for r in records)
    return KnowledgeTable(
        domain=INTEGER_DOMAIN,
        numeric_columns=INTEGER_NUMERIC_COLUMNS,
        boolean_columns=INTEGER_BOOLEAN_COLUMNS,
        ids=ids,
        numeric_rows=tuple(tuple(r.values[c] for c in INTEGER_NUMERIC_COLUMNS) for r in records),
        boolean_rows=tuple(tuple(r.flags[c] for c in INTEGER_BOOLEAN_COLUMNS) for r in records),
        sources=tuple(records),
    )


# -- CSV persistence -----------------------------------------------------
#
# Cells are "p/q" rationals and "True"/"False" booleans; the first line is a
# "# domain=..." comment so a loaded table knows which column set it carries.


def table_to_csv(table: KnowledgeTable) -> str:
    """Pure CSV (header + rows), without the domain comment."""
    lines = ["name," + ",".join(table.numeric_columns + table.boolean_columns)]
    for i, name in enumerate(table.ids):
        cells = [name]
        cells.extend(format_rational(v) for v in table.numeric_rows[i])
        cells.extend(str(b) for b in table.boolean_rows[i])
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def save_table(table: KnowledgeTable, path: str | Path) -> None:
    Path(path).write_text(f"# domain={table.domain}\n" + table_to_csv(table))


def _parse_bool(cell: str, lineno: int) -> bool:
    if cell == "True":
        return True
    if cell == "False":
        return False
    raise TableFormatError(f"line {lineno}: expected True/False, got {cell!r}")


def load_table(path: str | Path) -> KnowledgeTable:
    """Inverse of save_table; loaded tables carry no source objects."""
    path = Path(path)
    if not path.is_file():
        raise TableFormatError(f"no such table file: {path}")
    domain = None
    header: list[str] | None = None
    ids: list[str] = []
    numeric_rows = []
    boolean_rows = []
    n_numeric = 0
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if "domain=" in line:
                domain = line.split("domain=", 1)[1].strip()
            continue
        cells = line.split(",")
        if header is None:
            header = cells
            if not cells or cells[0] != "name":
                raise TableFormatError(f"line {lineno}: header must start with 'name'")
            if domain is None:
                domain = _infer_domain(cells[1:])
            n_numeric = _numeric_count(domain, cells, lineno)
            continue
        if len(cells) != len(header):
            raise TableFormatError(
                f"line {lineno}: expected {len(header)} cells, got {len(cells)}"
            )
        ids.append(cells[0])
        try:
            numeric_rows.append(tuple(parse_rational(c) for c in cells[1 : 1 + n_numeric]))
        except ValueError as exc:
            raise TableFormatError(f"line {lineno}: {exc}") from None
        boolean_rows.append(
            tuple(_parse_bool(c, lineno) for c in cells[1 + n_numeric :])
        )
    if header is None:
        raise TableFormatError("empty table file")
    assert domain is not None
    return KnowledgeTable(
        domain=domain,
        numeric_columns=tuple(header[1 : 1 + n_numeric]),
        boolean_columns=tuple(header[1 + n_numeric :]),
        ids=tuple(ids),
        numeric_rows=tuple(numeric_rows),
        boolean_rows=tuple(boolean_rows),
    )


def _infer_domain(columns: list[str]) -> str:
    if set(GRAPH_NUMERIC_COLUMNS) <= set(columns):
        return GRAPH_DOMAIN
    if set(INTEGER_NUMERIC_COLUMNS) <= set(columns):
        return INTEGER_DOMAIN
    raise TableFormatError(f"cannot infer domain from columns {columns}")


def _numeric_count(domain: str, header: list[str], lineno: int) -> int:
    expected = {
        GRAPH_DOMAIN: (GRAPH_NUMERIC_COLUMNS, GRAPH_BOOLEAN_COLUMNS),
        INTEGER_DOMAIN: (INTEGER_NUMERIC_COLUMNS, INTEGER_BOOLEAN_COLUMNS),
    }.get(domain)
    if expected is None:
        raise TableFormatError(f"line {lineno}: unknown domain {domain!r}")
    numeric, boolean = expected
    if tuple(header[1:]) != numeric + boolean:
        raise TableFormatError(
            f"line {lineno}: header does not match the {domain} column set"
        )
    return len(numeric)
