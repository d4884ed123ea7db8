"""Counterexample search and the refine-by-counterexample loop.

A refuted conjecture is an opportunity: find the smallest graph that breaks
it, fold that graph into the knowledge table, and the generator can never
propose the same bound again (generation only emits bounds valid on every
table row).  The built-in enumerator serves candidates up to 6 vertices;
larger orders come from graph6 atlas files.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterable, Iterator

from .conjectures import LinearConjecture
from .graphs import Graph, GraphError, compute_invariant_vector
from .table import GRAPH_DOMAIN, KnowledgeTable, TableError

ENUMERATOR_VERTEX_LIMIT = 6


# -- exhaustive connected-graph enumeration ------------------------------
#
# Graphs are edge bitmasks over pair slots (i, j), i < j, indexed
# j*(j-1)/2 + i.  The canonical form of a graph is the minimum bitmask over
# all vertex relabelings: brute force, but exhaustive relabeling is exactly
# right at <= 6 vertices.  Each n-vertex class is produced by attaching a new
# vertex to every nonempty subset of every (n-1)-vertex representative; every
# connected graph has a non-cut vertex, so nothing is missed.


def _pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def _perm_tables(n: int) -> list[list[int]]:
    tables = []
    pairs = list(combinations(range(n), 2))
    for perm in permutations(range(n)):
        table = [0] * len(pairs)
        for i, j in pairs:
            table[_pair_index(i, j)] = _pair_index(perm[i], perm[j])
        tables.append(table)
    return tables


def _canonical_mask(mask: int, perm_tables: list[list[int]]) -> int:
    best = None
    for table in perm_tables:
        image = 0
        m = mask
        while m:
            k = (m & -m).bit_length() - 1
            m &= m - 1
            image |= 1 << table[k]
        if best is None or image < best:
            best = image
    return best if best is not None else 0


def _mask_to_edges(mask: int, n: int) -> list[tuple[int, int]]:
    edges = []
    for i, j in combinations(range(n), 2):
        if mask >> _pair_index(i, j) & 1:
            edges.append((i, j))
    return edges


_REPRESENTATIVES: dict[int, list[list[int]]] = {}


def _connected_representatives(max_n: int) -> list[list[int]]:
    """Canonical edge masks of all connected graphs, per vertex count.

    Cached per process; the enumeration is deterministic.
    """
    cached = _REPRESENTATIVES.get(max_n)
    if cached is not None:
        return cached
    per_n: list[list[int]] = [[0]]  # index 0 -> n=1 (the single vertex, mask 0)
    for n in range(2, max_n + 1):
        tables = _perm_tables(n)
        base_pairs = n - 1  # new vertex n-1 attaches via pairs (i, n-1)
        found: set[int] = set()
        for base_mask in per_n[n - 2]:
            for subset in range(1, 1 << (n - 1)):
                mask = base_mask
                for i in range(base_pairs):
                    if subset >> i & 1:
                        mask |= 1 << _pair_index(i, n - 1)
                found.add(_canonical_mask(mask, tables))
        ordered = sorted(found, key=lambda m: (m.bit_count(), m))
        per_n.append(ordered)
    _REPRESENTATIVES[max_n] = per_n
    return per_n


def enumerate_connected_graphs(max_n: int) -> Iterator[Graph]:
    """All connected simple graphs up to isomorphism, smallest first.

    Ordered by vertex count, then edge count, then canonical form.  Capped at
    ENUMERATOR_VERTEX_LIMIT vertices; ingest graph6 atlas files beyond that.
    """
    if not 1 <= max_n <= ENUMERATOR_VERTEX_LIMIT:
        raise GraphError(
            f"enumerator supports 1..{ENUMERATOR_VERTEX_LIMIT} vertices; "
            "use graph6 ingestion for larger orders"
        )
    per_n = _connected_representatives(max_n)
    for n in range(1, max_n + 1):
        for k, mask in enumerate(per_n[n - 1], start=1):
            yield Graph.from_edges(f"enum-{n}-{k}", n, _mask_to_edges(mask, n))


# -- graph6 ingestion -----------------------------------------------------


def parse_graph6_line(line: str, id: str | None = None) -> Graph:
    """Decode one graph6 line (standard bit-packed upper triangle)."""
    s = line.strip()
    if not s:
        raise GraphError("empty graph6 line")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= b <= 63 for b in data):
        raise GraphError(f"invalid graph6 characters in {line!r}")
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    else:
        if len(data) < 4 or data[1] == 63:
            raise GraphError(f"unsupported graph6 size header in {line!r}")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError(
            f"graph6 line has {len(body)} data bytes, expected {need} for n={n}"
        )
    bits = []
    for b in body:
        bits.extend((b >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(id if id is not None else f"g6:{s}", n, edges)


def ingest_graph6(path: str | Path) -> Iterator[Graph]:
    """Decode a file of graph6 lines, in file order; ids are 'g6:{line}'."""
    path = Path(path)
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            yield parse_graph6_line(raw)
        except GraphError as exc:
            raise GraphError(f"{path}:{lineno}: {exc}") from None


# -- counterexample search ------------------------------------------------


@dataclass(frozen=True)
class CounterexampleReport:
    """A witness that strictly violates a conjecture, plus the two sides."""

    conjecture: LinearConjecture
    witness_id: str
    witness: Graph
    order: int
    lhs: Fraction
    rhs: Fraction


def _violation(c: LinearConjecture, g: Graph) -> tuple[Fraction, Fraction] | None:
    """(lhs, rhs) when g satisfies the hypothesis and breaks the inequality."""
    vector = compute_invariant_vector(g)
    if not all(vector.flags.get(name, False) for name in c.hypothesis.conjuncts):
        return None
    lhs = vector.values[c.target]
    rhs = c.rhs.intercept
    for name, slope in c.rhs.terms:
        rhs += slope * vector.values[name]
    broken = lhs > rhs if c.direction == "upper" else lhs < rhs
    return (lhs, rhs) if broken else None


def find_smallest_counterexample(
    c: LinearConjecture,
    candidates: Iterable[Graph],
    skip_ids: Iterable[str] = (),
) -> CounterexampleReport | None:
    """First candidate (in stream order) that breaks the conjecture.

    The stream is trusted to be ordered smallest-first, so the first hit is
    the minimal witness.  Candidates whose ids appear in ``skip_ids`` are
    passed over.
    """
    skip = set(skip_ids)
    for g in candidates:
        if g.id in skip:
            continue
        try:
            verdict = _violation(c, g)
        except GraphError as exc:
            raise GraphError(f"candidate {g.id}: {exc}") from exc
        if verdict is not None:
            lhs, rhs = verdict
            return CounterexampleReport(
                conjecture=c, witness_id=g.id, witness=g, order=g.n, lhs=lhs, rhs=rhs
            )
    return None


def red_burton(
    table: KnowledgeTable,
    c: LinearConjecture,
    candidates: Iterable[Graph],
) -> tuple[KnowledgeTable, CounterexampleReport | None]:
    """Find the smallest counterexample and fold it into the table.

    On success the returned table contains the witness under a fresh
    ``ce-{k}`` id, which makes the refuted bound infeasible for every future
    generation pass.  Without a counterexample the table returns unchanged.
    """
    if table.domain != GRAPH_DOMAIN:
        raise TableError("refinement operates on graph tables")
    report = find_smallest_counterexample(c, candidates, skip_ids=table.ids)
    if report is None:
        return table, None
    k = 1
    while f"ce-{k}" in table.ids:
        k += 1
    witness = report.witness.relabeled(f"ce-{k}")
    new_table = table.append_object(witness)
    report = CounterexampleReport(
        conjecture=c,
        witness_id=witness.id,
        witness=witness,
        order=witness.n,
        lhs=report.lhs,
        rhs=report.rhs,
    )
    return new_table, report
