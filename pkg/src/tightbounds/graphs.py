"""Simple undirected graphs and the invariants behind the graph knowledge table.

Everything here is exact: invariants are integers (stored upstream as
rationals), and the NP-hard quantities are solved by small exact searches.
Brute-force oracles (plain subset enumeration) live alongside the production
solvers so tests can cross-check the two routes on small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

INDEPENDENCE_VERTEX_LIMIT = 24

GRAPH_NUMERIC_COLUMNS = (
    "n",
    "matching_number",
    "independence_number",
    "n_minus_matching_number",
    "n_minus_minimum_degree",
    "maximum_degree_squared",
)
GRAPH_BOOLEAN_COLUMNS = ("connected", "tree", "regular", "bipartite")


class GraphError(ValueError):
    """Invalid graph input or an operation outside its supported range."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Identity is the ``id`` label: the same structure may appear under several
    ids (knowledge-table rows are keyed by label, not by isomorphism class).
    """

    id: str
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"{self.id}: vertex count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"{self.id}: self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"{self.id}: edge ({u}, {v}) outside 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, id: str, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing each edge to ``(min, max)`` order."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"{id}: self-loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        return cls(id=id, n=n, edges=frozenset(normalized))

    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbor sets as bitmasks, one per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return tuple(degs)

    def relabeled(self, new_id: str) -> "Graph":
        return Graph(id=new_id, n=self.n, edges=self.edges)


def parse_edge_list(text: str, id: str = "graph") -> Graph:
    """Parse the edge-list text format.

    First meaningful line is ``n <count>``; every following line is ``u v``
    with 0-based endpoints.  Lines starting with ``#`` and blank lines are
    ignored.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: expected 'n <count>', got {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer endpoint in {raw!r}") from None
        edges.append((u, v))
    if n is None:
        raise GraphError("missing 'n <count>' header line")
    try:
        return Graph.from_edges(id, n, edges)
    except GraphError as exc:
        raise GraphError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list (edges in sorted order)."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def _require_vertices(g: Graph) -> None:
    if g.n == 0:
        raise GraphError(f"{g.id}: degenerate graph")


def min_degree(g: Graph) -> int:
    """Minimum vertex degree; errors on the empty graph."""
    _require_vertices(g)
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    """Maximum vertex degree; errors on the empty graph."""
    _require_vertices(g)
    return max(g.degrees())


def is_connected(g: Graph) -> bool:
    """Connectivity by traversal; the single vertex counts as connected."""
    _require_vertices(g)
    adj = g.adjacency_masks()
    seen = 1
    frontier = 1
    full = (1 << g.n) - 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def is_tree(g: Graph) -> bool:
    """Connected with exactly n-1 edges; the single vertex is a tree."""
    _require_vertices(g)
    return len(g.edges) == g.n - 1 and is_connected(g)


def is_regular(g: Graph) -> bool:
    """All degrees equal; the single vertex is (0-)regular."""
    _require_vertices(g)
    degs = g.degrees()
    return min(degs) == max(degs)


def is_bipartite(g: Graph) -> bool:
    """2-colorability via BFS coloring of every component."""
    _require_vertices(g)
    adj = g.adjacency_masks()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            m = adj[v]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def independence_number(g: Graph) -> int:
    """Exact maximum independent set size by branch and bound.

    Branches on a maximum-degree vertex (in or out of the set), prunes with
    the trivial remaining-vertex bound seeded by a greedy solution.  Refuses
    graphs beyond INDEPENDENCE_VERTEX_LIMIT vertices: this engine is exact
    and desk-scale by design.
    """
    if g.n == 0:
        return 0
    if g.n > INDEPENDENCE_VERTEX_LIMIT:
        raise GraphError(
            f"{g.id}: exact independence search supports at most "
            f"{INDEPENDENCE_VERTEX_LIMIT} vertices (got {g.n})"
        )
    adj = g.adjacency_masks()
    full = (1 << g.n) - 1

    # Greedy min-degree seed gives the initial lower bound.
    best = 0
    mask = full
    while mask:
        v = min(
            (w for w in range(g.n) if mask >> w & 1),
            key=lambda w: (adj[w] & mask).bit_count(),
        )
        best += 1
        mask &= ~(adj[v] | (1 << v))

    def search(mask: int, size: int) -> int:
        nonlocal best
        if size + mask.bit_count() <= best:
            return best
        if mask == 0:
            best = max(best, size)
            return best
        # Pick a max-degree vertex in the remaining subgraph.
        v = max(
            (w for w in range(g.n) if mask >> w & 1),
            key=lambda w: (adj[w] & mask).bit_count(),
        )
        if adj[v] & mask == 0:
            # Isolated in the residual graph: always take it.
            return search(mask & ~(1 << v), size + 1)
        search(mask & ~(adj[v] | (1 << v)), size + 1)
        search(mask & ~(1 << v), size)
        return best

    return search(full, 0)


def independence_number_bruteforce(g: Graph) -> int:
    """Oracle: enumerate every vertex subset.  Intended for small graphs."""
    adj = g.adjacency_masks()
    best = 0
    for subset in range(1 << g.n):
        ok = True
        m = subset
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if adj[v] & subset:
                ok = False
                break
        if ok:
            best = max(best, subset.bit_count())
    return best


def matching_number(g: Graph) -> int:
    """Exact maximum matching size by memoized branching.

    For the lowest non-isolated vertex u, either u stays unmatched or it is
    matched to one of its neighbors; both branches recurse on the reduced
    vertex set.  Works on general (non-bipartite) graphs.
    """
    if g.n == 0:
        return 0
    adj = g.adjacency_masks()

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        while mask:
            u = (mask & -mask).bit_length() - 1
            candidates = adj[u] & mask
            if candidates == 0:
                mask &= mask - 1  # isolated: drop and continue
                continue
            without_u = mask & ~(1 << u)
            result = best(without_u)
            m = candidates
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                result = max(result, 1 + best(without_u & ~(1 << v)))
            return result
        return 0

    result = best((1 << g.n) - 1)
    best.cache_clear()
    return result


def matching_number_bruteforce(g: Graph) -> int:
    """Oracle: enumerate every edge subset and keep the disjoint ones."""
    edges = sorted(g.edges)
    best = 0
    for subset in range(1 << len(edges)):
        used = 0
        size = 0
        ok = True
        m = subset
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            u, v = edges[i]
            bits = (1 << u) | (1 << v)
            if used & bits:
                ok = False
                break
            used |= bits
            size += 1
        if ok:
            best = max(best, size)
    return best


@dataclass(frozen=True)
class InvariantVector:
    """One knowledge-table row: exact numeric invariants plus boolean flags."""

    values: Mapping[str, Fraction]
    flags: Mapping[str, bool]


def compute_invariant_vector(g: Graph) -> InvariantVector:
    """All registered invariants and properties of ``g``, exactly.

    Derived columns satisfy their definitions by construction:
    ``n_minus_matching_number = n - matching_number`` and so on.
    """
    _require_vertices(g)
    mu = matching_number(g)
    alpha = independence_number(g)
    delta = min_degree(g)
    big_delta = max_degree(g)
    values = {
        "n": Fraction(g.n),
        "matching_number": Fraction(mu),
        "independence_number": Fraction(alpha),
        "n_minus_matching_number": Fraction(g.n - mu),
        "n_minus_minimum_degree": Fraction(g.n - delta),
        "maximum_degree_squared": Fraction(big_delta * big_delta),
    }
    flags = {
        "connected": is_connected(g),
        "tree": is_tree(g),
        "regular": is_regular(g),
        "bipartite": is_bipartite(g),
    }
    return InvariantVector(values=values, flags=flags)
