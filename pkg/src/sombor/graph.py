"""Immutable simple undirected graphs on vertices ``0..n-1``.

The edge-list interchange format used by the CLI is::

    n m
    u v
    ...

with ``m`` lines of 0-based endpoints, ``u < v``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

from .errors import GraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple graph stored as sorted neighbour tuples.

    Build through :func:`new_graph`; the constructor does not validate.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_vertex(self, v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v


def new_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Edges may be given in either orientation; repeated edges collapse to one.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}: edge ({u}, {v})")
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphError(f"vertex index {x} out of range for n={n}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range for n={G.n}")


def degree(G: Graph, v: int) -> int:
    _check_vertex(G, v)
    return len(G.adjacency[v])


def edges(G: Graph) -> list[Edge]:
    """Every edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
    return [(u, v) for u, nbrs in enumerate(G.adjacency) for v in nbrs if u < v]


def is_k_regular(G: Graph) -> Optional[int]:
    """Return the common degree ``k`` if ``G`` is regular, else ``None``."""
    if G.n == 0:
        raise GraphError("empty graph: regularity is undefined")
    k = len(G.adjacency[0])
    if all(len(nbrs) == k for nbrs in G.adjacency):
        return k
    return None


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled in the given order."""
    order = list(vertices)
    index = {v: i for i, v in enumerate(order)}
    kept = [
        (index[u], index[v])
        for u, v in edges(G)
        if u in index and v in index
    ]
    return new_graph(len(order), kept)


# edge-list text format


def format_edgelist(G: Graph) -> str:
    es = edges(G)
    lines = [f"{G.n} {len(es)}"]
    lines.extend(f"{u} {v}" for u, v in es)
    return "\n".join(lines) + "\n"


def write_edgelist(G: Graph, fh: TextIO) -> None:
    fh.write(format_edgelist(G))


def parse_edgelist(text: str) -> Graph:
    """Parse the ``n m`` header plus ``m`` edge lines.

    Raises :class:`GraphError` on a malformed header, a wrong edge count,
    or an edge not written as ``u < v``.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("edge list is empty; expected header 'n m'")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError(f"bad header {lines[0]!r}; expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphError(f"bad header {lines[0]!r}; expected integers") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges but {len(body)} lines follow")
    es = []
    for lineno, ln in enumerate(body, start=2):
        parts = ln.split()
        try:
            u, v = (int(p) for p in parts)
        except ValueError:
            raise GraphError(f"line {lineno}: expected 'u v', got {ln!r}") from None
        if u >= v:
            raise GraphError(f"line {lineno}: edge must satisfy u < v, got {ln!r}")
        es.append((u, v))
    return new_graph(n, es)


def read_edgelist(fh: TextIO) -> Graph:
    return parse_edgelist(fh.read())
