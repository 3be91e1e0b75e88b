"""Simple undirected graphs on dense integer labels 0..n-1.

Adjacency is held twice: as sorted neighbour tuples for iteration and as
integer bit rows (bit ``v`` of ``rows[u]`` set iff ``uv`` is an edge).  The bit
rows make induced-subgraph connectivity cheap, which is what the cut-set
enumeration in :mod:`spectough.toughness` spends its time on.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import InvalidArgument

VertexSet = frozenset


class Graph:
    """Immutable simple graph.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.num_edges, g.degree(1)
    (2, 2)
    """

    __slots__ = ("_n", "_rows", "_nbrs", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise InvalidArgument(f"graph needs at least one vertex, got n={n}")
        rows = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidArgument(f"self-loop at vertex {u}")
            if rows[u] >> v & 1:
                raise InvalidArgument(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            m += 1
        self._finish(n, rows, m)

    def _finish(self, n: int, rows: list[int], m: int) -> None:
        self._n = n
        self._rows = tuple(rows)
        self._nbrs = tuple(tuple(_bits(r)) for r in rows)
        self._m = m

    @classmethod
    def _from_rows(cls, rows: list[int]) -> "Graph":
        g = cls.__new__(cls)
        g._finish(len(rows), rows, sum(r.bit_count() for r in rows) // 2)
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return self._m

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._nbrs]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nb in enumerate(self._nbrs):
            for v in nb:
                if v > u:
                    yield (u, v)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self._n):
            for v in range(u + 1, self._n):
                if not self._rows[u] >> v & 1:
                    yield (u, v)

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise InvalidArgument(f"({u}, {v}) is not an edge")
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._from_rows(rows)

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v or self.has_edge(u, v):
            raise InvalidArgument(f"cannot add ({u}, {v})")
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._from_rows(rows)

    def is_complete(self) -> bool:
        return self._m == self._n * (self._n - 1) // 2

    def is_connected(self) -> bool:
        return _reach(self._rows, 0, (1 << self._n) - 1) == (1 << self._n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reach(rows: tuple[int, ...], start: int, alive: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``alive``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def count_components(rows: tuple[int, ...], alive: int) -> int:
    """Number of connected components of the subgraph induced on ``alive``."""
    count = 0
    while alive:
        start = (alive & -alive).bit_length() - 1
        alive &= ~_reach(rows, start, alive)
        count += 1
    return count


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def build_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidArgument(f"K_n needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph._from_rows([full & ~(1 << v) for v in range(n)])


def build_empty(n: int) -> Graph:
    return Graph(n)


def build_path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidArgument(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def build_complete_bipartite(p: int, q: int) -> Graph:
    return join(Graph(p), Graph(q))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1 + g2``; vertices of ``g2`` are shifted by ``g1.n``."""
    shift = g1.n
    return Graph._from_rows(list(g1.rows) + [r << shift for r in g2.rows])


def join(g1: Graph, g2: Graph) -> Graph:
    """``g1 ∨ g2``: the disjoint union (``g1`` first) plus every cross edge."""
    n1, n2 = g1.n, g2.n
    all2 = ((1 << n2) - 1) << n1
    all1 = (1 << n1) - 1
    rows = [r | all2 for r in g1.rows] + [(r << n1) | all1 for r in g2.rows]
    return Graph._from_rows(rows)


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def components_after_removal(g: Graph, s: Iterable[int]) -> tuple[int, list[frozenset[int]]]:
    """Connected components of ``g - s`` found by breadth-first search.

    Parts are listed in order of their smallest vertex.
    """
    removed = frozenset(s)
    for v in removed:
        if not 0 <= v < g.n:
            raise InvalidArgument(f"vertex {v} out of range")
    if len(removed) >= g.n:
        raise InvalidArgument("removing every vertex leaves nothing")
    seen = set(removed)
    parts = []
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        part = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    part.append(w)
                    queue.append(w)
        parts.append(frozenset(part))
    return len(parts), parts
