"""Simple undirected graphs with soft vertex deletion and exact undo."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphUsageError(ValueError):
    """Raised when an operation is asked about an invalid or deleted vertex."""


class Graph:
    """Undirected graph on vertices 0..n-1 with loop-free, deduplicated edges.

    Deletion is soft: vertices are flagged inactive and degree counters are
    adjusted, the adjacency structure itself never changes. Every deletion
    group is recorded on an undo stack so search code can branch cheaply and
    restore the exact prior state. Instances are single-owner: share across
    workers only as copies.
    """

    __slots__ = ("n", "_adj", "_nbrs_sorted", "_active", "_deg", "_m", "_undo")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise GraphUsageError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphUsageError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphUsageError(f"self-loop at vertex {u} is not allowed")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = adj
        self._nbrs_sorted = [sorted(s) for s in adj]
        self._active = bytearray([1] * n)
        self._deg = [len(s) for s in adj]
        self._m = sum(self._deg) // 2
        self._undo: list[list[int]] = []

    # -- queries ---------------------------------------------------------

    def _check(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphUsageError(f"vertex {v} out of range for n={self.n}")
        if not self._active[v]:
            raise GraphUsageError(f"vertex {v} is deleted")

    def is_active(self, v: int) -> bool:
        if not (0 <= v < self.n):
            raise GraphUsageError(f"vertex {v} out of range for n={self.n}")
        return bool(self._active[v])

    @property
    def m(self) -> int:
        """Number of edges between active vertices."""
        return self._m

    def active_count(self) -> int:
        return sum(self._active)

    def active_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self._active[v]]

    def degree(self, v: int) -> int:
        self._check(v)
        return self._deg[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def neighbors(self, v: int) -> Iterator[int]:
        """Active neighbors of v in ascending order."""
        self._check(v)
        act = self._active
        return (u for u in self._nbrs_sorted[v] if act[u])

    def neighbor_set(self, v: int) -> set[int]:
        self._check(v)
        act = self._active
        return {u for u in self._adj[v] if act[u]}

    def closed_neighborhood(self, v: int) -> set[int]:
        s = self.neighbor_set(v)
        s.add(v)
        return s

    def common_neighbors(self, u: int, v: int) -> set[int]:
        self._check(u)
        self._check(v)
        act = self._active
        return {w for w in self._adj[u] & self._adj[v] if act[w]}

    def max_degree(self) -> int:
        """Maximum degree over active vertices, 0 for an empty graph."""
        act = self._active
        deg = self._deg
        best = 0
        for v in range(self.n):
            if act[v] and deg[v] > best:
                best = deg[v]
        return best

    def edge_list(self) -> list[tuple[int, int]]:
        """Sorted list of active edges as (u, v) with u < v."""
        act = self._active
        out = []
        for u in range(self.n):
            if act[u]:
                for v in self._nbrs_sorted[u]:
                    if u < v and act[v]:
                        out.append((u, v))
        return out

    # -- mutation ---------------------------------------------------------

    def delete_vertices(self, vertices: Iterable[int]) -> int:
        """Delete a group of vertices, returning an undo token.

        The token marks the undo-stack position before this group; pass it to
        restore() to revert this deletion and anything stacked after it.
        Deleting the same vertex twice in one group is a usage error.
        """
        token = len(self._undo)
        group: list[int] = []
        self._undo.append(group)
        for v in vertices:
            self._check(v)
            act = self._active
            for u in self._adj[v]:
                if act[u]:
                    self._deg[u] -= 1
            self._m -= self._deg[v]
            act[v] = 0
            group.append(v)
        return token

    def restore(self, token: int) -> None:
        """Undo every deletion group recorded at or after token, in LIFO order."""
        if not (0 <= token <= len(self._undo)):
            raise GraphUsageError(f"bad undo token {token}")
        while len(self._undo) > token:
            group = self._undo.pop()
            for v in reversed(group):
                act = self._active
                act[v] = 1
                # LIFO restore means the active set now matches the state just
                # before v was deleted, so recounting gives the exact old degree.
                deg_v = 0
                for u in self._adj[v]:
                    if act[u]:
                        self._deg[u] += 1
                        deg_v += 1
                self._deg[v] = deg_v
                self._m += deg_v

    def copy(self) -> Graph:
        g = Graph(self.n)
        g._adj = [set(s) for s in self._adj]
        g._nbrs_sorted = [list(t) for t in self._nbrs_sorted]
        g._active = bytearray(self._active)
        g._deg = list(self._deg)
        g._m = self._m
        g._undo = [list(grp) for grp in self._undo]
        return g


@dataclass(frozen=True)
class Instance:
    """A solvable instance: graph, degree bound d, deletion budget k."""

    graph: Graph
    d: int
    k: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise GraphUsageError(f"degree bound d must be >= 0, got {self.d}")
        if self.k < 0:
            raise GraphUsageError(f"budget k must be >= 0, got {self.k}")
