"""Simple undirected graphs on at most 64 vertices, stored as bitmask rows.

Vertex subsets are plain ints (bit v set == vertex v in the set), which keeps
neighborhood algebra (intersection, symmetric difference, independence tests)
down to single machine-word operations for every graph this toolkit handles.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

MAX_VERTICES = 64


class CapacityError(ValueError):
    """A construction or conversion would exceed the 64-vertex word width."""


class CapExceededError(RuntimeError):
    """An enumeration cap was hit before the search finished."""

    def __init__(self, partial_count: int, cap: int):
        super().__init__(
            f"enumeration cap {cap} exceeded ({partial_count} results so far)"
        )
        self.partial_count = partial_count
        self.cap = cap


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: ``adj[v]`` is the bitmask of N(v)."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertices_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)


def from_edges(n: int, edges) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("self-loops not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def path_graph(n: int) -> Graph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def add_vertex(g: Graph, neighbors: int) -> Graph:
    """Append a vertex adjacent to ``neighbors`` (a mask over existing vertices)."""
    if neighbors >> g.n:
        raise ValueError("neighbor mask references nonexistent vertices")
    if g.n + 1 > MAX_VERTICES:
        raise CapacityError("graph already at the 64-vertex capacity")
    new = g.n
    rows = [row | (1 << new if neighbors >> v & 1 else 0) for v, row in enumerate(g.adj)]
    rows.append(neighbors)
    return Graph(g.n + 1, tuple(rows))


def induced_subgraph(g: Graph, keep: int) -> Graph:
    """Induced subgraph on ``keep``; vertex order follows ascending original index."""
    if keep & ~g.vertices_mask:
        raise ValueError("keep mask references nonexistent vertices")
    kept = list(bits(keep))
    pos = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in bits(g.adj[v] & keep):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(kept), tuple(rows))


def delete_vertices(g: Graph, drop: int) -> Graph:
    return induced_subgraph(g, g.vertices_mask & ~drop)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"no edge between {u} and {v}")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def relabel(g: Graph, perm) -> Graph:
    """Relabel vertices: vertex v becomes ``perm[v]``."""
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return Graph(g.n, tuple(rows))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    if a.n + b.n > MAX_VERTICES:
        raise CapacityError("union exceeds the 64-vertex capacity")
    rows = list(a.adj) + [row << a.n for row in b.adj]
    return Graph(a.n + b.n, tuple(rows))


def symmetric_difference(g: Graph, u: int, v: int) -> int:
    """N(u) xor N(v) as a vertex mask."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexError("vertex index out of range")
    return g.adj[u] ^ g.adj[v]


def is_triangle_free(g: Graph) -> bool:
    for v in range(g.n):
        for u in bits(g.adj[v] >> (v + 1) << (v + 1)):
            if g.adj[v] & g.adj[u]:
                return False
    return True


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.vertices_mask


def bipartition(g: Graph) -> Optional[tuple[int, int]]:
    """Two-color each component, or None if some component has an odd cycle.

    The component root (its smallest vertex) lands in the first part, so
    isolated vertices always sit in the first part.
    """
    color = [-1] * g.n
    first = second = 0
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    for v in range(g.n):
        if color[v] == 0:
            first |= 1 << v
        else:
            second |= 1 << v
    return first, second


def odd_closed_walk(g: Graph) -> Optional[list[int]]:
    """Return a closed walk with an odd number of edges, or None if bipartite."""
    parent = [-1] * g.n
    depth = [-1] * g.n
    for s in range(g.n):
        if depth[s] != -1:
            continue
        depth[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for u in bits(g.adj[v]):
                if depth[u] == -1:
                    depth[u] = depth[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif depth[u] % 2 == depth[v] % 2:
                    # Tree paths to v and u plus the edge uv close an odd walk.
                    up_v, up_u = [], []
                    a, b = v, u
                    while a != -1:
                        up_v.append(a)
                        a = parent[a]
                    while b != -1:
                        up_u.append(b)
                        b = parent[b]
                    return list(reversed(up_v)) + up_u
    return None


def duplication_classes(g: Graph) -> list[int]:
    """Masks of maximal vertex sets (size >= 2) sharing one open neighborhood."""
    groups: dict[int, int] = {}
    for v in range(g.n):
        groups[g.adj[v]] = groups.get(g.adj[v], 0) | (1 << v)
    classes = [m for m in groups.values() if m.bit_count() >= 2]
    classes.sort(key=lambda m: (m & -m).bit_length())
    return classes


def is_reduced(g: Graph) -> bool:
    if any(row == 0 for row in g.adj):
        return False
    return not duplication_classes(g)


def reduce_graph(g: Graph) -> Graph:
    """Drop isolated vertices and all but the smallest member of each twin class.

    Iterates to a fixpoint; the result is reduced (or empty) and has the same
    adjacency rank as the input.
    """
    while True:
        seen_rows: set[int] = set()
        keep = 0
        for v in range(g.n):
            row = g.adj[v]
            if row == 0 or row in seen_rows:
                continue
            seen_rows.add(row)
            keep |= 1 << v
        if keep == g.vertices_mask:
            return g
        g = induced_subgraph(g, keep)


def _clique_cover_bound(adj: tuple[int, ...], pool: int) -> int:
    """Greedy clique cover size of ``pool``: an upper bound on its independence number."""
    count = 0
    rem = pool
    while rem:
        v = (rem & -rem).bit_length() - 1
        rem &= rem - 1
        count += 1
        cand = rem & adj[v]
        while cand:
            u = (cand & -cand).bit_length() - 1
            rem &= ~(1 << u)
            cand &= adj[u]
    return count


def independence_number(g: Graph) -> tuple[int, int]:
    """Exact independence number with one maximum independent set as witness.

    Branch and bound: branch on a maximum-degree vertex of the candidate set,
    bound by a greedy clique cover.
    """
    n, adj = g.n, g.adj
    if n == 0:
        return 0, 0

    # Greedy min-degree seed for the initial lower bound.
    best_set = 0
    pool = g.vertices_mask
    while pool:
        v = min(bits(pool), key=lambda u: (adj[u] & pool).bit_count())
        best_set |= 1 << v
        pool &= ~(adj[v] | (1 << v))
    best_size = best_set.bit_count()

    def expand(cur: int, size: int, pool: int):
        nonlocal best_size, best_set
        if pool == 0:
            if size > best_size:
                best_size, best_set = size, cur
            return
        if size + pool.bit_count() <= best_size:
            return
        if size + _clique_cover_bound(adj, pool) <= best_size:
            return
        v = max(bits(pool), key=lambda u: (adj[u] & pool).bit_count())
        expand(cur | (1 << v), size + 1, pool & ~(adj[v] | (1 << v)))
        expand(cur, size, pool & ~(1 << v))

    expand(0, 0, g.vertices_mask)
    return best_size, best_set


def maximum_independent_sets(g: Graph, cap: int = 100_000) -> list[int]:
    """All independent sets of maximum size, as masks in lexicographic order.

    Raises CapExceededError (carrying the partial count) if more than ``cap``
    sets are found.
    """
    alpha, _ = independence_number(g)
    adj = g.adj
    results: list[int] = []

    def rec(cur: int, size: int, pool: int):
        if size == alpha:
            results.append(cur)
            if len(results) > cap:
                raise CapExceededError(len(results), cap)
            return
        if pool == 0 or size + pool.bit_count() < alpha:
            return
        if size + _clique_cover_bound(adj, pool) < alpha:
            return
        v = (pool & -pool).bit_length() - 1
        rec(cur | (1 << v), size + 1, pool & ~(adj[v] | (1 << v)))
        rec(cur, size, pool & ~(1 << v))

    if g.n:
        rec(0, 0, g.vertices_mask)
    else:
        results.append(0)
    return results
