"""Simple undirected graphs with dense integer vertices and canonical edge ids.

Edges are stored as ``(u, v)`` pairs with ``u < v``, sorted lexicographically;
the position of a pair in :attr:`Graph.edges` is its edge id.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

INF = math.inf


class GraphError(ValueError):
    """Base class for malformed or invalid graph input."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ValidationError(GraphError):
    pass


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValidationError(f"negative vertex count {n}")
        pairs = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            pairs.append((u, v) if u < v else (v, u))
        pairs.sort()
        for a, b in zip(pairs, pairs[1:]):
            if a == b:
                raise ValidationError(f"duplicate edge {a}")
        self._init(n, pairs)

    def _init(self, n: int, pairs: list[tuple[int, int]]) -> None:
        adj: list[list[int]] = [[] for _ in range(n)]
        # pairs are sorted, so appending keeps every list sorted
        for u, v in pairs:
            adj[u].append(v)
        for u, v in pairs:
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(pairs)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(lst) for lst in adj)
        self._index: dict[tuple[int, int], int] | None = None

    @classmethod
    def _trusted(cls, n: int, pairs: list[tuple[int, int]]) -> Graph:
        # pairs must already be normalized, sorted and duplicate free
        g = cls.__new__(cls)
        g._init(n, pairs)
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    @property
    def edge_index(self) -> dict[tuple[int, int], int]:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.edges)}
        return self._index

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise ValidationError(f"({u}, {v}) is not an edge") from None

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValidationError(f"invalid vertex id {v}")

    def check_edge(self, e: int) -> None:
        if not 0 <= e < len(self.edges):
            raise ValidationError(f"invalid edge id {e}")

    def subgraph_edges(self, keep: Iterable[int]) -> Graph:
        """Same vertex set, only the edges whose ids are in ``keep``."""
        ids = sorted(set(keep))
        for e in ids:
            self.check_edge(e)
        return Graph._trusted(self.n, [self.edges[e] for e in ids])

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph on ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        pairs = []
        for v in vertices:
            a = pos[v]
            for w in self.adj[v]:
                b = pos.get(w)
                if b is not None and a < b:
                    pairs.append((a, b))
        pairs.sort()
        return Graph._trusted(len(vertices), pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# Edge-list text format ------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse an edge list: one ``u v`` pair per line, optional ``n m`` header.

    The first line is read as a header when it holds two integers ``n m`` with
    ``n >= 1`` and exactly ``m`` edge lines follow it; otherwise it is an edge.
    Blank lines and ``#`` comments are ignored.  Without a header, ``n`` is one
    more than the largest vertex id.
    """
    rows: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected two integers, got {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"expected two integers, got {raw.strip()!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, "vertex ids must be nonnegative")
        rows.append((lineno, u, v))

    declared = None
    if rows and rows[0][1] >= 1 and rows[0][2] == len(rows) - 1:
        declared = rows[0][1]
        rows = rows[1:]

    seen: set[tuple[int, int]] = set()
    pairs = []
    top = -1
    for lineno, u, v in rows:
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValidationError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        pairs.append(key)
        top = max(top, key[1])
    if declared is None:
        n = top + 1
    else:
        n = declared
        if top >= n:
            raise ValidationError(f"vertex {top} exceeds declared order {n}")
    pairs.sort()
    return Graph._trusted(n, pairs)


def format_graph(g: Graph) -> str:
    """Edge-list text with an ``n m`` header; inverse of :func:`parse_graph`."""
    lines = [f"{g.n} {g.m}"] if g.n else []
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "".join(line + "\n" for line in lines)


# Distances and covering -----------------------------------------------------


def bfs_distances(g: Graph, sources: Iterable[int], limit: int | None = None) -> list[float]:
    """Multi-source BFS; entries beyond ``limit`` (or unreachable) stay ``inf``."""
    dist: list[float] = [INF] * g.n
    queue = deque()
    for s in sources:
        g.check_vertex(s)
        if dist[s]:
            dist[s] = 0
            queue.append(s)
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u]
        if limit is not None and du >= limit:
            continue
        for w in adj[u]:
            if dist[w] == INF:
                dist[w] = du + 1
                queue.append(w)
    return dist


def vertex_distance(g: Graph, u: int, v: int) -> float:
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return 0
    return bfs_distances(g, [u])[v]


def edge_distance(g: Graph, e1: int, e2: int) -> float:
    """Minimum vertex distance between an endpoint of ``e1`` and one of ``e2``."""
    g.check_edge(e1)
    g.check_edge(e2)
    a, b = g.edges[e2]
    dist = bfs_distances(g, g.edges[e1])
    return min(dist[a], dist[b])


def covers(g: Graph, e1: int, e2: int) -> bool:
    """True when the two edges are at distance at most one (an edge covers itself)."""
    g.check_edge(e1)
    g.check_edge(e2)
    u, v = g.edges[e1]
    close = closed_neighborhood(g, (u, v))
    a, b = g.edges[e2]
    return a in close or b in close


def closed_neighborhood(g: Graph, vertices: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for v in vertices:
        out.add(v)
        out.update(g.adj[v])
    return out


def covered_set(g: Graph, f: Iterable[int]) -> frozenset[int]:
    """Ids of all edges covered by at least one edge of ``f``."""
    ends = []
    for e in f:
        g.check_edge(e)
        ends.extend(g.edges[e])
    index = g.edge_index
    out = set()
    for x in closed_neighborhood(g, ends):
        for y in g.adj[x]:
            out.add(index[(x, y) if x < y else (y, x)])
    return frozenset(out)


# Reduction ------------------------------------------------------------------


def twin_representatives(g: Graph) -> list[int]:
    """Vertices kept by the reduction: smallest id of each equal-neighborhood class."""
    seen: set[tuple[int, ...]] = set()
    kept = []
    for v, nbrs in enumerate(g.adj):
        if nbrs not in seen:
            seen.add(nbrs)
            kept.append(v)
    return kept


def reduce(g: Graph) -> Graph:
    """Reduction: keep one vertex per class of identical neighbor sets.

    Deleting twins never creates new twins, so a single pass reaches the
    reduced graph.  Kept vertices are renumbered in increasing order.
    """
    kept = twin_representatives(g)
    if len(kept) == g.n:
        return g
    return g.induced(kept)


def is_reduced(g: Graph) -> bool:
    return len(set(g.adj)) == g.n


# Structure ------------------------------------------------------------------


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``inf`` for forests."""
    best = INF
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, du + dist[w] + 1)
    return best


class Component(NamedTuple):
    graph: Graph
    vertices: tuple[int, ...]  # vertices[i] is the host id of component vertex i


def components(g: Graph) -> list[Component]:
    """Connected components ordered by smallest vertex, each relabeled 0..k-1."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        out.append(Component(g.induced(comp), tuple(comp)))
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    adj = g.adj
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.n


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def unique_cycle(g: Graph) -> list[int] | None:
    """The cycle of a unicyclic graph, ``None`` for trees and graphs with m > n.

    The cycle starts at its smallest vertex and proceeds toward the smaller of
    that vertex's two cycle neighbors.
    """
    if not is_connected(g):
        raise ValidationError("unique_cycle needs a connected graph")
    if g.n == 0 or g.m != g.n:
        return None
    deg = g.degrees()
    alive = [True] * g.n
    leaves = [v for v in range(g.n) if deg[v] == 1]
    while leaves:
        v = leaves.pop()
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    on_cycle = [v for v in range(g.n) if alive[v]]
    start = on_cycle[0]
    nxt = min(w for w in g.adj[start] if alive[w])
    cycle = [start]
    prev, cur = start, nxt
    while cur != start:
        cycle.append(cur)
        step = next(w for w in g.adj[cur] if alive[w] and w != prev)
        prev, cur = cur, step
    return cycle


@dataclass(frozen=True)
class RootedTree:
    """A rooted tree in host vertex ids; ``children`` lists each vertex's children."""

    root: int
    children: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    def kids(self, v: int) -> tuple[int, ...]:
        return self.children.get(v, ())

    def vertices(self) -> list[int]:
        out = [self.root]
        i = 0
        while i < len(out):
            out.extend(self.kids(out[i]))
            i += 1
        return out

    def __len__(self) -> int:
        return len(self.vertices())

    def depth(self) -> int:
        best = 0
        stack = [(self.root, 0)]
        while stack:
            v, d = stack.pop()
            best = max(best, d)
            stack.extend((c, d + 1) for c in self.kids(v))
        return best

    @classmethod
    def from_graph(cls, g: Graph, root: int, blocked: Iterable[tuple[int, int]] = ()) -> RootedTree:
        """Root the component of ``root`` in ``g`` minus the ``blocked`` edges."""
        skip = {(u, v) if u < v else (v, u) for u, v in blocked}
        children: dict[int, tuple[int, ...]] = {}
        seen = {root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            kids = []
            for w in g.adj[u]:
                if w in seen or ((u, w) if u < w else (w, u)) in skip:
                    continue
                seen.add(w)
                kids.append(w)
                queue.append(w)
            if kids:
                children[u] = tuple(kids)
        return cls(root, children)


def attached_trees(g: Graph, cycle: Sequence[int]) -> dict[int, RootedTree]:
    """Map each cycle vertex to its tree in ``g`` minus the cycle edges."""
    if list(cycle) != unique_cycle(g):
        raise ValidationError("cycle does not match the unique cycle of the graph")
    ring = [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]
    return {v: RootedTree.from_graph(g, v, ring) for v in cycle}
