"""Linear-time recognition of well-indumatched trees via good pendant edges.

A good pendant edge is ``xy`` with ``d(x) = 1`` and ``d(y) = 2``.  If ``z`` is
the other neighbor of ``y``, the edges covered by ``xy`` are ``xy`` itself and
every edge at ``z``.  A reduced tree with at least five vertices is
well-indumatched exactly when every edge is covered by one good pendant edge.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Graph, ValidationError, is_tree
from .oracle import (
    Certificate,
    ForbiddenPath,
    oracle_is_wim,
    witness_from_forbidden_path,
)

WITNESS_ORACLE_LIMIT = 24
NUMPY_THRESHOLD = 2048


class NotATreeError(ValidationError):
    pass


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise NotATreeError(f"expected a tree, got n={t.n}, m={t.m}")


@dataclass(frozen=True)
class GoodPendantSet:
    edges: frozenset[int]
    cover_count: tuple[int, ...]  # indexed by edge id


def _pendant_counts(t: Graph) -> tuple[list[bool], list[int], list[int]]:
    """Good-edge flags and per-edge cover counts, aligned with ``t.edges``.

    ``hits[z]`` counts good pendant edges whose far vertex is ``z``; an edge
    ``uv`` is then covered ``[uv good] + hits[u] + hits[v]`` times.
    """
    adj = t.adj
    deg = [len(a) for a in adj]
    hits = [0] * t.n
    for x in range(t.n):
        if deg[x] == 1:
            y = adj[x][0]
            if deg[y] == 2:
                ny = adj[y]
                hits[ny[1] if ny[0] == x else ny[0]] += 1
    good = [(deg[u] == 1 and deg[v] == 2) or (deg[v] == 1 and deg[u] == 2) for u, v in t.edges]
    counts = [hits[u] + hits[v] + g for (u, v), g in zip(t.edges, good)]
    return good, counts, hits


def good_pendant_edges(t: Graph) -> GoodPendantSet:
    _require_tree(t)
    good, counts, _ = _pendant_counts(t)
    return GoodPendantSet(frozenset(i for i, g in enumerate(good) if g), tuple(counts))


def _tree_twins(t: Graph) -> list[int] | None:
    """Kept vertices of the reduction of tree ``t``, or ``None`` if already reduced.

    In a tree on three or more vertices, twins are exactly leaves sharing a
    neighbor.
    """
    if t.n < 3:
        return None
    adj = t.adj
    taken = bytearray(t.n)
    drop = None
    for x in range(t.n):
        if len(adj[x]) == 1:
            p = adj[x][0]
            if taken[p]:
                if drop is None:
                    drop = bytearray(t.n)
                drop[x] = 1
            else:
                taken[p] = 1
    if drop is None:
        return None
    return [v for v in range(t.n) if not drop[v]]


# Vectorized variants for large trees; same results as the list versions.

def _edge_array(t: Graph) -> np.ndarray:
    flat = np.fromiter(itertools.chain.from_iterable(t.edges), np.int64, 2 * t.m)
    return flat.reshape(-1, 2)


def _is_tree_np(t: Graph, ends: np.ndarray) -> bool:
    if t.n < 1 or t.m != t.n - 1:
        return False
    if t.n == 1:
        return True
    ones = np.ones(t.m, dtype=np.int8)
    adjacency = coo_matrix((ones, (ends[:, 0], ends[:, 1])), shape=(t.n, t.n))
    return connected_components(adjacency, directed=False)[0] == 1


def _tree_twins_np(n: int, ends: np.ndarray, deg: np.ndarray) -> list[int] | None:
    u, v = ends[:, 0], ends[:, 1]
    u_leaf = deg[u] == 1
    v_leaf = deg[v] == 1
    leaves = np.concatenate([u[u_leaf], v[v_leaf]])
    parents = np.concatenate([v[u_leaf], u[v_leaf]])
    if not len(parents) or np.bincount(parents).max() <= 1:
        return None
    first = np.full(n, n, dtype=np.int64)
    np.minimum.at(first, parents, leaves)
    drop = np.zeros(n, dtype=bool)
    drop[leaves[first[parents] != leaves]] = True
    return np.flatnonzero(~drop).tolist()


def _pendant_counts_np(n: int, ends: np.ndarray, deg: np.ndarray):
    u, v = ends[:, 0], ends[:, 1]
    du, dv = deg[u], deg[v]
    good = ((du == 1) & (dv == 2)) | ((dv == 1) & (du == 2))
    # the far vertex z of a good edge xy is (sum of y's neighbors) - x
    nbr_sum = (np.bincount(u, weights=v, minlength=n)
               + np.bincount(v, weights=u, minlength=n)).astype(np.int64)
    gu, gv = u[good], v[good]
    x = np.where(deg[gu] == 1, gu, gv)
    y = np.where(deg[gu] == 1, gv, gu)
    hits = np.bincount(nbr_sum[y] - x, minlength=n)
    counts = hits[u] + hits[v] + good
    return good, counts, hits


def _scan(t: Graph) -> tuple[list[int] | None, Graph, int, Sequence[int], Sequence[int]]:
    """Check ``t`` is a tree, reduce it, and count good-pendant covers per edge."""
    if t.n < NUMPY_THRESHOLD:
        _require_tree(t)
        kept = _tree_twins(t)
        r = t if kept is None else t.induced(kept)
        good, counts, hits = _pendant_counts(r)
        return kept, r, sum(good), counts, hits
    ends = _edge_array(t)
    if not _is_tree_np(t, ends):
        raise NotATreeError(f"expected a tree, got n={t.n}, m={t.m}")
    deg = np.bincount(ends.ravel(), minlength=t.n)
    kept = _tree_twins_np(t.n, ends, deg)
    r = t
    if kept is not None:
        r = t.induced(kept)
        ends = _edge_array(r)
        deg = np.bincount(ends.ravel(), minlength=r.n)
    good, counts, hits = _pendant_counts_np(r.n, ends, deg)
    return kept, r, int(good.sum()), counts, hits


def _lift(t: Graph, kept: list[int] | None, reduced: Graph, m: tuple[int, ...]) -> tuple[int, ...]:
    if kept is None:
        return m
    return tuple(sorted(t.edge_id(kept[a], kept[b]) for a, b in (reduced.edges[e] for e in m)))


def is_wim_tree(t: Graph, witness: bool = True,
                witness_limit: int = WITNESS_ORACLE_LIMIT) -> Certificate:
    """Decide whether tree ``t`` is well-indumatched in linear time.

    With ``witness`` set, rejections carry two maximal induced matchings of
    different sizes when one is cheap to build: from the forbidden path behind
    a doubly covered edge, or from the oracle when the reduced tree has at
    most ``witness_limit`` vertices.  Otherwise the certificate only names the
    offending edge in ``reason``.
    """
    kept, r, n_good, counts, hits = _scan(t)
    if r.n <= 4:
        # reduced trees this small are P1..P4
        return Certificate.accept(0 if r.n == 1 else 1, "tree-table")
    if isinstance(counts, np.ndarray):
        over = np.flatnonzero(counts > 1)
        under = np.flatnonzero(counts < 1)
        bad = int(over[0]) if len(over) else int(under[0]) if len(under) else None
    else:
        over = [i for i, c in enumerate(counts) if c > 1]
        under = [i for i, c in enumerate(counts) if c < 1]
        bad = over[0] if over else under[0] if under else None
    if bad is None:
        return Certificate.accept(n_good, "tree")

    u, v = r.edges[bad]
    times = int(counts[bad])
    label = (kept[u], kept[v]) if kept else (u, v)
    reason = f"edge {label} covered {times} times by good pendant edges"
    if not witness:
        return Certificate.reject(None, None, "tree", reason)
    if times >= 2:
        path = _path_through(r, u, v, hits)
        small, large = witness_from_forbidden_path(r, path)
        return Certificate.reject(_lift(t, kept, r, small), _lift(t, kept, r, large), "tree", reason)
    if r.n <= witness_limit:
        cert = oracle_is_wim(r)
        assert not cert.well_indumatched
        return Certificate.reject(_lift(t, kept, r, cert.small), _lift(t, kept, r, cert.large),
                                  "tree", reason)
    return Certificate.reject(None, None, "tree", reason)


def _pendant_arm(r: Graph, z: int, exclude: int = -1) -> tuple[int, int] | None:
    """A ``(y, x)`` with ``y`` a degree-2 neighbor of ``z`` and ``x`` a leaf."""
    for y in r.adj[z]:
        if y == exclude or len(r.adj[y]) != 2:
            continue
        x = r.adj[y][0] if r.adj[y][1] == z else r.adj[y][1]
        if len(r.adj[x]) == 1:
            return y, x
    return None


def _path_through(r: Graph, u: int, v: int, hits: list[int]) -> ForbiddenPath:
    # In a reduced tree of order >= 5 a doubly covered edge uv is never good
    # itself, so both coverers hang off u or v.
    for z in (u, v):
        if hits[z] >= 2:
            y1, x1 = _pendant_arm(r, z)
            y2, x2 = _pendant_arm(r, z, exclude=y1)
            return ForbiddenPath("i", (x1, y1, z, y2, x2))
    y1, x1 = _pendant_arm(r, u, exclude=v)
    y2, x2 = _pendant_arm(r, v, exclude=u)
    return ForbiddenPath("ii", (x1, y1, u, v, y2, x2))


def _farthest(t: Graph, s: int) -> tuple[int, list[int]]:
    parent = [-1] * t.n
    parent[s] = s
    order = [s]
    for u in order:
        for w in t.adj[u]:
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
    return order[-1], parent


def longest_path(t: Graph) -> list[int]:
    a, _ = _farthest(t, 0)
    b, parent = _farthest(t, a)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path


def longest_path_rule(t: Graph) -> bool | None:
    """Verdict for caterpillar-like trees, ``None`` when the rule does not apply.

    Applies when the chosen longest path ``v1..vk`` has all degrees at most 3
    and every degree-3 path vertex carries a pendant edge off the path; then
    the tree is well-indumatched iff ``k <= 4`` or ``k == 7`` and ``d(v4) == 2``.
    """
    _require_tree(t)
    path = longest_path(t)
    on_path = set(path)
    for v in path:
        d = t.degree(v)
        if d > 3:
            return None
        if d == 3:
            off = [w for w in t.adj[v] if w not in on_path]
            if not off or t.degree(off[0]) != 1:
                return None
    k = len(path)
    return k <= 4 or (k == 7 and t.degree(path[3]) == 2)


# Tree generation ------------------------------------------------------------


def prufer_to_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Decode a Prüfer sequence of length ``n - 2`` into sorted tree edges."""
    if n == 1:
        return []
    if len(seq) != n - 2:
        raise ValueError("Prüfer sequence must have length n - 2")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[x] -= 1
        if x < ptr and degree[x] == 1:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    u, v = leaf, n - 1
    edges.append((u, v) if u < v else (v, u))
    edges.sort()
    return edges


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniformly random labeled tree on ``n`` vertices."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if n == 1:
        return Graph(1)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph._trusted(n, prufer_to_edges(seq, n))


def random_reduced_tree(n: int, rng: random.Random) -> Graph:
    """Random reduced tree on exactly ``n`` vertices.

    Draws a uniform labeled tree and then threads surplus leaves of each
    vertex into a path hanging from it, which leaves every vertex with at most
    one pendant neighbor.  There is no reduced tree on 3 vertices, since the
    two leaves of P3 are twins, so ``n == 3`` raises ``ValueError``.
    """
    if n == 3:
        raise ValueError("no reduced tree has exactly 3 vertices")
    t = random_tree(n, rng)
    if n < 3:
        return t
    adj = t.adj
    edges = set(t.edges)
    for p in range(n):
        leaves = [x for x in adj[p] if len(adj[x]) == 1]
        if len(leaves) < 2:
            continue
        for a, b in zip(leaves, leaves[1:]):
            edges.discard((p, b) if p < b else (b, p))
            edges.add((a, b) if a < b else (b, a))
    return Graph._trusted(n, sorted(edges))


def tree_canonical_form(t: Graph) -> str:
    """Isomorphism invariant string of a tree (AHU encoding at the center)."""
    _require_tree(t)
    if t.n == 1:
        return "()"
    path = longest_path(t)
    k = len(path)
    centers = [path[(k - 1) // 2]] if k % 2 else [path[k // 2 - 1], path[k // 2]]

    def encode(root: int, banned: int) -> str:
        order = [root]
        parent = {root: banned}
        for u in order:
            for w in t.adj[u]:
                if w != parent[u]:
                    parent[w] = u
                    order.append(w)
        code: dict[int, str] = {}
        for u in reversed(order):
            code[u] = "(" + "".join(sorted(code[w] for w in t.adj[u] if w != parent[u])) + ")"
        return code[root]

    if len(centers) == 1:
        return encode(centers[0], -1)
    a, b = centers
    return "".join(sorted([encode(a, b), encode(b, a)]))
