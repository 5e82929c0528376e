"""Induced-matching primitives and the exhaustive maximal-induced-matching oracle.

Matchings are sorted tuples of edge ids of a host :class:`~indumatch.graph.Graph`.
The enumeration works on Python-int bitmasks over edge ids: ``cover[e]`` is the
set of edges at distance at most one from ``e``.  Because covering is
symmetric, an edge can join a partial induced matching exactly when it is not
yet covered by it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .graph import Graph, ValidationError, closed_neighborhood, covered_set

DEFAULT_BUDGET = 10**7

Matching = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """The enumeration visited more search nodes than allowed."""

    def __init__(self, budget: int) -> None:
        super().__init__(f"oracle budget of {budget} search nodes exhausted")
        self.budget = budget


@dataclass(frozen=True)
class Certificate:
    """Evidence for a well-indumatched decision.

    A positive verdict carries the common size ``k``.  A negative one carries,
    when available, two maximal induced matchings with ``len(small) < len(large)``;
    recognizers that reject on structure alone leave them ``None`` and explain in
    ``reason``.
    """

    well_indumatched: bool
    k: int | None = None
    small: Matching | None = None
    large: Matching | None = None
    method: str = "oracle"
    reason: str | None = None

    @classmethod
    def accept(cls, k: int, method: str) -> Certificate:
        return cls(True, k=k, method=method)

    @classmethod
    def reject(cls, small: Matching | None, large: Matching | None, method: str,
               reason: str | None = None) -> Certificate:
        return cls(False, small=small, large=large, method=method, reason=reason)

    def to_dict(self, g: Graph) -> dict:
        out: dict = {
            "verdict": "well-indumatched" if self.well_indumatched else "not-well-indumatched",
            "method": self.method,
        }
        if self.k is not None:
            out["k"] = self.k
        if self.small is not None:
            out["witness_small"] = [list(g.edges[e]) for e in self.small]
        if self.large is not None:
            out["witness_large"] = [list(g.edges[e]) for e in self.large]
        if self.reason:
            out["reason"] = self.reason
        return out


def matching_from_pairs(g: Graph, pairs: Iterable[Iterable[int]]) -> Matching:
    return tuple(sorted(g.edge_id(*pair) for pair in pairs))


# Bitmask tables -------------------------------------------------------------


def incidence_masks(g: Graph) -> list[int]:
    """``inc[v]``: bitmask of the edges incident with ``v``."""
    inc = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        bit = 1 << i
        inc[u] |= bit
        inc[v] |= bit
    return inc


def cover_masks(g: Graph) -> list[int]:
    """``cover[e]``: bitmask of the edges covered by ``e`` (including ``e``)."""
    inc = incidence_masks(g)
    adj = g.adj
    out = []
    for u, v in g.edges:
        mask = inc[u] | inc[v]
        for w in adj[u]:
            mask |= inc[w]
        for w in adj[v]:
            mask |= inc[w]
        out.append(mask)
    return out


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# Predicates -----------------------------------------------------------------


def _check_edges(g: Graph, s: Iterable[int]) -> list[int]:
    edges = list(s)
    for e in edges:
        g.check_edge(e)
    return edges


def is_matching(g: Graph, s: Iterable[int]) -> bool:
    edges = _check_edges(g, s)
    ends = [x for e in edges for x in g.edges[e]]
    return len(ends) == len(set(ends))


def is_induced_matching(g: Graph, s: Iterable[int]) -> bool:
    """No two edges of ``s`` share an endpoint or are joined by an edge."""
    edges = sorted(set(_check_edges(g, s)))
    seen: set[int] = set()
    for e in edges:
        u, v = g.edges[e]
        close = closed_neighborhood(g, (u, v))
        if close & seen:
            return False
        seen.update((u, v))
    return True


def is_maximal_induced(g: Graph, s: Iterable[int]) -> bool:
    edges = _check_edges(g, s)
    return is_induced_matching(g, edges) and len(covered_set(g, edges)) == g.m


def extend_to_maximal(g: Graph, s: Iterable[int]) -> Matching:
    """Greedily extend an induced matching, scanning edges in id order."""
    chosen = sorted(set(_check_edges(g, s)))
    blocked = bytearray(g.n)
    for e in chosen:
        for x in closed_neighborhood(g, g.edges[e]):
            blocked[x] = 1
    for i, (u, v) in enumerate(g.edges):
        if not blocked[u] and not blocked[v]:
            chosen.append(i)
            for x in closed_neighborhood(g, (u, v)):
                blocked[x] = 1
    return tuple(sorted(chosen))


# Enumeration ----------------------------------------------------------------


def _walk(g: Graph, budget: int, visit: Callable[[list[int]], bool]) -> None:
    """Call ``visit`` once per maximal induced matching; stop when it returns False.

    Branches on the smallest uncovered edge ``e``.  Every maximal induced
    matching covers ``e``, so it contains some coverer ``f`` of ``e``; branches
    for later coverers forbid the earlier ones, which makes the enumeration
    duplicate free.
    """
    cover = cover_masks(g)
    full = (1 << g.m) - 1
    nodes = 0
    chosen: list[int] = []

    def rec(covered: int, forbidden: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(budget)
        open_ = full & ~covered
        if not open_:
            return visit(chosen)
        low = open_ & -open_
        e = low.bit_length() - 1
        cands = cover[e] & ~covered & ~forbidden
        while cands:
            bit = cands & -cands
            f = bit.bit_length() - 1
            chosen.append(f)
            keep_going = rec(covered | cover[f], forbidden)
            chosen.pop()
            if not keep_going:
                return False
            forbidden |= bit
            cands ^= bit
        return True

    rec(0, 0)


def enumerate_maximal_induced(g: Graph, budget: int = DEFAULT_BUDGET) -> Iterator[Matching]:
    """Every maximal induced matching of ``g`` once, in lexicographic order.

    Raises :class:`BudgetExceeded` before yielding anything if the search needs
    more than ``budget`` nodes.
    """
    found: list[Matching] = []
    _walk(g, budget, lambda ms: found.append(tuple(sorted(ms))) or True)
    found.sort()
    return iter(found)


def _size_range(g: Graph, budget: int) -> tuple[int, int]:
    lo, hi = g.m + 1, -1

    def visit(ms: list[int]) -> bool:
        nonlocal lo, hi
        k = len(ms)
        lo = min(lo, k)
        hi = max(hi, k)
        return True

    _walk(g, budget, visit)
    return lo, hi


def mim(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Size of a maximum induced matching."""
    return _size_range(g, budget)[1]


def mmim(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Size of a minimum maximal induced matching."""
    return _size_range(g, budget)[0]


def oracle_is_wim(g: Graph, budget: int = DEFAULT_BUDGET, early_exit: bool = False) -> Certificate:
    """Decide well-indumatchedness by exhaustive enumeration.

    On rejection the witnesses are the lexicographically first smallest and
    largest maximal induced matchings.  With ``early_exit`` the search stops at
    the first size disagreement and reports that pair instead.
    """
    best_small: Matching | None = None
    best_large: Matching | None = None

    def visit(ms: list[int]) -> bool:
        nonlocal best_small, best_large
        cur = tuple(sorted(ms))
        if best_small is None:
            best_small = best_large = cur
            return True
        k = len(cur)
        if k < len(best_small) or (k == len(best_small) and cur < best_small):
            best_small = cur
        if k > len(best_large) or (k == len(best_large) and cur < best_large):
            best_large = cur
        return not (early_exit and len(best_small) != len(best_large))

    _walk(g, budget, visit)
    assert best_small is not None and best_large is not None
    if len(best_small) == len(best_large):
        return Certificate.accept(len(best_small), "oracle")
    return Certificate.reject(best_small, best_large, "oracle-early" if early_exit else "oracle")


# Edge removal and sufficient conditions -------------------------------------


def remove_covered(g: Graph, f0: Iterable[int]) -> Graph:
    """Delete every edge covered by the induced matching ``f0``; vertices stay."""
    edges = _check_edges(g, f0)
    if not is_induced_matching(g, edges):
        raise ValidationError("remove_covered needs an induced matching")
    gone = covered_set(g, edges)
    return g.subgraph_edges(i for i in range(g.m) if i not in gone)


def unique_cover_check(g: Graph, m: Iterable[int]) -> bool:
    """Sufficient condition for well-indumatchedness with common size ``len(m)``.

    True when every edge is covered by exactly one edge of the matching ``m``
    and, for each ``e0`` in ``m``, any two edges covered by ``e0`` cover each
    other.
    """
    chosen = sorted(set(_check_edges(g, m)))
    if not is_matching(g, chosen):
        raise ValidationError("unique_cover_check needs a matching")
    cover = cover_masks(g)
    seen = 0
    for e0 in chosen:
        cls = cover[e0]
        if cls & seen:
            return False
        seen |= cls
        for e1 in _bits(cls):
            if cls & ~cover[e1]:
                return False
    return seen == (1 << g.m) - 1


@dataclass(frozen=True)
class ForbiddenPath:
    """A path whose end-degree pattern rules out well-indumatchedness.

    ``kind`` is ``"i"`` for ``v1..v5`` with ``d(v1)=d(v5)=1, d(v2)=2`` and
    ``"ii"`` for ``v1..v6`` with ``d(v1)=d(v6)=1, d(v2)=d(v5)=2``.
    """

    kind: str
    vertices: tuple[int, ...]


def find_forbidden_path(g: Graph) -> ForbiddenPath | None:
    adj = g.adj
    deg = g.degrees()
    found_ii = None
    for v1 in range(g.n):
        if deg[v1] != 1:
            continue
        v2 = adj[v1][0]
        if deg[v2] != 2:
            continue
        v3 = adj[v2][0] if adj[v2][1] == v1 else adj[v2][1]
        for v4 in adj[v3]:
            if v4 == v2:
                continue
            for v5 in adj[v4]:
                if v5 == v3:
                    continue
                if deg[v5] == 1:
                    return ForbiddenPath("i", (v1, v2, v3, v4, v5))
                if found_ii is None and deg[v5] == 2:
                    v6 = adj[v5][0] if adj[v5][1] == v4 else adj[v5][1]
                    if deg[v6] == 1:
                        found_ii = ForbiddenPath("ii", (v1, v2, v3, v4, v5, v6))
    return found_ii


def witness_from_forbidden_path(g: Graph, path: ForbiddenPath) -> tuple[Matching, Matching]:
    """Two maximal induced matchings of different sizes built around ``path``.

    A maximal matching through the middle edge ``v3v4`` is traded for the two
    end edges, which cover nothing beyond what ``v3v4`` covers.
    """
    vs = path.vertices
    middle = g.edge_id(vs[2], vs[3])
    ends = [g.edge_id(vs[0], vs[1]), g.edge_id(vs[-2], vs[-1])]
    small = extend_to_maximal(g, [middle])
    large = extend_to_maximal(g, [e for e in small if e != middle] + ends)
    return small, large
