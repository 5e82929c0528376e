"""Recognition of k-well-indumatched graphs for fixed k.

A nonempty graph is k-well-indumatched (k >= 2) iff deleting the edges covered
by any single edge leaves a (k-1)-well-indumatched graph; the recursion bottoms
out at k = 1, where the condition is being nonempty and 2K2-free.

Subgraphs are edge subsets of the input, kept as bitmasks.  Covering must be
recomputed inside each subgraph since deleting edges lengthens distances.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .oracle import incidence_masks


@dataclass(frozen=True)
class KDecision:
    k: int
    verdict: bool
    trace: tuple[int, ...] | None = field(default=None)  # removed edge ids, only when False

    def to_dict(self, g: Graph) -> dict:
        out: dict = {"k": self.k, "verdict": self.verdict}
        if self.trace is not None:
            out["trace"] = [list(g.edges[e]) for e in self.trace]
        return out


class _EdgeSubsets:
    def __init__(self, g: Graph) -> None:
        self.g = g
        self.inc = incidence_masks(g)
        self.full = (1 << g.m) - 1

    def closed_nbhd(self, alive: int, v: int) -> list[int]:
        out = [v]
        edges = self.g.edges
        mask = self.inc[v] & alive
        while mask:
            low = mask & -mask
            a, b = edges[low.bit_length() - 1]
            out.append(b if a == v else a)
            mask ^= low
        return out

    def cover(self, alive: int, e: int) -> int:
        """Edges of the subgraph ``alive`` covered by its edge ``e``."""
        u, v = self.g.edges[e]
        mask = 0
        inc = self.inc
        for x in self.closed_nbhd(alive, u):
            mask |= inc[x]
        for x in self.closed_nbhd(alive, v):
            mask |= inc[x]
        return mask & alive

    def is_2k2_free(self, alive: int) -> bool:
        mask = alive
        while mask:
            low = mask & -mask
            if alive & ~self.cover(alive, low.bit_length() - 1):
                return False
            mask ^= low
        return True


def is_2k2_free(g: Graph) -> bool:
    """True when no two edges are at distance two or more."""
    return _EdgeSubsets(g).is_2k2_free((1 << g.m) - 1)


def is_k_wim(g: Graph, k: int, memo: bool = True) -> KDecision:
    """Decide whether every maximal induced matching of ``g`` has size ``k``.

    Runs in ``O(m^(k-1))`` subgraph checks.  A negative decision carries the
    first failing sequence of removed edges (at most ``k - 1`` of them).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    tables = _EdgeSubsets(g)
    cache: dict[tuple[int, int], tuple[int, ...] | None] = {}

    def refute(alive: int, j: int) -> tuple[int, ...] | None:
        if j == 0:
            return None if alive == 0 else ()
        if alive == 0:
            return ()
        if j == 1:
            return None if tables.is_2k2_free(alive) else ()
        key = (alive, j)
        if memo and key in cache:
            return cache[key]
        result = None
        mask = alive
        while mask:
            low = mask & -mask
            e = low.bit_length() - 1
            sub = refute(alive & ~tables.cover(alive, e), j - 1)
            if sub is not None:
                result = (e,) + sub
                break
            mask ^= low
        if memo:
            cache[key] = result
        return result

    trace = refute(tables.full, k)
    return KDecision(k, trace is None, trace)


def classify_k(g: Graph, k_max: int) -> int | None:
    """The unique ``k <= k_max`` for which ``g`` is k-well-indumatched, else ``None``."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    for k in range(k_max + 1):
        if is_k_wim(g, k).verdict:
            return k
    return None
