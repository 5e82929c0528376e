"""Minimal well-indumatched graphs of girth at least 9, and bounded searches.

The minimal ones are C11 and the reduced unicyclic graphs of even girth
``g >= 10`` whose attached trees alternate between a bare root (type I) and a
root carrying a path of length two (type II).  Recognizing them takes O(m);
this says nothing about general well-indumatched graphs of large girth.
"""

from __future__ import annotations

import enum
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .graph import (
    Graph,
    RootedTree,
    ValidationError,
    attached_trees,
    girth,
    is_connected,
    is_reduced,
    unique_cycle,
)
from .oracle import DEFAULT_BUDGET, BudgetExceeded, oracle_is_wim

log = logging.getLogger(__name__)


class TreeType(enum.Enum):
    I = "I"  # noqa: E741
    II = "II"
    OTHER = "Other"


def classify_attached_tree(t: RootedTree) -> TreeType:
    kids = t.kids(t.root)
    if not kids:
        return TreeType.I
    if len(kids) == 1:
        (a,) = kids
        grand = t.kids(a)
        if len(grand) == 1 and not t.kids(grand[0]):
            return TreeType.II
    return TreeType.OTHER


@dataclass(frozen=True)
class MinimalGirthReport:
    accepted: bool
    girth: float
    cycle: tuple[int, ...] | None
    type_sequence: tuple[TreeType, ...] = ()
    reason: str | None = None

    def to_dict(self) -> dict:
        out: dict = {
            "accepted": self.accepted,
            "girth": self.girth if self.girth != float("inf") else None,
            "cycle": list(self.cycle) if self.cycle is not None else None,
            "type_sequence": ",".join(t.value for t in self.type_sequence),
            "scope": "minimal well-indumatched graphs of girth >= 9 only",
        }
        if self.reason:
            out["reason"] = self.reason
        return out


def _is_c11(g: Graph) -> bool:
    return g.n == 11 and g.m == 11 and all(len(a) == 2 for a in g.adj) and is_connected(g)


def is_minimal_wim_girth9(g: Graph) -> MinimalGirthReport:
    """Decide membership among minimal well-indumatched graphs of girth >= 9."""
    if not is_connected(g):
        raise ValidationError("is_minimal_wim_girth9 needs a connected graph")
    cycle = unique_cycle(g)
    if cycle is None:
        return MinimalGirthReport(False, girth(g), None, reason="not-unicyclic")
    length = len(cycle)
    trees = attached_trees(g, cycle)
    types = tuple(classify_attached_tree(trees[v]) for v in cycle)
    if _is_c11(g):
        return MinimalGirthReport(True, 11, tuple(cycle), types)

    def no(reason: str) -> MinimalGirthReport:
        return MinimalGirthReport(False, length, tuple(cycle), types, reason)

    if not is_reduced(g):
        return no("not-reduced")
    if length < 10:
        return no("girth-below-10")
    if TreeType.OTHER in types:
        return no("attached-tree-not-type-I-or-II")
    if any(types[i] == types[i - 1] for i in range(length)):
        return no("types-do-not-alternate")
    assert length % 2 == 0
    return MinimalGirthReport(True, length, tuple(cycle), types)


def wim_size_of_minimal(g: Graph) -> int:
    """Common maximal induced matching size of an accepted minimal graph."""
    report = is_minimal_wim_girth9(g)
    if not report.accepted:
        raise ValidationError("graph is not a minimal well-indumatched graph of girth >= 9")
    if _is_c11(g):
        return 3
    return int(report.girth) // 2


# Bounded searches over unicyclic graphs --------------------------------------


def _partitions(n: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def shallow_rooted_trees(extra: int) -> list[tuple[int, ...]]:
    """Rooted trees of depth at most 2 with ``extra`` non-root vertices.

    A tree is the sorted tuple of its branch sizes; a branch of size ``s`` is
    a child of the root carrying ``s - 1`` leaves.
    """
    return list(_partitions(extra))


def _profiles(length: int, extra: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All attachment profiles with at most ``extra`` added vertices in total."""
    options = [shallow_rooted_trees(j) for j in range(extra + 1)]

    def rec(pos: int, left: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if pos == length:
            yield ()
            return
        for j in range(left + 1):
            for tree in options[j]:
                for rest in rec(pos + 1, left - j):
                    yield (tree,) + rest

    yield from rec(0, extra)


def canonical_profile(profile: Sequence[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Smallest image of the profile under the cycle's rotations and reflections."""
    p = tuple(profile)
    n = len(p)
    best = p
    for seq in (p, p[::-1]):
        for s in range(n):
            rot = seq[s:] + seq[:s]
            if rot < best:
                best = rot
    return best


def profile_graph(profile: Sequence[tuple[int, ...]]) -> Graph:
    """Cycle ``0..L-1`` with the depth-2 trees of ``profile`` attached in order."""
    length = len(profile)
    edges = [(i, (i + 1) % length) for i in range(length)]
    n = length
    for root, tree in enumerate(profile):
        for branch in tree:
            child = n
            n += 1
            edges.append((root, child))
            for _ in range(branch - 1):
                edges.append((child, n))
                n += 1
    return Graph(n, edges)


@dataclass
class SearchResult:
    cycle_length: int
    max_n: int
    examined: int = 0
    found: list[Graph] = field(default_factory=list)
    unresolved: list[Graph] = field(default_factory=list)  # budget ran out

    @property
    def complete(self) -> bool:
        return not self.unresolved

    def to_dict(self) -> dict:
        return {
            "cycle_length": self.cycle_length,
            "max_n": self.max_n,
            "scope": "unicyclic graphs with attached trees of depth <= 2",
            "examined": self.examined,
            "complete": self.complete,
            "found": [{"n": g.n, "edges": [list(e) for e in g.edges]} for g in self.found],
            "unresolved": len(self.unresolved),
        }


def _check_batch(batch: list[tuple[tuple[int, ...], ...]], budget: int) -> tuple[list, list]:
    found, unresolved = [], []
    for profile in batch:
        g = profile_graph(profile)
        try:
            if oracle_is_wim(g, budget=budget, early_exit=True).well_indumatched:
                found.append(profile)
        except BudgetExceeded:
            unresolved.append(profile)
    return found, unresolved


def search_unicyclic(cycle_length: int, max_n: int, budget: int = DEFAULT_BUDGET,
                     jobs: int = 1, chunk: int = 256) -> SearchResult:
    """Run the oracle on every unicyclic graph with the given cycle length,
    attached trees of depth at most 2 and at most ``max_n`` vertices, up to the
    symmetries of the cycle.  ``budget`` bounds each oracle call.
    """
    if cycle_length < 3 or max_n < cycle_length:
        raise ValueError("need cycle_length >= 3 and max_n >= cycle_length")
    seen = set()
    for profile in _profiles(cycle_length, max_n - cycle_length):
        seen.add(canonical_profile(profile))
    todo = sorted(seen)
    batches = [todo[i:i + chunk] for i in range(0, len(todo), chunk)]
    result = SearchResult(cycle_length, max_n, examined=len(todo))
    if jobs > 1 and len(batches) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_check_batch, batches, [budget] * len(batches)))
    else:
        outcomes = [_check_batch(b, budget) for b in batches]
    found = sorted(p for f, _ in outcomes for p in f)
    unresolved = sorted(p for _, u in outcomes for p in u)
    result.found = [profile_graph(p) for p in found]
    result.unresolved = [profile_graph(p) for p in unresolved]
    return result


def search_girth11(max_n: int, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> SearchResult:
    """Probe the girth-11 conjecture on unicyclic graphs with shallow attached trees.

    The expected outcome is C11 alone.  Anything else would refute the
    conjecture and is logged at error level.
    """
    if max_n < 11:
        raise ValueError("max_n must be at least 11")
    result = search_unicyclic(11, max_n, budget, jobs)
    for g in result.found:
        if g.n != 11:
            log.error("girth-11 conjecture counterexample: n=%d edges=%s", g.n, list(g.edges))
    return result
