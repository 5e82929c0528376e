from __future__ import annotations

import random

import networkx as nx
import pytest

from indumatch.families import gen_cycle, gen_minimal_girth, gen_path
from indumatch.girth import (
    TreeType,
    _profiles,
    canonical_profile,
    classify_attached_tree,
    is_minimal_wim_girth9,
    profile_graph,
    search_girth11,
    search_unicyclic,
    shallow_rooted_trees,
    wim_size_of_minimal,
)
from indumatch.graph import Graph, RootedTree, ValidationError, reduce
from indumatch.oracle import oracle_is_wim

from conftest import to_nx


def relabeled(g: Graph, seed: int) -> Graph:
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def alternating(girth: int, offset: int) -> Graph:
    """Even cycle with a 2-path at every vertex of parity ``offset``."""
    profile = [((2,) if i % 2 == offset else ()) for i in range(girth)]
    return profile_graph(profile)


class TestClassify:
    def test_single_vertex(self):
        assert classify_attached_tree(RootedTree(0, {})) is TreeType.I

    def test_two_path(self):
        assert classify_attached_tree(RootedTree(0, {0: (1,), 1: (2,)})) is TreeType.II

    def test_pendant(self):
        assert classify_attached_tree(RootedTree(0, {0: (1,)})) is TreeType.OTHER

    def test_others(self):
        assert classify_attached_tree(RootedTree(0, {0: (1, 2)})) is TreeType.OTHER
        assert classify_attached_tree(RootedTree(0, {0: (1,), 1: (2, 3)})) is TreeType.OTHER
        assert classify_attached_tree(RootedTree(0, {0: (1,), 1: (2,), 2: (3,)})) is TreeType.OTHER


class TestRecognizer:
    def test_c11(self):
        report = is_minimal_wim_girth9(gen_cycle(11))
        assert report.accepted and report.girth == 11

    def test_minimal_10(self):
        report = is_minimal_wim_girth9(gen_minimal_girth(10))
        assert report.accepted
        assert report.type_sequence == (TreeType.II, TreeType.I) * 5
        assert report.to_dict()["type_sequence"] == "II,I,II,I,II,I,II,I,II,I"

    def test_bare_cycles(self):
        for n in (9, 10, 12):
            assert not is_minimal_wim_girth9(gen_cycle(n)).accepted

    def test_reasons(self):
        assert is_minimal_wim_girth9(gen_path(5)).reason == "not-unicyclic"
        assert is_minimal_wim_girth9(gen_cycle(12)).reason == "types-do-not-alternate"
        assert is_minimal_wim_girth9(alternating(8, 0)).reason == "girth-below-10"
        pendant = profile_graph([(1,)] + [()] * 9)
        assert is_minimal_wim_girth9(pendant).reason == "attached-tree-not-type-I-or-II"
        twins = profile_graph([(1, 1)] + [(), (2,)] * 4 + [()])
        assert reduce(twins) != twins
        assert is_minimal_wim_girth9(twins).reason == "not-reduced"

    def test_disconnected(self):
        with pytest.raises(ValidationError):
            is_minimal_wim_girth9(Graph(4, [(0, 1), (2, 3)]))

    def test_relabeled_input(self):
        for seed in range(5):
            assert is_minimal_wim_girth9(relabeled(gen_minimal_girth(12), seed)).accepted
            assert is_minimal_wim_girth9(relabeled(gen_cycle(11), seed)).accepted

    def test_size(self):
        assert wim_size_of_minimal(gen_minimal_girth(10)) == 5
        assert wim_size_of_minimal(gen_minimal_girth(12)) == 6
        assert wim_size_of_minimal(gen_cycle(11)) == 3

    def test_size_precondition(self):
        with pytest.raises(ValidationError):
            wim_size_of_minimal(gen_cycle(10))

    def test_soundness(self):
        corpus = [gen_cycle(11), gen_minimal_girth(10), gen_minimal_girth(12),
                  alternating(10, 1), alternating(12, 1), relabeled(gen_minimal_girth(10), 3)]
        for g in corpus:
            assert g.n <= 26
            report = is_minimal_wim_girth9(g)
            assert report.accepted
            assert oracle_is_wim(g).k == wim_size_of_minimal(g)

    def test_accepted_invariants(self):
        for g in (gen_minimal_girth(10), gen_minimal_girth(12), gen_minimal_girth(14)):
            report = is_minimal_wim_girth9(g)
            assert report.girth % 2 == 0
            twos = sum(t is TreeType.II for t in report.type_sequence)
            assert twos == report.girth // 2 == wim_size_of_minimal(g)

    def test_rejections_near_the_family(self):
        # a few perturbations of the minimal graph; each must be rejected
        base = [((2,) if i % 2 == 0 else ()) for i in range(10)]
        variants = [
            [(2,), (2,)] + base[2:],
            [(3,)] + base[1:],
            [(2, 1)] + base[1:],
            [(1, 1)] + base[1:],
        ]
        for profile in variants:
            assert not is_minimal_wim_girth9(profile_graph(profile)).accepted

    def test_minimality_g10(self):
        g = gen_minimal_girth(10)
        cycle = set(is_minimal_wim_girth9(g).cycle)
        for u, v in g.edges:
            if u in cycle and v in cycle:
                continue
            h = Graph(g.n, [e for e in g.edges if e != (u, v)])
            assert not oracle_is_wim(h).well_indumatched


class TestSearch:
    def test_shallow_tree_counts(self):
        # depth <= 2 rooted trees with j non-root vertices are integer partitions of j
        assert [len(shallow_rooted_trees(j)) for j in range(7)] == [1, 1, 2, 3, 5, 7, 11]

    def test_canonical_profile(self):
        p = ((), (2,), (), (1,), ())
        images = {canonical_profile(p[s:] + p[:s]) for s in range(5)}
        images |= {canonical_profile((p[::-1])[s:] + (p[::-1])[:s]) for s in range(5)}
        assert len(images) == 1

    def test_dedup_matches_isomorphism_classes(self):
        result = search_unicyclic(5, 8)
        raw = {canonical_profile(p) for p in _profiles(5, 3)}
        graphs = [to_nx(profile_graph(p)) for p in raw]
        classes = []
        for h in graphs:
            if not any(nx.is_isomorphic(h, c) for c in classes):
                classes.append(h)
        assert result.examined == len(raw) == len(classes)

    def test_girth11_small(self):
        for max_n in (11, 13):
            result = search_girth11(max_n)
            assert result.complete
            assert result.found == [gen_cycle(11)]

    def test_girth9_small(self):
        result = search_unicyclic(9, 12)
        assert result.complete and result.found == []

    def test_budget_flag(self):
        result = search_unicyclic(9, 10, budget=1)
        assert not result.complete
        assert result.to_dict()["complete"] is False

    def test_jobs(self):
        a = search_unicyclic(7, 10)
        b = search_unicyclic(7, 10, jobs=2, chunk=8)
        assert [g.edges for g in a.found] == [g.edges for g in b.found]
        assert a.examined == b.examined

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            search_girth11(10)
        with pytest.raises(ValueError):
            search_unicyclic(2, 5)
