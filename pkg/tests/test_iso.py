"""Canonical forms, isomorphism, automorphism groups."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srcfg.algebra import cyclic
from srcfg.constructions import (development, moore_configuration,
                                 projective_plane, triangle_removal)
from srcfg.graphs import petersen
from srcfg.incidence import Configuration, dual, point_graph
from srcfg.iso import (are_isomorphic, aut_order, automorphism_generators,
                       canonical_form, is_self_dual, perm_group_order)
from test_incidence import gq22


def brute_aut_count(c: Configuration) -> int:
    """Count point permutations preserving the line set, by backtracking
    over images with collinearity-preservation pruning."""
    g = point_graph(c)
    lineset = set(c.lines)
    n = c.v
    count = 0

    def extend(img: list[int], used: int):
        nonlocal count
        i = len(img)
        if i == n:
            mapped = {tuple(sorted(img[p] for p in ln)) for ln in c.lines}
            if mapped == lineset:
                count += 1
            return
        for t in range(n):
            if used >> t & 1:
                continue
            if all(g.adjacent(img[j], t) == g.adjacent(j, i) for j in range(i)):
                img.append(t)
                extend(img, used | 1 << t)
                img.pop()

    extend([], 0)
    return count


def relabeled(c: Configuration, rnd: random.Random) -> Configuration:
    perm = list(range(c.v))
    rnd.shuffle(perm)
    lines = [tuple(sorted(perm[p] for p in ln)) for ln in c.lines]
    rnd.shuffle(lines)
    return Configuration(c.v, c.k, tuple(lines))


class TestPermGroupOrder:
    def test_symmetric4(self):
        assert perm_group_order([(1, 0, 2, 3), (1, 2, 3, 0)], 4) == 24

    def test_cyclic8(self):
        gen = tuple((i + 1) % 8 for i in range(8))
        assert perm_group_order([gen], 8) == 8

    def test_klein(self):
        assert perm_group_order([(1, 0, 3, 2), (2, 3, 0, 1)], 4) == 4

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.permutations(list(range(6))), min_size=1, max_size=3))
    def test_matches_closure(self, gens):
        gens = [tuple(g) for g in gens]
        identity = tuple(range(6))
        group = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = tuple(g[p[i]] for i in range(6))
                    if q not in group:
                        group.add(q)
                        nxt.append(q)
            frontier = nxt
        assert perm_group_order(gens, 6) == len(group)


class TestCanonicalForm:
    def test_relabel_invariance(self):
        rnd = random.Random(7)
        c = development(cyclic(13), (7, 8, 11))
        forms = {canonical_form(relabeled(c, rnd)).data for _ in range(100)}
        assert len(forms) == 1
        assert forms == {canonical_form(c).data}

    def test_isomorphic_pair(self):
        c = gq22()
        rnd = random.Random(3)
        assert are_isomorphic(c, relabeled(c, rnd))

    def test_distinguishes_sizes(self):
        assert not are_isomorphic(gq22(), development(cyclic(13), (7, 8, 11)))

    def test_hexdigest_stable(self):
        c = moore_configuration(petersen())
        assert canonical_form(c).hexdigest() == canonical_form(c).hexdigest()


class TestAut:
    def test_known_orders(self):
        assert aut_order(development(cyclic(13), (7, 8, 11))) == 39
        assert aut_order(gq22()) == 720
        assert aut_order(moore_configuration(petersen())) == 120

    @pytest.mark.parametrize("make", [
        lambda: development(cyclic(13), (7, 8, 11)),
        lambda: gq22(),
        lambda: moore_configuration(petersen()),
        lambda: triangle_removal(projective_plane(5)),
    ])
    def test_agrees_with_brute_force(self, make):
        c = make()
        assert aut_order(c) == brute_aut_count(c)

    def test_generators_preserve_lines(self):
        c = gq22()
        v = c.v
        lineset = set(c.lines)
        for gen in automorphism_generators(c):
            assert sorted(gen[:v]) == list(range(v))
            mapped = {tuple(sorted(gen[p] for p in ln)) for ln in c.lines}
            assert mapped == lineset
            # line part permutes line indices consistently
            assert sorted(x - v for x in gen[v:]) == list(range(v))

    def test_dual_same_order(self):
        for c in (development(cyclic(13), (7, 8, 11)), gq22(),
                  triangle_removal(projective_plane(5))):
            assert aut_order(dual(c)) == aut_order(c)

    def test_relabel_same_order(self):
        rnd = random.Random(11)
        c = triangle_removal(projective_plane(5))
        assert aut_order(relabeled(c, rnd)) == aut_order(c)


class TestSelfDual:
    def test_self_dual_examples(self):
        assert is_self_dual(development(cyclic(13), (7, 8, 11)))
        assert is_self_dual(moore_configuration(petersen()))
        assert is_self_dual(gq22())

    def test_relabeling_keeps_self_duality(self):
        rnd = random.Random(5)
        c = development(cyclic(13), (7, 8, 11))
        assert is_self_dual(relabeled(c, rnd))
