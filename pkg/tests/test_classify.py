"""Clique-based search for all configurations on a given point graph."""

import itertools

import pytest

from srcfg.classify import clique_graph, find_configurations, reduce_isomorphs
from srcfg.constructions import projective_plane, triangle_removal
from srcfg.graphs import (Graph, latin_square_graph, paley, petersen, rook,
                          shrikhande, srg_check)
from srcfg.incidence import (Configuration, alpha_spectrum, is_valid,
                             line_graph, point_graph, src_check)
from srcfg.iso import canonical_form


def reference_configurations(g: Graph, k: int) -> set[tuple]:
    """Pruning-free baseline: backtrack over edge-disjoint clique families
    of size v, then keep those forming a configuration with point graph g."""
    cliques = clique_graph(g, k).cliques
    out = set()

    def edges_of(cl):
        return set(itertools.combinations(cl, 2))

    def rec(start, chosen, covered):
        if len(chosen) == g.n:
            c = Configuration.from_lines(g.n, k, sorted(chosen))
            if is_valid(c) and point_graph(c) == g:
                out.add(c.lines)
            return
        for i in range(start, len(cliques)):
            e = edges_of(cliques[i])
            if e & covered:
                continue
            chosen.append(cliques[i])
            rec(i + 1, chosen, covered | e)
            chosen.pop()

    rec(0, [], set())
    return out


class TestCliqueGraph:
    def test_paley13(self):
        cg = clique_graph(paley(13), 3)
        assert len(cg.cliques) == 26
        assert cg.compat.n == 26
        assert cg.compat.edge_count() == 286

    def test_shrikhande_and_rook(self):
        assert len(clique_graph(shrikhande(), 3).cliques) == 32
        assert len(clique_graph(rook(4), 3).cliques) == 32

    def test_compat_edges_share_at_most_one_vertex(self):
        cg = clique_graph(paley(13), 3)
        for i, j in cg.compat.edges():
            assert len(set(cg.cliques[i]) & set(cg.cliques[j])) <= 1


class TestFindConfigurations:
    def test_paley13(self):
        found = find_configurations(paley(13), 3)
        assert len(found) == 2
        for c in found:
            assert src_check(c).astuple() == (13, 3, 2, 3)
            assert srg_check(line_graph(c)) == srg_check(point_graph(c))

    def test_matches_reference_paley13(self):
        found = {c.lines for c in find_configurations(paley(13), 3)}
        assert found == reference_configurations(paley(13), 3)

    def test_matches_reference_rook4(self):
        assert find_configurations(rook(4), 3) == []
        assert reference_configurations(rook(4), 3) == set()

    def test_shrikhande(self):
        found = find_configurations(shrikhande(), 3)
        assert len(found) == 2
        classes = reduce_isomorphs(found)
        assert len(classes) == 1
        assert classes[0].canonical == canonical_form(
            triangle_removal(projective_plane(5)))

    def test_complement_petersen(self):
        found = find_configurations(petersen().complement(), 3)
        assert len(found) == 6
        classes = reduce_isomorphs(found)
        assert len(classes) == 2
        by_aut = {cl.aut_order: cl for cl in classes}
        assert set(by_aut) == {24, 120}
        assert by_aut[120].count == 1
        assert by_aut[24].count == 5
        # orbit counting: |Aut(graph)| / |Aut(config)| labelled copies per class
        for cl in classes:
            assert cl.count * cl.aut_order == 120

    def test_latin6_complement(self):
        order = 6
        square = [[(i + j) % order for j in range(order)] for i in range(order)]
        g = latin_square_graph(square).complement()
        found = find_configurations(g, 5)
        classes = reduce_isomorphs(found)
        assert len(classes) == 1
        assert classes[0].canonical == canonical_form(
            triangle_removal(projective_plane(7)))

    def test_latin5_carries_no_configuration(self):
        # one of the published srg(25,12,5,6) graphs; 75 four-cliques but
        # no exact cover of the edge set
        square = [[(i + j) % 5 for j in range(5)] for i in range(5)]
        g = latin_square_graph(square)
        assert len(clique_graph(g, 4).cliques) == 75
        assert find_configurations(g, 4) == []

    def test_threads_agree(self):
        single = find_configurations(petersen().complement(), 3, threads=1)
        multi = find_configurations(petersen().complement(), 3, threads=4)
        assert single == multi

    def test_recount_deterministic(self):
        a = find_configurations(paley(13), 3)
        b = find_configurations(paley(13), 3)
        assert a == b

    def test_relabel_count_invariance(self):
        g = paley(13)
        perm = [(5 * i + 3) % 13 for i in range(13)]
        h = g.relabel(perm)
        assert len(find_configurations(h, 3)) == len(find_configurations(g, 3))

    def test_exploratory_path_warns(self):
        k4 = Graph(4, edges=list(itertools.combinations(range(4), 2)))
        with pytest.warns(UserWarning):
            found = find_configurations(k4, 3)
        assert found == []

    def test_exploratory_can_still_find(self):
        # the 6-cycle is not strongly regular, yet its edges form a (6_2)
        c6 = Graph(6, edges=[(i, (i + 1) % 6) for i in range(6)])
        with pytest.warns(UserWarning):
            found = find_configurations(c6, 2)
        assert len(found) == 1
        assert is_valid(found[0])
        assert point_graph(found[0]) == c6


class TestReduceIsomorphs:
    def test_counts_sum(self):
        found = find_configurations(petersen().complement(), 3)
        classes = reduce_isomorphs(found)
        assert sum(cl.count for cl in classes) == len(found)

    def test_empty(self):
        assert reduce_isomorphs([]) == []

    def test_spectra_of_petersen_classes(self):
        found = find_configurations(petersen().complement(), 3)
        kinds = {}
        for cl in reduce_isomorphs(found):
            geo = alpha_spectrum(cl.representative)
            kinds[geo.kind] = geo
        assert set(kinds) == {"semipartial_geometry", "general"}
        assert kinds["semipartial_geometry"].alpha == 2
        assert kinds["semipartial_geometry"].mu == 4
        general_values = {a for a, _ in kinds["general"].spectrum}
        assert {1, 2, 3} <= general_values
