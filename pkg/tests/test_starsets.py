"""Star sets, tableaux, pivoting, enumeration, partitions, domination."""

from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import brute_force_star_sets, by_labels, labels_of
from starkit.errors import (
    CapExceededError,
    IsolatedVertexError,
    NotAnEigenvalueError,
    NotAStarSetError,
    ZeroPivotError,
)
from starkit.exactla import RatMatrix, rank
from starkit.graphio import (
    complete_graph,
    complement_set,
    corpus,
    disjoint_union,
    empty_graph,
    star_graph,
)
from starkit.spectral import eigen_data
from starkit.starsets import (
    Tableau,
    build_tableau,
    classify,
    enumerate_star_sets,
    eigenvalue_is_main_via_tableau,
    initial_star_set,
    is_dominating,
    is_location_dominating,
    mainness_transfer_check,
    pivot,
    render_tableau,
    star_partition,
    tableau_to_json,
    verify_star_set,
    vertices_in_no_star_set,
)

F = Fraction


def tableau_signature(t: Tableau):
    return (t.basic, t.nonbasic,
            tuple(tuple(t.body.row(i)) for i in range(t.body.rows)),
            t.reduced_cost)


def assert_tableau(t: Tableau, row_names, col_names, body, cost):
    g = t.graph
    assert labels_of(g, t.basic) == tuple(row_names)
    assert labels_of(g, t.nonbasic) == tuple(col_names)
    assert [[t.body.at(i, j) for j in range(t.body.cols)]
            for i in range(t.body.rows)] == [[F(x) for x in row] for row in body]
    assert t.reduced_cost == tuple(F(x) for x in cost)


# The eight tableaux of corpus G at eigenvalue 0, walked by the recorded
# exchange chain starting at {g6, g7}; each step names the pivot (row
# vertex, column vertex) leading to the next tableau.
G_CHAIN = [
    dict(rows=("g1", "g2", "g3", "g4", "g5"), cols=("g6", "g7"),
         body=[[1, -1], [0, 0], [0, 1], [1, 0], [0, 0]], cost=(1, -1),
         pivot=("g1", "g6")),
    dict(rows=("g6", "g2", "g3", "g4", "g5"), cols=("g1", "g7"),
         body=[[1, -1], [0, 0], [0, 1], [-1, 1], [0, 0]], cost=(-1, 0),
         pivot=("g4", "g1")),
    dict(rows=("g6", "g2", "g3", "g1", "g5"), cols=("g4", "g7"),
         body=[[1, 0], [0, 0], [0, 1], [-1, -1], [0, 0]], cost=(-1, -1),
         pivot=("g3", "g7")),
    dict(rows=("g6", "g2", "g7", "g1", "g5"), cols=("g4", "g3"),
         body=[[1, 0], [0, 0], [0, 1], [-1, 1], [0, 0]], cost=(-1, 1),
         pivot=("g1", "g3")),
    dict(rows=("g6", "g2", "g7", "g3", "g5"), cols=("g4", "g1"),
         body=[[1, 0], [0, 0], [1, -1], [-1, 1], [0, 0]], cost=(0, -1),
         pivot=("g6", "g4")),
    dict(rows=("g4", "g2", "g7", "g3", "g5"), cols=("g6", "g1"),
         body=[[1, 0], [0, 0], [-1, -1], [1, 1], [0, 0]], cost=(0, -1),
         pivot=("g3", "g1")),
    dict(rows=("g4", "g2", "g7", "g1", "g5"), cols=("g6", "g3"),
         body=[[1, 0], [0, 0], [0, 1], [1, 1], [0, 0]], cost=(1, 1),
         pivot=("g1", "g6")),
    dict(rows=("g4", "g2", "g7", "g6", "g5"), cols=("g1", "g3"),
         body=[[-1, -1], [0, 0], [0, 1], [1, 1], [0, 0]], cost=(-1, 0),
         pivot=None),
]

# Same for corpus F starting at {f4, f7}.
F_CHAIN = [
    dict(rows=("f1", "f2", "f3", "f5", "f6"), cols=("f4", "f7"),
         body=[[1, 1], [1, 0], [-1, -1], [0, 0], [0, 0]], cost=(0, -1),
         pivot=("f3", "f4")),
    dict(rows=("f1", "f2", "f4", "f5", "f6"), cols=("f3", "f7"),
         body=[[1, 0], [1, -1], [-1, 1], [0, 0], [0, 0]], cost=(0, -1),
         pivot=("f2", "f3")),
    dict(rows=("f1", "f3", "f4", "f5", "f6"), cols=("f2", "f7"),
         body=[[-1, 1], [1, -1], [1, 0], [0, 0], [0, 0]], cost=(0, -1),
         pivot=("f1", "f2")),
    dict(rows=("f2", "f3", "f4", "f5", "f6"), cols=("f1", "f7"),
         body=[[-1, -1], [1, 0], [1, 1], [0, 0], [0, 0]], cost=(0, -1),
         pivot=("f4", "f7")),
    dict(rows=("f2", "f3", "f7", "f5", "f6"), cols=("f1", "f4"),
         body=[[0, 1], [1, 0], [1, 1], [0, 0], [0, 0]], cost=(1, 1),
         pivot=("f3", "f1")),
    dict(rows=("f2", "f1", "f7", "f5", "f6"), cols=("f3", "f4"),
         body=[[0, 1], [1, 0], [-1, 1], [0, 0], [0, 0]], cost=(-1, 1),
         pivot=("f2", "f4")),
    dict(rows=("f4", "f1", "f7", "f5", "f6"), cols=("f3", "f2"),
         body=[[0, 1], [1, 0], [-1, -1], [0, 0], [0, 0]], cost=(-1, -1),
         pivot=("f1", "f3")),
    dict(rows=("f4", "f3", "f7", "f5", "f6"), cols=("f1", "f2"),
         body=[[0, 1], [1, 0], [1, -1], [0, 0], [0, 0]], cost=(1, -1),
         pivot=None),
]


class TestInitialStarSet:
    def test_fig1_zero_gives_vertex_one(self):
        s = initial_star_set(corpus("fig1"), F(0))
        assert s.members == (0,)  # label "1"

    def test_g_zero_is_one_of_the_eight(self):
        g = corpus("G")
        s = initial_star_set(g, F(0))
        assert len(s.members) == 2
        assert verify_star_set(g, F(0), s.members)

    def test_k2_singleton(self):
        s = initial_star_set(complete_graph(2), F(1))
        assert len(s.members) == 1

    def test_not_an_eigenvalue(self):
        with pytest.raises(NotAnEigenvalueError):
            initial_star_set(corpus("G"), F(7))


class TestVerifyStarSet:
    def test_g6_g7_is_a_star_set(self):
        g = corpus("G")
        assert verify_star_set(g, F(0), by_labels(g, "g6", "g7"))

    def test_g2_g5_is_not(self):
        g = corpus("G")
        assert not verify_star_set(g, F(0), by_labels(g, "g2", "g5"))

    def test_whole_vertex_set_fails_when_multiplicity_smaller(self):
        g = corpus("G")
        assert not verify_star_set(g, F(0), tuple(range(7)))

    def test_whole_vertex_set_passes_for_edgeless_graph(self):
        g = empty_graph(3)
        assert verify_star_set(g, F(0), (0, 1, 2))

    def test_wrong_size_fails(self):
        g = corpus("G")
        assert not verify_star_set(g, F(0), (5,))


class TestBuildTableau:
    def test_fig1_minus_two(self):
        g = corpus("fig1")
        t = build_tableau(g, F(-2), by_labels(g, "1", "4"))
        assert_tableau(t, ("2", "3", "5", "6", "7"), ("1", "4"),
                       [[1, 0], [0, 1], [0, 1], [1, 0], [-1, -1]], (0, 0))

    def test_fig1_plus_one_costs_vanish(self):
        g = corpus("fig1")
        t = build_tableau(g, F(1), by_labels(g, "2", "3"))
        assert t.reduced_cost == (F(0), F(0))
        assert not eigenvalue_is_main_via_tableau(t)

    def test_fig1_zero_singleton(self):
        g = corpus("fig1")
        t = build_tableau(g, F(0), by_labels(g, "7"))
        assert_tableau(t, ("1", "2", "3", "4", "5", "6"), ("7",),
                       [[1], [0], [0], [1], [0], [0]], (1,))

    def test_h_zero(self):
        h = corpus("H")
        t = build_tableau(h, F(0), by_labels(h, "h6", "h7"))
        assert_tableau(t, ("h1", "h2", "h3", "h4", "h5"), ("h6", "h7"),
                       [[0, 0], [0, 0], [0, 0], [0, 1], [1, 0]], (0, 0))

    def test_f_zero(self):
        f = corpus("F")
        t = build_tableau(f, F(0), by_labels(f, "f4", "f7"))
        assert_tableau(t, ("f1", "f2", "f3", "f5", "f6"), ("f4", "f7"),
                       [[1, 1], [1, 0], [-1, -1], [0, 0], [0, 0]], (0, -1))

    def test_rejects_non_star_set(self):
        g = corpus("G")
        with pytest.raises(NotAStarSetError):
            build_tableau(g, F(0), by_labels(g, "g2", "g5"))


class TestClassify:
    def test_g_whole_set_main(self):
        g = corpus("G")
        c = classify(build_tableau(g, F(0), by_labels(g, "g6", "g7")))
        assert labels_of(g, c.main_vertices) == ("g6", "g7")

    def test_g_partial_main(self):
        g = corpus("G")
        c = classify(build_tableau(g, F(0), by_labels(g, "g1", "g7")))
        assert labels_of(g, c.main_vertices) == ("g1",)
        assert labels_of(g, c.non_main_vertices) == ("g7",)

    def test_fig1_non_main_eigenvalue_has_no_main_vertices(self):
        g = corpus("fig1")
        c = classify(build_tableau(g, F(-2), by_labels(g, "1", "4")))
        assert c.main_vertices == ()


class TestPivotChains:
    @pytest.mark.parametrize("name,chain,start", [
        ("G", G_CHAIN, ("g6", "g7")),
        ("F", F_CHAIN, ("f4", "f7")),
    ])
    def test_recorded_chain(self, name, chain, start):
        g = corpus(name)
        t = build_tableau(g, F(0), by_labels(g, *start))
        for step in chain:
            assert_tableau(t, step["rows"], step["cols"],
                           step["body"], step["cost"])
            if step["pivot"] is None:
                break
            u, v = (g.vertex_named(x) for x in step["pivot"])
            t = pivot(t, u, v)

    def test_pivot_then_reverse_restores(self):
        g = corpus("G")
        t = build_tableau(g, F(0), by_labels(g, "g6", "g7"))
        u, v = g.vertex_named("g1"), g.vertex_named("g6")
        back = pivot(pivot(t, u, v), v, u)
        assert tableau_signature(back) == tableau_signature(t)

    def test_pivoted_equals_rebuilt(self):
        g = corpus("G")
        for value in (F(0), F(-1), F(-2)):
            catalog = enumerate_star_sets(g, value)
            for item in catalog.items:
                t = build_tableau(g, value, item.star_set.members)
                for i, u in enumerate(t.basic):
                    for j, v in enumerate(t.nonbasic):
                        if t.body.at(i, j) == 0:
                            continue
                        moved = pivot(t, u, v).canonical()
                        rebuilt = build_tableau(
                            g, value, moved.star_set().members).canonical()
                        assert tableau_signature(moved) == \
                            tableau_signature(rebuilt)

    def test_zero_pivot_rejected(self):
        g = corpus("G")
        t = build_tableau(g, F(0), by_labels(g, "g6", "g7"))
        with pytest.raises(ZeroPivotError):
            pivot(t, g.vertex_named("g2"), g.vertex_named("g6"))

    def test_h_pivot_matches_rebuild(self):
        h = corpus("H")
        t = build_tableau(h, F(0), by_labels(h, "h6", "h7"))
        moved = pivot(t, h.vertex_named("h4"), h.vertex_named("h7"))
        assert moved.star_set().members == by_labels(h, "h4", "h6")
        rebuilt = build_tableau(h, F(0), by_labels(h, "h4", "h6"))
        assert tableau_signature(moved.canonical()) == \
            tableau_signature(rebuilt.canonical())


class TestMainnessTransfer:
    def test_status_moves_with_the_exchange(self):
        g = corpus("G")
        t = build_tableau(g, F(0), by_labels(g, "g6", "g7"))
        u, v = g.vertex_named("g1"), g.vertex_named("g6")
        assert mainness_transfer_check(t, u, v)
        # The same vertex can still flip status between star sets:
        # g7 is main alongside g6 but non-main alongside g1.
        assert classify(t).main_vertices == by_labels(g, "g6", "g7")
        after = pivot(t, u, v)
        assert labels_of(g, classify(after).main_vertices) == ("g1",)

    def test_holds_for_every_legal_pivot_on_fig1(self):
        g = corpus("fig1")
        for value in (F(-2), F(1), F(0)):
            catalog = enumerate_star_sets(g, value)
            for item in catalog.items:
                t = build_tableau(g, value, item.star_set.members)
                for u in t.basic:
                    for v in t.nonbasic:
                        if t.entry(u, v) != 0:
                            assert mainness_transfer_check(t, u, v)


class TestEnumeration:
    def test_g_zero_catalog(self):
        g = corpus("G")
        catalog = enumerate_star_sets(g, F(0))
        expected = {
            ("g6", "g7"): ("g6", "g7"),
            ("g1", "g7"): ("g1",),
            ("g4", "g7"): ("g4", "g7"),
            ("g3", "g4"): ("g3", "g4"),
            ("g1", "g4"): ("g1",),
            ("g1", "g6"): ("g1",),
            ("g3", "g6"): ("g3", "g6"),
            ("g1", "g3"): ("g1",),
        }
        got = {labels_of(g, item.star_set.members):
               labels_of(g, item.main_vertices) for item in catalog.items}
        assert got == expected
        assert catalog.complete and catalog.k_lambda == 2

    def test_h_zero_catalog(self):
        h = corpus("H")
        catalog = enumerate_star_sets(h, F(0))
        assert {labels_of(h, i.star_set.members) for i in catalog.items} == {
            ("h6", "h7"), ("h4", "h6"), ("h5", "h7"), ("h4", "h5")}
        assert all(i.main_vertices == () for i in catalog.items)

    def test_fig1_zero_catalog(self):
        catalog = enumerate_star_sets(corpus("fig1"), F(0))
        assert [i.star_set.members for i in catalog.items] == [(0,), (3,), (6,)]

    def test_matches_brute_force_everywhere(self):
        for name in ("fig1", "G", "H", "F"):
            g = corpus(name)
            from starkit.spectral import rational_spectrum
            for entry in rational_spectrum(g).entries:
                catalog = enumerate_star_sets(g, entry.value)
                assert list(catalog.star_sets()) == \
                    brute_force_star_sets(g, entry.value)

    def test_cap_raises(self):
        with pytest.raises(CapExceededError):
            enumerate_star_sets(corpus("G"), F(0), cap=4)

    def test_cap_partial_mode(self):
        catalog = enumerate_star_sets(corpus("G"), F(0), cap=4,
                                      on_cap="partial")
        assert not catalog.complete
        assert len(catalog.items) == 4

    def test_seed_must_be_a_star_set(self):
        g = corpus("G")
        with pytest.raises(NotAStarSetError):
            enumerate_star_sets(g, F(0), seed=by_labels(g, "g2", "g5"))

    def test_seed_independence_small(self):
        g = corpus("G")
        reference = enumerate_star_sets(g, F(0))
        for item in reference.items:
            again = enumerate_star_sets(g, F(0), seed=item.star_set.members)
            assert again.items == reference.items

    def test_edgeless_graph_has_single_star_set(self):
        catalog = enumerate_star_sets(empty_graph(3), F(0))
        assert list(catalog.star_sets()) == [(0, 1, 2)]


class TestTableauReadings:
    def test_vertices_in_no_star_set_for_g(self):
        g = corpus("G")
        t = build_tableau(g, F(0), by_labels(g, "g6", "g7"))
        assert labels_of(g, vertices_in_no_star_set(t)) == ("g2", "g5")

    def test_every_fig1_vertex_reaches_minus_two_star_sets(self):
        g = corpus("fig1")
        t = build_tableau(g, F(-2), by_labels(g, "1", "4"))
        assert vertices_in_no_star_set(t) == ()

    def test_f_rows_f5_f6_are_dead(self):
        f = corpus("F")
        t = build_tableau(f, F(0), by_labels(f, "f4", "f7"))
        assert labels_of(f, vertices_in_no_star_set(t)) == ("f5", "f6")

    def test_eigenvalue_mainness_via_cost_row(self):
        g, h = corpus("G"), corpus("H")
        tg = build_tableau(g, F(0), by_labels(g, "g6", "g7"))
        th = build_tableau(h, F(0), by_labels(h, "h6", "h7"))
        assert eigenvalue_is_main_via_tableau(tg)
        assert not eigenvalue_is_main_via_tableau(th)

    def test_render_and_json(self):
        g = corpus("G")
        t = build_tableau(g, F(0), by_labels(g, "g6", "g7"))
        text = render_tableau(t, mark=(g.vertex_named("g1"),
                                       g.vertex_named("g6")))
        assert "[1]" in text and "cost" in text and "g5" in text
        obj = tableau_to_json(t)
        assert obj["nonbasic"] == ["g6", "g7"]
        assert obj["body"][0] == ["1", "-1"]
        assert obj["reduced_cost"] == ["1", "-1"]


class TestStructuralProperties:
    def test_reconstruction_identity_on_g(self):
        g = corpus("G")
        a = g.adjacency_matrix()
        for item in enumerate_star_sets(g, F(0)).items:
            members = item.star_set.members
            co = complement_set(members, g)
            n_block = a.submatrix(co, members)
            b_block = a.submatrix(co, co) - RatMatrix.identity(len(co)).scale(F(0))
            from starkit.exactla import invert
            left = a.submatrix(members, members)
            right = n_block.transpose() @ invert(b_block) @ n_block
            assert left == right

    def test_bordered_rows_span_the_shifted_row_space(self):
        # Rows of A - lam*I indexed by the co-star set span the whole
        # row space: rank equals the co-star size both ways.
        for name, value in (("fig1", F(-2)), ("G", F(0)), ("H", F(0))):
            g = corpus(name)
            catalog = enumerate_star_sets(g, value)
            shifted = g.adjacency_matrix() - \
                RatMatrix.identity(g.n).scale(value)
            for item in catalog.items:
                co = item.star_set.co_star
                sub = shifted.submatrix(co, range(g.n))
                assert rank(sub) == len(co) == rank(shifted)

    def test_tableau_columns_are_eigenvector_tails(self):
        g = corpus("fig1")
        t = build_tableau(g, F(-2), by_labels(g, "1", "4"))
        a = g.adjacency_matrix()
        for j, v in enumerate(t.nonbasic):
            vec = [F(0)] * g.n
            vec[v] = F(-1)
            for i, u in enumerate(t.basic):
                vec[u] = t.body.at(i, j)
            out = a @ RatMatrix.from_rows([[x] for x in vec])
            assert out == RatMatrix.from_rows([[x] for x in vec]).scale(F(-2))

    def test_no_zero_columns_without_isolated_vertices(self):
        for name, value in (("G", F(0)), ("H", F(0)), ("fig1", F(1))):
            g = corpus(name)
            for item in enumerate_star_sets(g, value).items:
                t = build_tableau(g, value, item.star_set.members)
                for j in range(t.body.cols):
                    assert any(x != 0 for x in t.body.column(j))

    def test_every_vertex_in_some_co_star_set(self):
        for name, value in (("G", F(0)), ("H", F(0)), ("F", F(0)),
                            ("fig1", F(-2))):
            g = corpus(name)
            covered = set()
            for item in enumerate_star_sets(g, value).items:
                covered.update(item.star_set.co_star)
            assert covered == set(range(g.n))

    def test_only_isolated_vertices_live_in_every_star_set(self):
        # Without isolated vertices the intersection of all star sets of
        # any eigenvalue is empty.
        from starkit.spectral import rational_spectrum
        for name in ("fig1", "G", "H", "F"):
            g = corpus(name)
            for entry in rational_spectrum(g).entries:
                sets = brute_force_star_sets(g, entry.value)
                common = set(sets[0])
                for s in sets[1:]:
                    common &= set(s)
                assert common == set()
        # With one: the isolated vertex sits in every 0-star set.
        g = disjoint_union(empty_graph(1), complete_graph(2))
        zero_sets = brute_force_star_sets(g, F(0))
        assert zero_sets == [(0,)]
        one_sets = brute_force_star_sets(g, F(1))
        assert one_sets == [(1,), (2,)]


class TestIsolatedVertexGuards:
    def test_guarded_operations_refuse(self):
        g = disjoint_union(empty_graph(1), complete_graph(2))
        t = build_tableau(g, F(1), (1,))
        with pytest.raises(IsolatedVertexError):
            vertices_in_no_star_set(t)
        with pytest.raises(IsolatedVertexError):
            eigenvalue_is_main_via_tableau(t)
        with pytest.raises(IsolatedVertexError):
            mainness_transfer_check(t, 2, 1)


class TestStarPartition:
    def test_fig1_partition(self):
        g = corpus("fig1")
        partition = star_partition(g)
        sizes = {str(value): len(members) for value, members in partition}
        assert sizes == {"3": 1, "1": 2, "0": 1, "-1": 1, "-2": 2}
        covered = [v for _, members in partition for v in members]
        assert sorted(covered) == list(range(7))
        for value, members in partition:
            assert verify_star_set(g, value, members)

    def test_k2(self):
        partition = star_partition(complete_graph(2))
        assert partition == ((F(1), (0,)), (F(-1), (1,)))

    def test_k1(self):
        assert star_partition(empty_graph(1)) == ((F(0), (0,)),)

    def test_refuses_irrational_spectra(self):
        from starkit.errors import UnsupportedSpectrumError
        with pytest.raises(UnsupportedSpectrumError):
            star_partition(corpus("G"))

    def test_petersen_partition(self):
        p = corpus("petersen")
        partition = star_partition(p)
        assert [(str(v), len(m)) for v, m in partition] == [
            ("3", 1), ("1", 5), ("-2", 4)]
        for value, members in partition:
            assert verify_star_set(p, value, members)


class TestDomination:
    def test_co_star_sets_dominate(self):
        g = corpus("G")
        assert is_dominating(g, by_labels(g, "g1", "g2", "g3", "g4", "g5"))

    def test_location_domination_for_fig1_minus_two(self):
        g = corpus("fig1")
        co = complement_set(by_labels(g, "1", "4"), g)
        assert is_location_dominating(g, co)

    def test_empty_set_does_not_dominate(self):
        assert not is_dominating(complete_graph(2), ())

    def test_star_k14_co_star_is_not_location_dominating(self):
        # All leaves have the same trace {centre} on the singleton set.
        g = star_graph(4)
        assert is_dominating(g, (0,))
        assert not is_location_dominating(g, (0,))
