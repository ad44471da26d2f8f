"""Cone, edgeless-complement, and complete-complement verifiers."""

from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import by_labels
from starkit.errors import (
    IrrationalSpectrumError,
    NotSRGError,
    PreconditionViolatedError,
)
from starkit.exactla import RatMatrix, rank
from starkit.graphio import (
    complete_graph,
    corpus,
    cycle_graph,
    empty_graph,
    join,
    path_graph,
    star_graph,
)
from starkit.constructions import (
    SrgParams,
    check_kt_proposition,
    check_tk1_proposition,
    cone_three_eigenvalue_check,
    srg_params,
    verify_aleph_equals_starset,
)
from starkit.spectral import eigen_data, rational_spectrum
from starkit.starsets import build_tableau, classify

F = Fraction


class TestSrgParams:
    def test_petersen(self):
        assert srg_params(corpus("petersen")) == SrgParams(10, 3, 0, 1)

    def test_pentagon(self):
        assert srg_params(cycle_graph(5)) == SrgParams(5, 2, 0, 1)

    def test_path_is_not(self):
        assert srg_params(path_graph(3)) is None

    def test_complete_graph_is_rejected(self):
        assert srg_params(complete_graph(4)) is None

    def test_c6_is_not(self):
        assert srg_params(cycle_graph(6)) is None


class TestConeCheck:
    def test_petersen_cone_keeps_three_eigenvalues(self):
        assert cone_three_eigenvalue_check(corpus("petersen")) is True

    def test_pentagon_has_irrational_spectrum(self):
        with pytest.raises(IrrationalSpectrumError):
            cone_three_eigenvalue_check(cycle_graph(5))

    def test_complete_graph_rejected(self):
        with pytest.raises(NotSRGError):
            cone_three_eigenvalue_check(complete_graph(4))

    def test_cone_verifications(self):
        cone = join(empty_graph(1), corpus("petersen"))
        spec = rational_spectrum(cone)
        assert [(e.value, e.multiplicity) for e in spec.entries] == [
            (F(5), 1), (F(1), 5), (F(-2), 5)]
        assert spec.main_values() == (F(5), F(-2))
        # the middle eigenvalue stays non-main in the cone
        assert not spec.entry(F(1)).is_main

    def test_c5cone_avoids_minus_two(self):
        c = corpus("C5cone")
        shifted = c.adjacency_matrix() + RatMatrix.identity(6).scale(2)
        assert rank(shifted) == 6


class TestAlephEqualsStarSetSize:
    def test_petersen_cone_at_minus_two(self):
        cone = join(empty_graph(1), corpus("petersen"))
        assert verify_aleph_equals_starset(cone, F(-2))

    def test_g_at_zero(self):
        assert verify_aleph_equals_starset(corpus("G"), F(0))

    def test_h_at_zero_fails(self):
        assert not verify_aleph_equals_starset(corpus("H"), F(0))


class TestEdgelessComplement:
    def test_star_k14_at_minus_two(self):
        g = star_graph(4)
        assert check_tk1_proposition(g, F(-2), (1, 2, 3, 4)) is True

    def test_star_k14_spectrum_sanity(self):
        g = star_graph(4)
        spec = rational_spectrum(g)
        assert [(e.value, e.multiplicity) for e in spec.entries] == [
            (F(2), 1), (F(0), 3), (F(-2), 1)]
        # inside the star itself -2 is main
        assert spec.entry(F(-2)).is_main

    def test_minus_one_is_excluded(self):
        g = star_graph(4)
        with pytest.raises(PreconditionViolatedError):
            check_tk1_proposition(g, F(-1), (1, 2, 3, 4))

    def test_complement_with_an_edge_is_rejected(self):
        g = star_graph(4)
        with pytest.raises(PreconditionViolatedError):
            check_tk1_proposition(g, F(-2), (0, 1, 2, 3))

    def test_zero_is_excluded(self):
        g = star_graph(4)
        with pytest.raises(PreconditionViolatedError):
            check_tk1_proposition(g, F(0), (1, 2, 3, 4))

    def test_conclusion_matches_per_vertex_extensions(self):
        # The tableau classification must agree with mainness computed
        # on the one-vertex extensions directly.
        g = star_graph(4)
        members = (0,)
        classification = classify(build_tableau(g, F(-2), members))
        from starkit.graphio import induced_subgraph
        for v in members:
            ext = induced_subgraph(g, (1, 2, 3, 4, v))
            assert eigen_data(ext, F(-2)).is_main == \
                (v in classification.main_vertices)


class TestCompleteComplement:
    def test_k5_with_k4_complement(self):
        assert check_kt_proposition(complete_graph(5), F(4), (0, 1, 2, 3)) is True

    def test_t_must_be_at_least_two(self):
        with pytest.raises(PreconditionViolatedError):
            check_kt_proposition(complete_graph(2), F(1), (0,))

    def test_zero_is_excluded(self):
        with pytest.raises(PreconditionViolatedError):
            check_kt_proposition(complete_graph(5), F(0), (0, 1, 2, 3))

    def test_non_complete_complement_is_rejected(self):
        g = corpus("fig1")
        with pytest.raises(PreconditionViolatedError):
            check_kt_proposition(g, F(0), (0, 1, 2, 4, 5, 6))
