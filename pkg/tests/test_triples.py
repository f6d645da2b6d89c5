from __future__ import annotations

import itertools
import random

import pytest

from metriclines import (
    BadParams,
    DegeneratePair,
    XInsideT,
    betweenness_triples,
    complete_quadruple,
    fano,
    hyper_line,
    hyper_line_family,
    k34_condition,
    line_family,
    triple_system,
    vertex_signatures,
)
from helpers import oracle_triples, random_int_space, random_rational_space


class TestConstruction:
    def test_edges_are_canonicalized(self):
        T = triple_system(4, [(2, 1, 0), (0, 1, 3)])
        assert T.sorted_edges() == ((0, 1, 2), (0, 1, 3))

    def test_rejects_repeated_vertices(self):
        with pytest.raises(BadParams):
            triple_system(4, [(0, 0, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(BadParams):
            triple_system(3, [(0, 1, 3)])

    def test_fano_shape(self):
        T = fano()
        assert T.n == 7
        assert len(T.sorted_edges()) == 7
        # a Steiner triple system: every pair lies in exactly one edge
        for u, v in itertools.combinations(range(7), 2):
            hits = [e for e in T.sorted_edges() if u in e and v in e]
            assert len(hits) == 1

    def test_complete_quadruple(self):
        T = complete_quadruple()
        assert T.n == 4
        assert len(T.sorted_edges()) == 4


class TestBetweennessTriples:
    def test_matches_oracle_on_random_spaces(self):
        for seed in range(8):
            S = random_rational_space(random.Random(seed), 5)
            assert set(betweenness_triples(S).sorted_edges()) == oracle_triples(S.dist)

    def test_uniform_space_has_no_triples(self):
        S = random_int_space(random.Random(0), 4, lo=3, hi=3)
        assert betweenness_triples(S).sorted_edges() == ()


class TestHyperLines:
    def test_line_is_pair_plus_edge_partners(self):
        T = triple_system(5, [(0, 1, 2), (0, 1, 3)])
        assert hyper_line(T, 0, 1).points == {0, 1, 2, 3}
        assert hyper_line(T, 3, 4).points == {3, 4}

    def test_degenerate_pair(self):
        with pytest.raises(DegeneratePair):
            hyper_line(triple_system(3, []), 1, 1)

    def test_family_agrees_with_metric_route(self):
        # the space and its triple system induce identical line families,
        # generators included
        for seed in range(8):
            S = random_int_space(random.Random(seed), 6)
            fam_s = line_family(S)
            fam_t = hyper_line_family(betweenness_triples(S))
            assert fam_s.point_sets() == fam_t.point_sets()
            assert [ln.generators for ln in fam_s] == [ln.generators for ln in fam_t]

    def test_exchange_property(self):
        T = fano()
        for u, v, w in itertools.permutations(range(7), 3):
            assert (w in hyper_line(T, u, v)) == (v in hyper_line(T, u, w))


class TestSignatures:
    def test_fano_has_exactly_n_lines_none_universal(self):
        fam = hyper_line_family(fano())
        assert fam.count == 7
        assert not fam.has_universal()
        assert all(len(ln) == 3 for ln in fam)
        sig, injective = vertex_signatures(fano())
        assert injective
        assert all(len(ids) == 3 for ids in sig.values())

    def test_signatures_injective_without_universal_line(self):
        T = triple_system(4, [(0, 1, 2)])
        fam = hyper_line_family(T)
        assert not fam.has_universal()
        sig, injective = vertex_signatures(T)
        assert injective
        assert len(set(sig.values())) == T.n

    def test_signature_sets_index_into_family(self):
        T = triple_system(4, [(0, 1, 2), (1, 2, 3)])
        fam = hyper_line_family(T)
        sig, _ = vertex_signatures(T)
        for v, ids in sig.items():
            for i in ids:
                assert v in fam.lines[i]
            for i in set(range(fam.count)) - ids:
                assert v not in fam.lines[i]


class TestK34Condition:
    def test_true_when_no_quadruple(self):
        T = triple_system(5, [(0, 1, 2)])
        assert k34_condition(T, 0, {1, 2, 3})

    def test_false_on_complete_quadruple(self):
        T = complete_quadruple()
        assert not k34_condition(T, 0, {1, 2, 3})

    def test_needs_all_four_triples(self):
        T = triple_system(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])  # {1,2,3} missing
        assert k34_condition(T, 0, {1, 2, 3})

    def test_x_inside_tset(self):
        with pytest.raises(XInsideT):
            k34_condition(complete_quadruple(), 1, {1, 2, 3})

    def test_empty_tset(self):
        assert k34_condition(complete_quadruple(), 0, set())
