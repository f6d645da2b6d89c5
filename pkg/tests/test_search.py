"""Tests for the exact minimum-line searches."""

from __future__ import annotations

import math

import pytest

from metriclines import (
    BadParams,
    EmptyUniverse,
    Graph,
    SizeCap,
    TripleSystem,
    conjecture_scan,
    load_graph_text,
    load_triples_text,
    min_lines,
)
from metriclines.search import (
    DEFAULT_EXCLUDE,
    UNIVERSES,
    _instance_masks,
    triple_line_masks,
)


class TestKnownMinima:
    def test_hypergraph_minimum_n3(self):
        rep = min_lines("hypergraphs", 3)
        assert rep.minimum == 3
        assert rep.exclude_universal is True
        assert isinstance(rep.witness, TripleSystem)
        assert rep.witness.sorted_edges() == ()
        assert rep.iso_classes == 2

    def test_hypergraph_minima_small(self):
        assert min_lines("hypergraphs", 4).minimum == 4
        assert min_lines("hypergraphs", 5).minimum == 5

    def test_one_two_minimum_n3(self):
        rep = min_lines("one_two", 3)
        assert rep.minimum == 1
        assert rep.exclude_universal is False
        assert isinstance(rep.witness, Graph)
        # the witness is a path through vertex 2, in canonical labeling
        assert rep.witness.sorted_edges() == ((0, 2), (1, 2))

    def test_one_two_minima_table(self):
        # exact values of the 1-2 minimum for every searchable size
        expected = {2: 1, 3: 1, 4: 1, 5: 4, 6: 4, 7: 7}
        for n, want in expected.items():
            assert min_lines("one_two", n).minimum == want

    def test_one_two_excluding_universal(self):
        rep = min_lines("one_two", 3, exclude_universal=True)
        assert rep.minimum == 3

    def test_graph_metric_minima(self):
        assert min_lines("graph_metrics", 3).minimum == 3
        assert min_lines("graph_metrics", 4).minimum == 6
        assert min_lines("graph_metrics", 5).minimum == 6

    def test_hypergraph_log_floor(self):
        # the minimum always clears ceil(log2 n) on the searched sizes
        for n in (3, 4, 5):
            rep = min_lines("hypergraphs", n)
            assert rep.minimum >= math.ceil(math.log2(n))


class TestWitnessValidity:
    @pytest.mark.parametrize("universe", UNIVERSES)
    def test_witness_attains_minimum(self, universe):
        rep = min_lines(universe, 4)
        masks = set(_instance_masks(universe, rep.witness))
        assert len(masks) == rep.minimum
        if rep.exclude_universal:
            assert (1 << rep.n) - 1 not in masks

    def test_witness_text_round_trips(self):
        rep = min_lines("hypergraphs", 4)
        back = load_triples_text(rep.witness_text())
        assert back.edges == rep.witness.edges
        rep = min_lines("one_two", 4)
        back = load_graph_text(rep.witness_text())
        assert back.adj == rep.witness.adj


class TestValidationAndCaps:
    def test_unknown_universe(self):
        with pytest.raises(BadParams):
            min_lines("lattices", 4)

    def test_too_small(self):
        with pytest.raises(BadParams):
            min_lines("one_two", 1)
        with pytest.raises(BadParams):
            min_lines("one_two", 2, exclude_universal=True)

    def test_caps(self):
        with pytest.raises(SizeCap):
            min_lines("hypergraphs", 7)
        with pytest.raises(SizeCap):
            min_lines("one_two", 8)
        with pytest.raises(SizeCap):
            min_lines("graph_metrics", 9)

    def test_defaults_per_universe(self):
        assert DEFAULT_EXCLUDE == {
            "hypergraphs": True,
            "one_two": False,
            "graph_metrics": True,
        }
        for universe in UNIVERSES:
            rep = min_lines(universe, 3)
            assert rep.exclude_universal is DEFAULT_EXCLUDE[universe]

    def test_empty_universe(self, monkeypatch):
        # no real universe in range is empty (the edgeless system and the
        # complete graph never have a universal line), so stub the
        # enumeration down to a single path graph, whose line is universal
        import metriclines.search as search_mod
        from metriclines import graph_from_edges

        path = graph_from_edges(3, [(0, 1), (1, 2)])
        monkeypatch.setattr(
            search_mod, "enum_graphs", lambda n, connected=False: [path]
        )
        with pytest.raises(EmptyUniverse):
            min_lines("graph_metrics", 3)


class TestTripleLineMasks:
    def test_edgeless(self):
        T = TripleSystem(3, frozenset())
        assert sorted(triple_line_masks(T)) == [0b011, 0b101, 0b110]

    def test_single_triple_merges_all(self):
        T = TripleSystem(3, frozenset({(0, 1, 2)}))
        assert set(triple_line_masks(T)) == {0b111}


class TestConjectureScan:
    def test_small_scan(self):
        rep = conjecture_scan(3)
        assert rep.violators == ()
        assert rep.minima == {3: 3}
        assert rep.iso_classes == 2

    def test_scan_to_five(self):
        rep = conjecture_scan(5)
        assert rep.violators == ()
        assert rep.minima == {3: 3, 4: 6, 5: 6}
        assert rep.instances_examined == 2 + 6 + 21

    def test_vacuous_sizes(self):
        rep = conjecture_scan(2)
        assert rep.violators == ()
        assert rep.minima == {}
        assert rep.instances_examined == 0

    def test_cap(self):
        with pytest.raises(SizeCap):
            conjecture_scan(9)
        with pytest.raises(BadParams):
            conjecture_scan(0)


class TestReportSerialization:
    def test_json_dict_is_reproducible(self):
        a = min_lines("one_two", 4).to_json_dict()
        b = min_lines("one_two", 4).to_json_dict()
        assert a == b
        assert "elapsed_ms" not in a

    def test_timing_opt_in(self):
        rep = min_lines("one_two", 3)
        with_timing = rep.to_json_dict(include_timing=True)
        assert "elapsed_ms" in with_timing
        assert isinstance(with_timing["elapsed_ms"], int)

    def test_scan_json_shape(self):
        d = conjecture_scan(4).to_json_dict()
        assert d["minima"] == {"3": 3, "4": 6}
        assert d["violators"] == []
        assert "elapsed_ms" not in d
