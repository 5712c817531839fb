"""Smoke tests for the wsatlab Python module."""

import math

import pytest

import wsatlab


def test_graph_round_trip():
    g = wsatlab.Graph(4)
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    g.add_edge(2, 3)
    text = wsatlab.to_edge_list(g)
    assert text.startswith("4 3\n")
    back = wsatlab.read_edge_list(text)
    assert back.fingerprint() == g.fingerprint()
    assert back.has_edge(1, 2)
    assert not back.has_edge(0, 2)


def test_generate_gnp_is_seeded():
    a = wsatlab.generate_gnp(30, 0.4, seed=7)
    b = wsatlab.generate_gnp(30, 0.4, seed=7)
    c = wsatlab.generate_gnp(30, 0.4, seed=8)
    assert a.fingerprint() == b.fingerprint()
    assert a.fingerprint() != c.fingerprint()


def test_closure_of_path_in_complete_host():
    host = wsatlab.complete_graph(4)
    start = wsatlab.read_edge_list("4 3\n0 1\n1 2\n2 3\n")
    result = wsatlab.closure(host, start, 3)
    assert result["percolated"] is True
    assert len(result["trace"]["steps"]) == 3
    assert wsatlab.percolates(host, start, 3)


def test_wsat_on_complete_graph():
    result = wsatlab.wsat_exact(wsatlab.complete_graph(6), 3)
    assert result["exact"] is True
    assert result["value"] == wsatlab.lovasz_number(6, 3) == 5
    assert len(result["edges"]) == 5


def test_decide_as_verdict():
    verdict = wsatlab.decide_as(wsatlab.complete_graph(6), 3)
    assert verdict["verdict"] == "holds"


def test_counts_and_checks():
    assert wsatlab.count_cliques(wsatlab.complete_graph(5), 3) == 10
    assert wsatlab.pair_witness_count(wsatlab.complete_graph(5), 0, 1, 3) == 3
    c5 = wsatlab.read_edge_list("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n")
    report = wsatlab.check_property(c5, "bs", 3)
    assert report["holds"] is False
    assert report["counts"]["N_s"] == 5
    assert wsatlab.check_property(wsatlab.complete_graph(6), "ext", 3)["holds"] is True


def test_constructions():
    g = wsatlab.complete_graph(8)
    lemma1 = wsatlab.build_lemma1(g, 3)
    assert lemma1["kind"] == "lemma1"
    assert lemma1["status"] == "ok"
    assert len(lemma1["edges"]) == wsatlab.lovasz_number(8, 3)

    m, clamped = wsatlab.core_size(500, 0.45, 3, 4.0)
    assert (m, clamped) == (381, False)


def test_formula_values():
    assert wsatlab.threshold_scale(1000, 3) == pytest.approx(0.0831129068134555, rel=1e-14)
    assert wsatlab.threshold_constant(3) == pytest.approx(math.sqrt(1.5), rel=1e-14)
    e = wsatlab.expected_uncovered_edges(100, 0.2, 3)
    assert e["lo"] == e["point"] == e["hi"]
    assert e["point"] == pytest.approx(18.122413373764257, rel=1e-13)


def test_sweep_and_threshold_determinism():
    kwargs = dict(ns=[20], ps=[0.3, 0.6], s=3, trials=10, seed=5, property="bstar")
    one = wsatlab.sweep_property(workers=1, **kwargs)
    eight = wsatlab.sweep_property(workers=8, **kwargs)
    assert one == eight
    assert len(one["cells"]) == 2

    est = wsatlab.estimate_threshold(
        n=30, s=3, property="bstar", trials=20, tolerance=0.05, seed=3
    )
    assert 0.0 < est["p_half"] < 1.0


def test_domain_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        wsatlab.generate_gnp(10, 1.5, seed=1)
    with pytest.raises(ValueError):
        wsatlab.bs_threshold_p(10, 3, 0.0)
