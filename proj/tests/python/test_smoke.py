"""Smoke tests for the python bindings."""

import fractions

import pytest

import circhi


def test_rational_round_trip():
    r = circhi.Rational(8, 3)
    assert (r.num, r.den) == (8, 3)
    assert str(r) == "8/3"
    assert circhi.Rational.parse("6/4") == circhi.Rational(3, 2)
    assert circhi.Rational(1, 2) + circhi.Rational(1, 3) == circhi.Rational(5, 6)
    assert fractions.Fraction(float(circhi.Rational(1, 2))) == fractions.Fraction(1, 2)
    with pytest.raises(ValueError):
        circhi.Rational(1, 0)


def test_graph_and_catalog():
    g = circhi.petersen()
    assert g.vertex_count == 10
    assert g.degree(0) == 3
    assert circhi.line_graph(g).vertex_count == 15
    assert circhi.catalog("gn:1").edge_count == 10
    assert circhi.neighborhood(g, 0, 2) == [2, 3, 6, 7, 8, 9]


def test_chi_c_three_routes_agree():
    g = circhi.cycle_graph(5)
    d = circhi.to_symmetric_digraph(g, circhi.Rational(1))
    kd = circhi.chi_c_exact_kd(g)
    assert kd.value == circhi.Rational(5, 2)
    assert circhi.verify_kd_coloring(g, kd.witness)
    assert circhi.chi_c_exact_minty(d).value == kd.value
    assert circhi.chi_c_via_dynamics(g).value == kd.value


def test_token_game_matches_cycle_ratio():
    g = circhi.cycle_graph(5)
    d = circhi.to_symmetric_digraph(g, circhi.Rational(1))
    w = circhi.AcyclicOrientation(g, [(0, 1), (2, 1), (2, 3), (4, 3), (4, 0)])
    t = circhi.marking_from_orientation(w)
    assert circhi.is_good_marking(d, t)
    steady = circhi.run_to_steady_state(d, t)
    ratio = circhi.max_cycle_ratio(d, t)
    assert steady.ratio() == ratio.ratio == circhi.Rational(5, 2)
    assert circhi.sink_sequence(w).ratio() == circhi.Rational(5, 2)
    assert circhi.unit_dynamics_equivalence(w)


def test_bounds_and_reports():
    q = circhi.q_graph()
    report = circhi.bound_alpha2(q)
    assert report.applicable
    assert report.value == circhi.Rational(27, 10)
    assert [h.holds for h in report.hypotheses] == [True] * 4
    best = circhi.best_lower_bound(q)
    assert best.best == circhi.Rational(27, 10)


def test_weak_coloring_construction():
    g = circhi.cycle_graph(5)
    d = circhi.to_symmetric_digraph(g, circhi.Rational(1))
    opt = circhi.chi_c_exact_minty(d)
    report = circhi.weak_coloring_from_marking(d, opt.witness, opt.value)
    assert report.valid
    assert report.tight_dicycle is not None
    with pytest.raises(circhi.PositiveCycle):
        circhi.weak_coloring_from_marking(d, opt.witness, circhi.Rational(2))


def test_errors_surface_as_python_exceptions():
    g = circhi.cycle_graph(5)
    with pytest.raises(circhi.NotAcyclic):
        circhi.AcyclicOrientation(g, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    with pytest.raises(circhi.CapExceeded):
        circhi.chi_c_exact_minty(circhi.to_symmetric_digraph(g, circhi.Rational(1)), 3)


def test_file_round_trip(tmp_path):
    path = str(tmp_path / "g.ug")
    g = circhi.g_family(1)
    circhi.save_ug(path, g)
    assert circhi.load_ug(path) == g
    assert circhi.dot_graph(g).startswith("graph G {")
