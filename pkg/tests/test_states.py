"""State counting on medials and the low-genus formulas."""

import pytest

import corpus
from topopoly import embedding as em
from topopoly import poly
from topopoly import ribbon as rb
from topopoly import states as st
from topopoly.ribbon import BLACK, CROSSING, WHITE


def test_split_state_validates():
    loop = corpus.plane_loop()
    with pytest.raises(st.StateError):
        st.split_state(loop, {})
    with pytest.raises(st.StateError):
        st.split_state(loop, {1: "magenta"})
    w, b, c = st.split_state(loop, {1: WHITE})
    assert (w, b, c) == (frozenset({1}), frozenset(), frozenset())


def test_twisted_loop_state_counts():
    # worked out by hand on the projective plane
    ploop = corpus.proj_loop()
    mm = rb.medial(ploop)
    for state, want in (({1: BLACK}, 1), ({1: WHITE}, 1), ({1: CROSSING}, 2)):
        assert st.state_components(ploop, state) == want
        assert st.medial_state_components(mm, state) == want


def test_plane_loop_state_counts():
    loop = corpus.plane_loop()
    mm = rb.medial(loop)
    for state, want in (({1: BLACK}, 1), ({1: WHITE}, 2), ({1: CROSSING}, 1)):
        assert st.state_components(loop, state) == want
        assert st.medial_state_components(mm, state) == want


def test_theta_profile():
    assert st.noncrossing_profile(corpus.theta_torus()) == {1: 4, 2: 4}


def test_component_formula_on_theta():
    theta = corpus.theta_torus()
    for w in (frozenset(), {1}, {1, 2}, {1, 2, 3}):
        state = {e: (WHITE if e in w else BLACK) for e in theta.edges}
        report = st.lv_component_formula(theta, state)
        assert report.agrees
        assert report.components == rb.boundary_count(theta, frozenset(w))


def test_component_formula_rejects_crossings():
    with pytest.raises(st.StateError):
        st.lv_component_formula(corpus.plane_loop(), {1: CROSSING})


def test_surface_kinds():
    assert st.surface_kind(corpus.plane_digon()) == "sphere"
    assert st.surface_kind(corpus.proj_loop()) == "projective-plane"
    assert st.surface_kind(corpus.theta_torus()) == "torus"
    with pytest.raises(st.GenusRangeError, match="Klein"):
        st.surface_kind(corpus.klein_bouquet())


def test_surface_kind_rejects_high_genus():
    rs = rb.RotationSystem.single(
        {0: ((1, 0), (2, 0), (3, 0), (4, 0), (1, 1), (2, 1), (3, 1), (4, 1))},
        {1: 1, 2: 1, 3: 1, 4: 1})
    assert rb.euler_genus(rs) == 4
    with pytest.raises(st.GenusRangeError):
        st.surface_kind(rs)


def test_lr_relation_on_low_genus_fixtures():
    for rs in (corpus.plane_edge(), corpus.plane_digon(), corpus.proj_loop(),
               corpus.theta_torus(), corpus.bouquet_torus()):
        res = st.lr_relation(rs)
        assert res.status == "pass", res.line()


def test_lr_relation_raises_out_of_range():
    with pytest.raises(st.GenusRangeError):
        st.lr_relation(corpus.klein_bouquet())


def test_generating_function_check():
    res = st.generating_function_check(corpus.theta_torus())
    assert res.status == "pass"
    two = rb.RotationSystem(
        {0: (((1, 0), (1, 1)),), 1: (((2, 0), (2, 1)),)}, {1: 1, 2: 1})
    assert st.generating_function_check(two).status == "skip"


def test_quasi_tree_duality_on_theta():
    theta = corpus.theta_torus()
    report = st.quasi_tree_duality(theta, ())
    assert report.quasi_tree and report.dual_quasi_tree
    assert report.genus_identity is True
    # deleting everything leaves two vertex discs: not a quasi-tree
    report = st.quasi_tree_duality(theta, (1, 2, 3))
    assert not report.quasi_tree and not report.dual_quasi_tree


def test_run_state_checks_on_fixtures():
    for rs in (corpus.theta_torus(), corpus.plane_digon(), corpus.proj_loop(),
               corpus.bouquet_torus()):
        results = st.run_state_checks(rs)
        bad = [r.line() for r in results if r.failed]
        assert not bad, bad
        assert [r.name for r in results] == [
            "state-tracer-agreement", "noncrossing-min-formula",
            "state-generating-function", "lr-relation", "quasi-tree-duality"]


def test_run_state_checks_gates_klein():
    results = {r.name: r for r in st.run_state_checks(corpus.klein_bouquet())}
    assert results["state-tracer-agreement"].status == "pass"
    assert results["noncrossing-min-formula"].status == "skip"
    assert results["lr-relation"].status == "skip"
    assert results["quasi-tree-duality"].status == "pass"


def test_run_state_checks_preconditions():
    with pytest.raises(st.StateError):
        st.run_state_checks(rb.RotationSystem(
            {0: (((1, 0), (1, 1)),), 1: (((2, 0), (2, 1)),)}, {1: 1, 2: 1}))
    with pytest.raises(poly.CapError):
        st.run_state_checks(corpus.theta_torus(), sweep_cap=2)
