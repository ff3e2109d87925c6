"""The polynomials: frozen small values, route agreement, relations."""

from fractions import Fraction

import pytest

import corpus
from topopoly import embedding as em
from topopoly import matroid as mt
from topopoly import multigraph as mg
from topopoly import poly
from topopoly import ribbon as rb
from topopoly.mpoly import MPolynomial

F = Fraction


def triangle():
    return mg.Multigraph((0, 1, 2), {1: (0, 1), 2: (1, 2), 3: (0, 2)})


# ---------------------------------------------------------------------------
# Tutte


def test_tutte_triangle_counts():
    t = poly.tutte(mt.cycle_matroid(triangle()))
    assert str(t) == "y + x + x^2"
    ev = lambda x0, y0: t.evaluate({"x": F(x0), "y": F(y0)})
    assert ev(1, 1) == 3   # spanning trees
    assert ev(2, 1) == 7   # forests
    assert ev(1, 2) == 4   # connected spanning subgraphs
    assert ev(2, 2) == 8   # all subsets


def test_tutte_respects_duality():
    g = triangle()
    t = poly.tutte(mt.cycle_matroid(g))
    td = poly.tutte(mt.bond_matroid(g))
    for x0, y0 in ((2, 3), (-1, 2), (5, -2)):
        assert (t.evaluate({"x": F(x0), "y": F(y0)})
                == td.evaluate({"x": F(y0), "y": F(x0)}))


def test_dichromatic_vs_tutte():
    for g in (triangle(), corpus.plane_loop().underlying(),
              mg.Multigraph((0, 1, 2), {1: (0, 1)})):  # disconnected too
        z = poly.dichromatic(g)
        t = poly.tutte(mt.cycle_matroid(g))
        c = mg.components(g)
        r = mg.rank(g)
        for x0, y0 in ((F(2), F(3)), (F(1, 2), F(5)), (F(-3), F(2))):
            lhs = z.evaluate({"x": x0, "y": y0})
            rhs = (x0 ** c) * (y0 ** r) * t.evaluate(
                {"x": x0 / y0 + 1, "y": y0 + 1})
            assert lhs == rhs


# ---------------------------------------------------------------------------
# perspectives


def _theta_perspective():
    emb = em.with_disc_regions(corpus.theta_torus())
    return em.scheme_perspective(em.derive_dagger(emb))


def test_perspective_expansion_matches_recursion():
    mp = _theta_perspective()
    assert (poly.tutte_perspective(mp, "expansion")
            == poly.tutte_perspective(mp, "recursion"))


def test_perspective_self_is_tutte():
    m = mt.cycle_matroid(triangle())
    mp = mt.make_perspective(m, m)
    assert poly.tutte_perspective(mp, "expansion") == poly.tutte(m)


def test_perspective_specializes_to_both_ends():
    mp = _theta_perspective()
    t = poly.tutte_perspective(mp, "expansion")
    # z -> x-1 recovers the source matroid's polynomial
    x = MPolynomial.variable("x")
    assert t.substitute("z", x - MPolynomial.one()) == poly.tutte(mp.m)
    # scaled evaluation at z = 1/(y-1) recovers the target's
    tp = poly.tutte(mp.m_prime)
    drop = mp.m.rank() - mp.m_prime.rank()
    for x0, y0 in ((F(2), F(3)), (F(-1), F(4)), (F(3), F(1, 2))):
        lhs = ((y0 - 1) ** drop) * t.evaluate(
            {"x": x0, "y": y0, "z": 1 / (y0 - 1)})
        assert lhs == tp.evaluate({"x": x0, "y": y0})


# ---------------------------------------------------------------------------
# the cellular polynomial


THETA_L = "1 + 3z + 2z^2 + xz^2"


def test_theta_value_four_routes():
    theta = corpus.theta_torus()
    emb = em.with_disc_regions(theta)
    mp = em.scheme_perspective(em.derive_dagger(emb))
    routes = (
        poly.las_vergnas_cellular(theta, "expansion"),
        poly.las_vergnas_embedded(emb, "expansion"),
        poly.las_vergnas_embedded(emb, "recursion"),
        poly.tutte_perspective(mp, "expansion"),
    )
    assert all(str(r) == THETA_L for r in routes)


def test_torus_loop_value():
    emb = corpus.torus_loop_annulus()
    assert str(poly.las_vergnas_embedded(emb, "expansion")) == "1 + z"
    assert str(poly.las_vergnas_embedded(emb, "recursion")) == "1 + z"


def test_cellular_routes_agree_on_corpus():
    for rs in corpus.cellular_corpus()[:14]:
        a = poly.las_vergnas_cellular(rs, "expansion")
        b = poly.las_vergnas_cellular(rs, "recursion")
        c = poly.las_vergnas_embedded(em.with_disc_regions(rs), "expansion")
        assert a == b == c


def test_plane_cellular_polynomial_is_tutte():
    for rs in corpus.cellular_corpus():
        if rb.euler_genus(rs) != 0:
            continue
        assert (poly.las_vergnas_cellular(rs, "expansion")
                == poly.tutte(mt.cycle_matroid(rs.underlying())))


def test_embedded_recursion_matches_expansion_non_cellular():
    for emb in (corpus.torus_loop_annulus(), corpus.digon_torus_annulus(),
                corpus.pinched_spheres()):
        assert (poly.las_vergnas_embedded(emb, "expansion")
                == poly.las_vergnas_embedded(emb, "recursion"))


# ---------------------------------------------------------------------------
# ribbon and surface polynomials


def test_bollobas_riordan_frozen_values():
    assert str(poly.bollobas_riordan(corpus.proj_loop())) == "1 + yz"
    assert str(poly.bollobas_riordan(corpus.plane_loop())) == "1 + y"


def test_bollobas_riordan_specializes_to_tutte():
    for rs in corpus.cellular_corpus()[:14]:
        r = poly.bollobas_riordan(rs)
        t = poly.tutte(mt.cycle_matroid(rs.underlying()))
        for x0, y0 in ((F(2), F(3)), (F(-1), F(1, 2))):
            assert (r.evaluate({"x": x0, "y": y0 - 1, "z": F(1)})
                    == t.evaluate({"x": x0, "y": y0}))


def test_krushkal_frozen_values():
    assert str(poly.krushkal(corpus.torus_loop_annulus())) == "1 + b"
    assert str(poly.krushkal(em.with_disc_regions(corpus.proj_loop()))) \
        == "b^(1/2) + a^(1/2)"
    assert str(poly.krushkal(em.with_disc_regions(corpus.plane_edge()))) \
        == "1 + x"


def test_krushkal_rejects_pinches_and_disconnection():
    with pytest.raises((em.EmbeddingError, rb.RibbonError, poly.PolyError)):
        poly.krushkal(corpus.pinched_spheres())
    two = rb.RotationSystem(
        {0: (((1, 0), (1, 1)),), 1: (((2, 0), (2, 1)),)}, {1: 1, 2: 1})
    with pytest.raises(poly.PolyError):
        poly.krushkal(em.with_disc_regions(two))


# ---------------------------------------------------------------------------
# caps and the identity suite


def test_cap_is_enforced():
    rs = corpus.random_rotation(__import__("random").Random(1), 2, 6,
                                allow_pinch=False)
    with pytest.raises(poly.CapError):
        poly.bollobas_riordan(rs, cap=5)


def test_identity_suite_on_named_fixtures():
    for emb in corpus.named_embedded():
        results = poly.verify_identities(emb)
        bad = [r.line() for r in results if r.failed]
        assert not bad, bad


def test_identity_suite_is_deterministic():
    emb = em.with_disc_regions(corpus.klein_bouquet())
    lines1 = [r.line() for r in poly.verify_identities(emb)]
    lines2 = [r.line() for r in poly.verify_identities(emb)]
    assert lines1 == lines2


def test_check_result_lines():
    assert poly.CheckResult("x", "pass").line() == "RESULT: x pass"
    assert poly.CheckResult("x", "fail", "why").line() == "RESULT: x fail: why"
    assert poly.CheckResult("x", "skip", "gate").line() == "RESULT: x skip: gate"
