"""Polynomials of graphs in surfaces, and their exact identities.

Subset expansions are computed by bucketing the exponent triples over
all edge subsets and expanding each distinct bucket once.  The two
recursive evaluations (matroid pair and embedding scheme) process the
highest surviving edge id, so expansion and recursion build byte-equal
canonical strings whenever they agree as polynomials.

verify_identities cross-checks every relation between the polynomials
on one embedded graph, exactly over the rationals: either as literal
polynomial identities or at seeded rational sample points chosen away
from the poles of the substitution being tested.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import embedding as em
from . import matroid as mt
from . import multigraph as mg
from . import ribbon as rb
from .mpoly import MPolynomial

EXPANSION_CAP = 20
IDENTITY_CAP = 16


class CapError(ValueError):
    pass


class PolyError(ValueError):
    pass


def check_cap(n_edges: int, cap: int, what: str) -> None:
    if n_edges > cap:
        raise CapError(f"{what} on {n_edges} edges exceeds the cap of {cap}; "
                       f"pass a larger cap to force it")


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str                 # pass | fail | skip
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def line(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"RESULT: {self.name} {self.status}{tail}"


def _ok(name, detail=""):
    return CheckResult(name, "pass", detail)


def _bad(name, detail):
    return CheckResult(name, "fail", detail)


def _skip(name, detail):
    return CheckResult(name, "skip", detail)


# ---------------------------------------------------------------------------
# subset machinery


def _subsets(edges: tuple[int, ...]):
    for size in range(len(edges) + 1):
        for combo in itertools.combinations(edges, size):
            yield frozenset(combo)


def _assemble_xyz(counts: Mapping[tuple[int, int, int], int]) -> MPolynomial:
    """Sum of count * (x-1)^i (y-1)^j z^k over the buckets."""
    xm = MPolynomial.variable("x") - 1
    ym = MPolynomial.variable("y") - 1
    top_i = max((i for i, _, _ in counts), default=0)
    top_j = max((j for _, j, _ in counts), default=0)
    xp = [MPolynomial.one()]
    for _ in range(top_i):
        xp.append(xp[-1] * xm)
    yp = [MPolynomial.one()]
    for _ in range(top_j):
        yp.append(yp[-1] * ym)
    total = MPolynomial.zero()
    for (i, j, k), c in sorted(counts.items()):
        total = total + c * xp[i] * yp[j] * MPolynomial.monomial(1, z=2 * k)
    return total


# ---------------------------------------------------------------------------
# the polynomials


def tutte(m: mt.RankMatroid, cap: int = EXPANSION_CAP) -> MPolynomial:
    """Corank-nullity sum of a matroid."""
    check_cap(len(m.ground), cap, "Tutte expansion")
    r_full = m.rank()
    counts: dict[tuple[int, int, int], int] = {}
    for a in _subsets(m.ground):
        r_a = m.rank(a)
        key = (r_full - r_a, len(a) - r_a, 0)
        counts[key] = counts.get(key, 0) + 1
    return _assemble_xyz(counts)


def tutte_perspective(mp: mt.MatroidPerspective, method: str = "expansion",
                      cap: int = EXPANSION_CAP) -> MPolynomial:
    """Three-variable corank-nullity sum of a matroid pair; z tracks
    how much of the rank drop M' has not yet seen."""
    check_cap(len(mp.ground), cap, "perspective expansion")
    if method == "expansion":
        r_full = mp.m.rank()
        rp_full = mp.m_prime.rank()
        counts: dict[tuple[int, int, int], int] = {}
        for a in _subsets(mp.ground):
            r_a = mp.m.rank(a)
            rp_a = mp.m_prime.rank(a)
            k = (r_full - r_a) - (rp_full - rp_a)
            if k < 0:
                raise PolyError(f"rank drop inversion on {sorted(a)}; "
                                "not a matroid perspective")
            key = (rp_full - rp_a, len(a) - r_a, k)
            counts[key] = counts.get(key, 0) + 1
        return _assemble_xyz(counts)
    if method == "recursion":
        return _perspective_recursion(mp.m, mp.m_prime)
    raise PolyError(f"unknown method {method!r}")


def _perspective_recursion(m: mt.RankMatroid, m_prime: mt.RankMatroid) -> MPolynomial:
    """Delete/contract on the highest edge id.

    An isthmus of M' (hence of M) gives x, a loop of M (hence of M')
    gives y, an isthmus of M alone gives z on the deletion branch plus
    the contraction branch, and an ordinary element branches plainly.
    """
    if not m.ground:
        return MPolynomial.one()
    e = max(m.ground)
    dele = (mt.delete(m, e), mt.delete(m_prime, e))
    if mt.is_loop(m, e):
        return MPolynomial.variable("y") * _perspective_recursion(*dele)
    if mt.is_isthmus(m_prime, e):
        return MPolynomial.variable("x") * _perspective_recursion(*dele)
    cont = (mt.contract(m, e), mt.contract(m_prime, e))
    if mt.is_isthmus(m, e):
        return (MPolynomial.variable("z") * _perspective_recursion(*dele)
                + _perspective_recursion(*cont))
    return _perspective_recursion(*dele) + _perspective_recursion(*cont)


def _cellular_subset_stats(rs: rb.RotationSystem, cap: int):
    """Per subset A: (|A|, r(A), genus(A), genus of dual on E-A)."""
    rb.require_pinch_free(rs, "the cellular polynomial")
    check_cap(len(rs.edges), cap, "subset expansion")
    g = rs.underlying()
    gd = rb.dual(rs)
    full = rs.edge_set()
    rows = []
    for a in _subsets(rs.edges):
        rows.append((a, mg.rank(g, a), rb.euler_genus(rs, a),
                     rb.euler_genus(gd, full - a)))
    return rows


def las_vergnas_cellular(rs: rb.RotationSystem, method: str = "expansion",
                         cap: int = EXPANSION_CAP) -> MPolynomial:
    """The cellular three-variable polynomial, from boundary data of
    the graph and its dual; z records half the genus deficiency."""
    if method == "recursion":
        emb = em.with_disc_regions(rs)
        return las_vergnas_embedded(em.derive_dagger(emb), "recursion", cap)
    if method != "expansion":
        raise PolyError(f"unknown method {method!r}")
    rows = _cellular_subset_stats(rs, cap)
    g = rs.underlying()
    r_full = mg.rank(g)
    gamma = rb.euler_genus(rs)
    counts: dict[tuple[int, int, int], int] = {}
    for a, r_a, g_a, gd_ac in rows:
        split = gamma + g_a - gd_ac
        if split % 2:
            raise PolyError(f"odd genus split on {sorted(a)}")
        ey = (len(a) - r_a) - split // 2
        ez2 = gamma - g_a + gd_ac
        if ez2 % 2 or ey < 0 or ez2 < 0:
            raise PolyError(f"bad exponents on {sorted(a)}")
        key = (r_full - r_a, ey, ez2 // 2)
        counts[key] = counts.get(key, 0) + 1
    return _assemble_xyz(counts)


def las_vergnas_embedded(x, method: str = "expansion",
                         cap: int = EXPANSION_CAP) -> MPolynomial:
    """The pseudo-surface polynomial, over the embedding scheme.

    Expansion sums (x-1)^(c(A)-c(E)) (y-1)^(rho(A)-rho(0)) z^(...)
    over edge subsets; recursion deletes or contracts the highest edge
    id, scoring bridges x, quasi-loops y and proper quasi-bridges z.
    """
    s = em.derive_dagger(x) if isinstance(x, em.EmbeddedGraph) else x
    check_cap(len(s.g.edges), cap, "subset expansion")
    if method == "recursion":
        return _scheme_recursion(s)
    if method != "expansion":
        raise PolyError(f"unknown method {method!r}")
    edges = s.g.edges
    c_full = mg.components(s.g)
    rho_full = em.rho(s)
    rho_empty = em.rho(s, ())
    n = len(edges)
    counts: dict[tuple[int, int, int], int] = {}
    for a in _subsets(edges):
        c_a = mg.components(s.g, a)
        rho_a = em.rho(s, a)
        ez = (n - len(a)) - (rho_full - rho_a) - (c_a - c_full)
        if ez < 0 or c_a < c_full or rho_a < rho_empty:
            raise PolyError(f"bad exponents on {sorted(a)}")
        key = (c_a - c_full, rho_a - rho_empty, ez)
        counts[key] = counts.get(key, 0) + 1
    return _assemble_xyz(counts)


def _scheme_recursion(s: em.EmbeddingScheme) -> MPolynomial:
    edges = s.g.edges
    if not edges:
        return MPolynomial.one()
    e = max(edges)
    dele = em.delete_edge(s, e)
    if em.rho(s, {e}) > em.rho(s, ()):          # quasi-loop
        return MPolynomial.variable("y") * _scheme_recursion(dele)
    if mg.is_bridge(s.g, e):
        return MPolynomial.variable("x") * _scheme_recursion(dele)
    cont = em.contract_edge(s, e)
    if s.dagger.is_loop(e):                      # quasi-bridge, not a bridge
        return (MPolynomial.variable("z") * _scheme_recursion(dele)
                + _scheme_recursion(cont))
    return _scheme_recursion(dele) + _scheme_recursion(cont)


def bollobas_riordan(rs: rb.RotationSystem, cap: int = EXPANSION_CAP) -> MPolynomial:
    """Rank-nullity-genus sum of a ribbon graph."""
    rb.require_pinch_free(rs, "the ribbon polynomial")
    check_cap(len(rs.edges), cap, "subset expansion")
    g = rs.underlying()
    r_full = mg.rank(g)
    xm = MPolynomial.variable("x") - 1
    xp = [MPolynomial.one()]
    counts: dict[tuple[int, int, int], int] = {}
    for a in _subsets(rs.edges):
        r_a = mg.rank(g, a)
        key = (r_full - r_a, len(a) - r_a, rb.euler_genus(rs, a))
        counts[key] = counts.get(key, 0) + 1
    top = max((i for i, _, _ in counts), default=0)
    for _ in range(top):
        xp.append(xp[-1] * xm)
    total = MPolynomial.zero()
    for (i, j, k), c in sorted(counts.items()):
        total = total + c * xp[i] * MPolynomial.monomial(1, y=2 * j, z=2 * k)
    return total


def krushkal(emb: em.EmbeddedGraph, cap: int = EXPANSION_CAP) -> MPolynomial:
    """Surface sum over subsets: component drop, complement regions,
    and the half-genera of the neighbourhood (a) and complement (b)."""
    report = em.validate(emb)
    rb.require_pinch_free(emb.rotation, "the surface polynomial")
    if report.components != 1:
        raise PolyError("the surface polynomial needs a connected ambient surface")
    check_cap(len(emb.rotation.edges), cap, "subset expansion")
    g = emb.rotation.underlying()
    c_full = mg.components(g)
    total = MPolynomial.zero()
    counts: dict[tuple[int, int, int, int], int] = {}
    for a in _subsets(emb.rotation.edges):
        stats = em.complement_stats(emb, a)
        key = (mg.components(g, a) - c_full, stats.components - 1,
               stats.neighborhood_genus, stats.euler_genus)
        counts[key] = counts.get(key, 0) + 1
    for (ex, ey, ha, hb), c in sorted(counts.items()):
        total = total + MPolynomial.monomial(c, x=2 * ex, y=2 * ey, a=ha, b=hb)
    return total


def dichromatic(g: mg.Multigraph, cap: int = EXPANSION_CAP) -> MPolynomial:
    """Component-count sum: x^c(A) y^|A| over edge subsets."""
    check_cap(len(g.edges), cap, "subset expansion")
    total = MPolynomial.zero()
    counts: dict[tuple[int, int], int] = {}
    for a in _subsets(g.edges):
        key = (mg.components(g, a), len(a))
        counts[key] = counts.get(key, 0) + 1
    for (c_a, sz), c in sorted(counts.items()):
        total = total + MPolynomial.monomial(c, x=2 * c_a, y=2 * sz)
    return total


# ---------------------------------------------------------------------------
# identity suite


def _point_pool() -> tuple[Fraction, ...]:
    vals = {Fraction(n, d) for d in (1, 2, 3) for n in range(-9, 10)}
    vals -= {Fraction(0), Fraction(1)}
    return tuple(sorted(vals))


def _points(rng: random.Random, pool, k: int, n: int):
    return [tuple(rng.choice(pool) for _ in range(k)) for _ in range(n)]


def _pointwise(name: str, pts, fn) -> CheckResult:
    for pt in pts:
        lhs, rhs = fn(*pt)
        if lhs != rhs:
            coords = ", ".join(str(v) for v in pt)
            return _bad(name, f"at ({coords}): {lhs} != {rhs}")
    return _ok(name)


def verify_identities(emb: em.EmbeddedGraph, *, seed: int = 11, points: int = 8,
                      cap: int = IDENTITY_CAP) -> list[CheckResult]:
    """Run every polynomial identity that applies to this embedding.

    Identities whose preconditions the input does not meet come back
    as skips, never silently dropped.  All comparisons are exact.
    """
    rs = emb.rotation
    n = len(rs.edges)
    check_cap(n, cap, "the identity suite")
    report = em.validate(emb)
    scheme = em.derive_dagger(emb)
    g = scheme.g
    pinch_free = not rs.pinch_vertices()
    cellular = report.cellular
    connected_surface = report.components == 1

    rng = random.Random(seed)
    pool = _point_pool()
    out: list[CheckResult] = []

    l_ext = las_vergnas_embedded(scheme, "expansion", cap)
    mp = em.scheme_perspective(scheme)
    t_pers = tutte_perspective(mp, "expansion", cap)
    t_m = tutte(mp.m, cap)
    t_mp = tutte(mp.m_prime, cap)

    # Perspective specialisations.
    self_b = tutte_perspective(mt.MatroidPerspective(mp.m, mp.m), "expansion", cap)
    self_c = tutte_perspective(mt.MatroidPerspective(mp.m_prime, mp.m_prime),
                               "expansion", cap)
    if self_b == t_m and self_c == t_mp:
        out.append(_ok("perspective-self"))
    else:
        out.append(_bad("perspective-self", "pair polynomial of (M, M) is not "
                        "the Tutte polynomial"))

    image = MPolynomial.variable("x") - 1
    if t_pers.substitute("z", image) == t_m:
        out.append(_ok("perspective-to-m"))
    else:
        out.append(_bad("perspective-to-m", "z -> x-1 did not recover M"))

    drop = mp.m.rank() - mp.m_prime.rank()

    def to_m_prime(x0, y0):
        lhs = (y0 - 1) ** drop * t_pers.evaluate(
            {"x": x0, "y": y0, "z": Fraction(1, 1) / (y0 - 1)})
        return lhs, t_mp.evaluate({"x": x0, "y": y0})

    out.append(_pointwise("perspective-to-m-prime",
                          _points(rng, pool, 2, points), to_m_prime))

    # Cellular-only material.
    l_cell = t_cycle = r_poly = None
    gamma = None
    if cellular:
        l_cell = las_vergnas_cellular(rs, "expansion", cap)
        t_cycle = tutte(mt.cycle_matroid(g), cap)
        r_poly = bollobas_riordan(rs, cap)
        gamma = rb.euler_genus(rs)
        if l_cell == l_ext:
            out.append(_ok("lv-extension-matches-cellular"))
        else:
            out.append(_bad("lv-extension-matches-cellular",
                            "scheme expansion differs from the cellular one"))
    else:
        out.append(_skip("lv-extension-matches-cellular",
                         "needs a cellular embedding"))

    if cellular:
        def lv_to_tutte(x0, y0):
            lhs = (y0 - 1) ** gamma * l_cell.evaluate(
                {"x": x0, "y": y0, "z": Fraction(1, 1) / (y0 - 1)})
            return lhs, t_cycle.evaluate({"x": x0, "y": y0})

        out.append(_pointwise("lv-to-tutte", _points(rng, pool, 2, points),
                              lv_to_tutte))

        rows = _cellular_subset_stats(rs, cap)
        r_full = mg.rank(g)

        def tidy(x0, y0, z0):
            lhs = (z0 * (y0 - 1)) ** gamma * l_cell.evaluate(
                {"x": x0, "y": y0, "z": 1 / (z0 * z0 * (y0 - 1))})
            rhs = Fraction(0)
            for a, r_a, g_a, gd_ac in rows:
                rhs += ((x0 - 1) ** (r_full - r_a)
                        * (y0 - 1) ** (len(a) - r_a)
                        * Fraction(z0) ** (g_a - gd_ac))
            return lhs, rhs

        out.append(_pointwise("lv-tidy", _points(rng, pool, 3, points), tidy))

        dual_rs = rb.dual(rs)
        dual_g = dual_rs.underlying()
        n_dual = mg.nullity(dual_g)
        c_g = mg.components(g)
        full = rs.edge_set()
        comp_rows = [(a, mg.components(g, a), mg.components(dual_g, full - a))
                     for a in _subsets(rs.edges)]

        def dichro(x0, y0, z0):
            lhs = l_cell.evaluate({"x": x0, "y": y0, "z": z0})
            rhs = Fraction(0)
            for a, c_a, cd_ac in comp_rows:
                rhs += (((x0 - 1) / z0) ** c_a * ((y0 - 1) * z0) ** cd_ac
                        * Fraction(1, 1) / Fraction(z0) ** len(a))
            rhs *= Fraction(z0) ** n_dual / ((x0 - 1) * (y0 - 1)) ** c_g
            return lhs, rhs

        out.append(_pointwise("lv-dichromatic", _points(rng, pool, 3, points),
                              dichro))

        def br_at_one(x0, y0):
            lhs = r_poly.evaluate({"x": x0, "y": y0, "z": 1})
            rhs = Fraction(y0) ** gamma * l_cell.evaluate(
                {"x": x0, "y": y0 + 1, "z": Fraction(1, 1) / y0})
            return lhs, rhs

        out.append(_pointwise("br-at-z1", _points(rng, pool, 2, points),
                              br_at_one))
    else:
        for name in ("lv-to-tutte", "lv-tidy", "lv-dichromatic", "br-at-z1"):
            out.append(_skip(name, "needs a cellular embedding"))

    # Surface sum relations.
    k_poly = None
    if pinch_free and connected_surface:
        k_poly = krushkal(emb, cap)

    if k_poly is not None and cellular:
        def br_from_k(x0, q, z0):
            lhs = r_poly.evaluate({"x": x0, "y": q * q, "z": z0})
            rhs = Fraction(q) ** gamma * k_poly.evaluate(
                {"x": x0 - 1, "y": q * q, "a": q * q * z0 * z0,
                 "b": 1 / Fraction(q * q)},
                sqrts={"a": q * z0, "b": 1 / Fraction(q)})
            return lhs, rhs

        out.append(_pointwise("br-from-krushkal", _points(rng, pool, 3, points),
                              br_from_k))

        def lv_from_k_cell(x0, y0, w):
            lhs = l_cell.evaluate({"x": x0, "y": y0, "z": w * w})
            rhs = Fraction(w) ** gamma * k_poly.evaluate(
                {"x": x0 - 1, "y": y0 - 1, "a": 1 / Fraction(w * w), "b": w * w},
                sqrts={"a": 1 / Fraction(w), "b": w})
            return lhs, rhs

        out.append(_pointwise("lv-from-krushkal-cellular",
                              _points(rng, pool, 3, points), lv_from_k_cell))
    else:
        why = ("needs a cellular embedding" if k_poly is not None
               else "needs a connected pinch-free surface")
        out.append(_skip("br-from-krushkal", why))
        out.append(_skip("lv-from-krushkal-cellular", why))

    if k_poly is not None:
        stats_full = em.complement_stats(emb, rs.edge_set())
        pre = stats_full.neighborhood_genus - stats_full.euler_genus

        def lv_from_k(x0, y0, w):
            lhs = l_ext.evaluate({"x": x0, "y": y0, "z": w * w})
            rhs = Fraction(w) ** pre * k_poly.evaluate(
                {"x": x0 - 1, "y": y0 - 1, "a": 1 / Fraction(w * w), "b": w * w},
                sqrts={"a": 1 / Fraction(w), "b": w})
            return lhs, rhs

        out.append(_pointwise("lv-from-krushkal",
                              _points(rng, pool, 3, points), lv_from_k))
    else:
        out.append(_skip("lv-from-krushkal",
                         "needs a connected pinch-free surface"))
    return out
