"""Vertex states of the medial graph, counted three ways.

Every vertex of the medial graph sits on one edge e of the original
graph and admits three smoothings: black (the curve hugs e), white
(the curve hugs the corners) and crossing.  A state chooses one per
vertex and splits the medial into closed curves.  The edge sets W, B,
C below always name the edges whose medial vertex got the white,
black, or crossing smoothing.

The number of curves is computed here by three independent routes:
tracing the smoothed medial itself (medial_state_components), tracing
the original graph after twisting C and dropping B (state_components),
and, for crossing-free states, an Euler-formula count plus a two-term
minimum formula that is exact on the sphere, the torus and the
projective plane.  run_state_checks sweeps all 3^e states and every
relation that applies, emitting one result line per check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import multigraph as mg
from . import poly
from . import ribbon as rb
from .mpoly import MPolynomial, compose_laurent, laurent_to_poly
from .poly import CheckResult, _bad, _ok, _skip, check_cap
from .ribbon import BLACK, CROSSING, WHITE

STATE_SWEEP_CAP = 8


class StateError(ValueError):
    pass


class GenusRangeError(StateError):
    """The ambient surface is outside sphere/torus/projective plane."""


def split_state(rs: rb.RotationSystem, state: Mapping[int, str]
                ) -> tuple[frozenset, frozenset, frozenset]:
    """(W, B, C) edge sets of a state; validates coverage."""
    if set(state) != set(rs.signs):
        raise StateError("state must assign every edge exactly once")
    w, b, c = set(), set(), set()
    for e, s in state.items():
        if s == WHITE:
            w.add(e)
        elif s == BLACK:
            b.add(e)
        elif s == CROSSING:
            c.add(e)
        else:
            raise StateError(f"unknown smoothing {s!r} on edge {e}")
    return frozenset(w), frozenset(b), frozenset(c)


def state_components(rs: rb.RotationSystem, state: Mapping[int, str]) -> int:
    """Curves of the state, counted on the original graph: twist the
    crossing edges, then count boundary circles without the black ones."""
    _, b, c = split_state(rs, state)
    return rb.boundary_count(rb.twist(rs, c), rs.edge_set() - b)


def medial_state_components(mm: rb.MedialMap, state: Mapping[int, str]) -> int:
    """Direct count on the medial: glue its edges end to end through
    the chosen smoothing at every medial vertex."""
    halves = list(mm.medial.half_home)
    ds = mg.DisjointSets(halves)
    for cid in mm.corners:
        ds.union((cid, 0), (cid, 1))
    for e, s in state.items():
        for p, q in mm.pairings[e][s]:
            ds.union(p, q)
    return ds.count


def noncrossing_profile(rs: rb.RotationSystem,
                        cap: int = poly.EXPANSION_CAP) -> dict[int, int]:
    """How many crossing-free states split into k curves, per k."""
    check_cap(len(rs.edges), cap, "the crossing-free sweep")
    profile: dict[int, int] = {}
    for w in poly._subsets(rs.edges):
        k = rb.boundary_count(rs, w)
        profile[k] = profile.get(k, 0) + 1
    return profile


@dataclass(frozen=True)
class FormulaReport:
    components: int         # curves of the crossing-free state
    formula_value: int      # Euler-formula count from the white set
    min_form_value: int     # two-term minimum (exact up to genus 2)
    agrees: bool


def lv_component_formula(rs: rb.RotationSystem,
                         state: Mapping[int, str]) -> FormulaReport:
    """Count the curves of a crossing-free state by formula."""
    rb.require_pinch_free(rs, "state counting")
    w, b, c = split_state(rs, state)
    if c:
        raise StateError(f"state has crossings on {sorted(c)}")
    g = rs.underlying()
    v = len(rs.sectors)
    f_w = rb.boundary_count(rs, w)
    gamma_w = rb.euler_genus(rs, w)
    formula = 2 * mg.components(g, w) - gamma_w + len(w) - v
    if formula != f_w:
        raise StateError("Euler count disagrees with the trace")

    dual_rs = rb.dual(rs)
    gamma_b = rb.euler_genus(dual_rs, b)
    min_form = min(f_w + gamma_b, f_w + gamma_w)

    if mg.components(g) == 1:
        # Termwise agreement with the rank form of the minimum.
        dual_g = dual_rs.underlying()
        rank1 = len(b) + mg.rank(dual_g) - 2 * mg.rank(dual_g, b) + 1
        rank2 = (len(rs.edges) - len(b)) + mg.rank(g) - 2 * mg.rank(g, w) + 1
        if rank1 != f_w + gamma_b or rank2 != f_w + gamma_w:
            raise StateError("rank form of the minimum drifted from the "
                             "genus form")
    return FormulaReport(f_w, formula, min_form, min_form == f_w)


# ---------------------------------------------------------------------------
# quasi-trees


@dataclass(frozen=True)
class QuasiTreeReport:
    deleted: tuple[int, ...]
    quasi_tree: bool            # G - A connected with one boundary circle
    dual_quasi_tree: bool       # same for the dual on the complement
    genus_identity: bool | None  # genus(G-A) + genus(G* on A) = genus(G)


def quasi_tree_duality(rs: rb.RotationSystem, a: Iterable[int]) -> QuasiTreeReport:
    rb.require_pinch_free(rs, "quasi-tree duality")
    a = frozenset(a)
    kept = rs.edge_set() - a
    dual_rs = rb.dual(rs)
    q1 = rb.is_quasi_tree(rs, kept)
    q2 = rb.is_quasi_tree(dual_rs, a)
    identity = None
    if q1 and q2:
        identity = (rb.euler_genus(rs, kept) + rb.euler_genus(dual_rs, a)
                    == rb.euler_genus(rs))
    return QuasiTreeReport(tuple(sorted(a)), q1, q2, identity)


def _is_spanning_tree(g: mg.Multigraph, a: frozenset) -> bool:
    return len(a) == len(g.vertices) - 1 and mg.components(g, a) == 1


# ---------------------------------------------------------------------------
# low-genus surfaces and the diagonal relation


def surface_kind(rs: rb.RotationSystem) -> str:
    """sphere / projective-plane / torus for a connected cellular
    filling; anything else raises GenusRangeError."""
    gamma = rb.euler_genus(rs)
    orientable = rb.is_orientable(rs)
    if gamma == 0:
        return "sphere"
    if gamma == 1:
        return "projective-plane"
    if gamma == 2 and orientable:
        return "torus"
    if gamma == 2:
        raise GenusRangeError("genus out of range: the Klein bottle is not "
                              "covered by the low-genus results")
    raise GenusRangeError(f"genus out of range: Euler genus {gamma} exceeds 2")


_DIAGONAL = {"x": {0: 1, 1: 1}, "y": {1: 1}, "z": {-1: 1}}
_SHIFTED = {"x": {0: 1, 1: 1}, "y": {0: 1, 1: 1}, "z": {0: 1}}


def generating_function_check(rs: rb.RotationSystem,
                              cap: int = poly.EXPANSION_CAP) -> CheckResult:
    """t R(t+1, t, 1/t) must list the crossing-free states by curve
    count (connected graphs)."""
    name = "state-generating-function"
    if mg.components(rs.underlying(), rs.edge_set()) != 1:
        return _skip(name, "needs a connected graph")
    r_poly = poly.bollobas_riordan(rs, cap)
    diag = compose_laurent(r_poly, _DIAGONAL)
    got = {d + 1: c for d, c in diag.items() if c}
    want = noncrossing_profile(rs, cap)
    if got != want:
        return _bad(name, f"diagonal gives {sorted(got.items())}, "
                          f"profile is {sorted(want.items())}")
    return _ok(name)


def lr_relation(rs: rb.RotationSystem,
                cap: int = poly.EXPANSION_CAP) -> CheckResult:
    """The diagonal of R against the z-slices of L, by surface:
    sphere and projective plane use L(t+1, t+1, 1); the torus weights
    the z-slices of L as L2 + t L1 + L0 at (t+1, t+1)."""
    name = "lr-relation"
    kind = surface_kind(rs)
    if mg.components(rs.underlying(), rs.edge_set()) != 1:
        return _skip(name, "needs a connected graph")
    l_poly = poly.las_vergnas_cellular(rs, "expansion", cap)
    r_poly = poly.bollobas_riordan(rs, cap)
    rhs = laurent_to_poly(compose_laurent(r_poly, _DIAGONAL))

    if kind in ("sphere", "projective-plane"):
        lhs = laurent_to_poly(compose_laurent(l_poly, _SHIFTED))
    else:
        slices: dict[int, dict] = {}
        for exps, coeff in l_poly.terms().items():
            hz = exps[2]
            if hz % 2:
                raise StateError("half-power of z in the cellular polynomial")
            cleared = list(exps)
            cleared[2] = 0
            slices.setdefault(hz // 2, {})[tuple(cleared)] = coeff
        total: dict[int, int] = {}
        for i, terms in slices.items():
            piece = compose_laurent(MPolynomial(terms), _SHIFTED)
            shift = 1 if i == 1 else 0
            if i > 2:
                raise StateError(f"z-degree {i} on a torus graph")
            for d, c in piece.items():
                total[d + shift] = total.get(d + shift, 0) + c
        lhs = laurent_to_poly(total)

    if lhs != rhs:
        return _bad(name, f"on the {kind}: {lhs} != {rhs}")
    return _ok(name, kind)


# ---------------------------------------------------------------------------
# the full sweep


def run_state_checks(rs: rb.RotationSystem, *, sweep_cap: int = STATE_SWEEP_CAP,
                     cap: int = poly.EXPANSION_CAP) -> list[CheckResult]:
    """Every state-level check that applies to one ribbon graph.

    Needs an ordinary (pinch-free) connected ribbon graph with at
    least one edge, the medial preconditions.
    """
    rb.require_pinch_free(rs, "state checks")
    if not rs.signs:
        raise StateError("state checks need at least one edge")
    if mg.components(rs.underlying(), rs.edge_set()) != 1:
        raise StateError("state checks need a connected graph")
    edges = rs.edges
    check_cap(len(edges), sweep_cap, "the full state sweep")

    out: list[CheckResult] = []
    mm = rb.medial(rs)

    low_genus = True
    try:
        kind = surface_kind(rs)
    except GenusRangeError as exc:
        low_genus = False
        gate_detail = str(exc)

    name = "state-tracer-agreement"
    bad_detail = None
    for combo in itertools.product(rb.STATE_NAMES, repeat=len(edges)):
        state = dict(zip(edges, combo))
        direct = medial_state_components(mm, state)
        via_graph = state_components(rs, state)
        if direct != via_graph:
            bad_detail = (f"state {combo} on edges {list(edges)}: medial "
                          f"{direct}, graph {via_graph}")
            break
        if CROSSING not in combo:
            report = lv_component_formula(rs, state)
            if report.formula_value != direct:
                bad_detail = (f"state {combo}: Euler formula "
                              f"{report.formula_value}, medial {direct}")
                break
    out.append(_bad(name, bad_detail) if bad_detail else _ok(name))

    name = "noncrossing-min-formula"
    if not low_genus:
        out.append(_skip(name, gate_detail))
    else:
        bad_detail = None
        for w in poly._subsets(edges):
            state = {e: (WHITE if e in w else BLACK) for e in edges}
            report = lv_component_formula(rs, state)
            if not report.agrees:
                bad_detail = (f"white set {sorted(w)}: minimum "
                              f"{report.min_form_value}, curves "
                              f"{report.components}")
                break
        out.append(_bad(name, bad_detail) if bad_detail else _ok(name, kind))

    out.append(generating_function_check(rs, cap))

    if low_genus:
        out.append(lr_relation(rs, cap))
    else:
        out.append(_skip("lr-relation", gate_detail))

    name = "quasi-tree-duality"
    bad_detail = None
    g = rs.underlying()
    dual_g = rb.dual(rs).underlying()
    for a in poly._subsets(edges):
        report = quasi_tree_duality(rs, a)
        if report.quasi_tree != report.dual_quasi_tree:
            bad_detail = f"deleted {sorted(a)}: duality breaks"
            break
        if report.genus_identity is False:
            bad_detail = f"deleted {sorted(a)}: genus identity fails"
            break
        if low_genus:
            kept = rs.edge_set() - a
            trees = (_is_spanning_tree(g, kept) or _is_spanning_tree(dual_g, a))
            if report.quasi_tree != trees:
                bad_detail = (f"deleted {sorted(a)}: quasi-tree {report.quasi_tree} "
                              f"but spanning-tree dichotomy says {trees}")
                break
    out.append(_bad(name, bad_detail) if bad_detail else _ok(name))
    return out
