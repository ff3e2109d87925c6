"""Ribbon graphs as signed rotation systems, with vertex sectors.

A rotation system stores, for every vertex, one or more sectors: each
sector is a cyclic order of half-edges around one disc.  A vertex with
a single sector is an ordinary ribbon-graph vertex; a vertex with
several sectors is a pinch point whose discs meet only at that point.
Every edge carries a sign, +1 for an untwisted band and -1 for a
half-twisted one.  A half-edge is the pair (edge id, end in {0, 1}).

Boundary tracing works on "corner points": each band has four of them,
(edge, end, io) with io 0 for in and 1 for out.  Two involutions move
between corner points.  Within a sector, kappa joins the out point of
a half-edge to the in point of the next present half-edge.  Along a
band, beta joins the points at the two ends, crosswise for sign +1 and
straight for sign -1:

    sign +1:  (e,0,in) <-> (e,1,out)    (e,0,out) <-> (e,1,in)
    sign -1:  (e,0,in) <-> (e,1,in)     (e,0,out) <-> (e,1,out)

The boundary circles of the surface built from one disc per sector and
one band per edge are the orbits alternating beta and kappa.  Tracing
a subset of the edges erases the other bands but keeps every disc; a
sector left without half-edges still bounds one circle.

On top of the tracer sit Euler genus, the geometric dual, partial
petrials (band twists), quasi-tree detection, orientability, the
medial map with its per-vertex smoothing pairings, and the sector
surgery (disc flips and non-loop contraction) used for topological
minors.  Circles are numbered canonically, so traces are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import multigraph as mg

Half = tuple[int, int]          # (edge id, end 0|1)
Point = tuple[int, int, int]    # (edge id, end 0|1, io 0=in|1=out)
Sector = tuple[Half, ...]
Home = tuple[int, int]          # (vertex id, sector index)

IN, OUT = 0, 1
LEFT, RIGHT = 0, 1


class RibbonError(ValueError):
    pass


@dataclass(frozen=True)
class RotationSystem:
    """Signed rotation system; sectors[v] lists the discs at vertex v."""

    sectors: Mapping[int, tuple[Sector, ...]]
    signs: Mapping[int, int]
    ends: Mapping[int, tuple[int, int]] = field(init=False, repr=False)
    half_home: Mapping[Half, Home] = field(init=False, repr=False)

    def __post_init__(self):
        sectors = {}
        for v, secs in self.sectors.items():
            secs = tuple(tuple((int(e), int(end)) for e, end in sec) for sec in secs)
            if not secs:
                raise RibbonError(f"vertex {v} has no sectors")
            sectors[int(v)] = secs
        signs = {int(e): int(s) for e, s in self.signs.items()}
        if any(s not in (1, -1) for s in signs.values()):
            raise RibbonError("edge signs must be +1 or -1")
        half_home: dict[Half, Home] = {}
        for v in sectors:
            for k, sec in enumerate(sectors[v]):
                for h in sec:
                    e, end = h
                    if e not in signs or end not in (0, 1):
                        raise RibbonError(f"stray half-edge {h} at vertex {v}")
                    if h in half_home:
                        raise RibbonError(f"half-edge {h} placed twice")
                    half_home[h] = (v, k)
        ends = {}
        for e in signs:
            if (e, 0) not in half_home or (e, 1) not in half_home:
                raise RibbonError(f"edge {e} is missing an end")
            ends[e] = (half_home[(e, 0)][0], half_home[(e, 1)][0])
        object.__setattr__(self, "sectors", sectors)
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "ends", ends)
        object.__setattr__(self, "half_home", half_home)

    @staticmethod
    def single(rotations: Mapping[int, Sequence[Half]],
               signs: Mapping[int, int]) -> "RotationSystem":
        """Build an ordinary (pinch-free) system, one sector per vertex."""
        return RotationSystem({v: (tuple(rot),) for v, rot in rotations.items()},
                              signs)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.sectors))

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.signs))

    def edge_set(self) -> frozenset:
        return frozenset(self.signs)

    def is_loop(self, e: int) -> bool:
        u, w = self.ends[e]
        return u == w

    def rotation(self, v: int) -> Sector:
        secs = self.sectors[v]
        if len(secs) != 1:
            raise RibbonError(f"vertex {v} is a pinch point")
        return secs[0]

    def pinch_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if len(self.sectors[v]) > 1)

    def underlying(self) -> mg.Multigraph:
        return mg.Multigraph(self.vertices, dict(self.ends))

    def __repr__(self):
        parts = []
        for v in self.vertices:
            secs = " ".join("(" + " ".join(f"{e}.{end}" for e, end in sec) + ")"
                            for sec in self.sectors[v])
            parts.append(f"{v}: {secs}")
        sgn = "".join("+" if self.signs[e] > 0 else "-" for e in self.edges)
        return f"RotationSystem({'; '.join(parts)} | {sgn})"


def require_pinch_free(g: RotationSystem, what: str) -> None:
    pinched = g.pinch_vertices()
    if pinched:
        raise RibbonError(f"{what} needs an ordinary ribbon graph; "
                          f"vertex {pinched[0]} is a pinch point")


# ---------------------------------------------------------------------------
# boundary tracing


@dataclass(frozen=True)
class Circle:
    """One boundary circle.

    visits lists corner points in traversal order, starting at the
    smallest point and leaving along the band first.  It is empty for
    the circle around a sector with no surviving half-edges, in which
    case home names that (vertex, sector index).  sides lists the band
    sides walked, as (edge, LEFT|RIGHT) pairs, and entry_ends the end
    (0 or 1) at which each side was entered.
    """

    visits: tuple[Point, ...]
    sides: tuple[tuple[int, int], ...]
    entry_ends: tuple[int, ...]
    home: Home | None = None

    def visit_set(self) -> frozenset:
        return frozenset(self.visits)


@dataclass(frozen=True)
class BoundaryTrace:
    circles: tuple[Circle, ...]
    side_circle: Mapping[tuple[int, int], int]
    side_entry_end: Mapping[tuple[int, int], int]

    @property
    def f(self) -> int:
        return len(self.circles)

    def circle_of_point(self) -> dict[Point, int]:
        return {p: i for i, c in enumerate(self.circles) for p in c.visits}

    def circle_of_home(self) -> dict[Home, int]:
        return {c.home: i for i, c in enumerate(self.circles) if c.home is not None}


def _beta(e: int, end: int, io: int, sign: int) -> Point:
    if sign > 0:
        return (e, 1 - end, 1 - io)
    return (e, 1 - end, io)


def _side_of(point: Point, sign: int) -> int:
    # The left side is the beta pair through (e, 0, in).
    e, end, io = point
    if end == 0:
        return LEFT if io == IN else RIGHT
    if sign > 0:
        return LEFT if io == OUT else RIGHT
    return LEFT if io == IN else RIGHT


def trace_sectors(sectors: Sequence[tuple[Home, Sector]],
                  signs: Mapping[int, int],
                  subset: frozenset) -> BoundaryTrace:
    """Trace the boundary circles of the bands in subset over the given
    discs.  Each disc is (home, cyclic half-edge order)."""
    kappa: dict[Point, Point] = {}
    empty_homes = []
    for home, rot in sectors:
        present = [h for h in rot if h[0] in subset]
        if not present:
            empty_homes.append(home)
            continue
        k = len(present)
        for i, h in enumerate(present):
            nxt = present[(i + 1) % k]
            kappa[(h[0], h[1], OUT)] = (nxt[0], nxt[1], IN)
            kappa[(nxt[0], nxt[1], IN)] = (h[0], h[1], OUT)

    unvisited = set(kappa)
    circles: list[Circle] = []
    while unvisited:
        start = min(unvisited)
        visits: list[Point] = []
        sides: list[tuple[int, int]] = []
        entry_ends: list[int] = []
        p = start
        while True:
            visits.append(p)
            unvisited.discard(p)
            e, end, io = p
            sides.append((e, _side_of(p, signs[e])))
            entry_ends.append(end)
            q = _beta(e, end, io, signs[e])
            visits.append(q)
            unvisited.discard(q)
            p = kappa[q]
            if p == start:
                break
        circles.append(Circle(tuple(visits), tuple(sides), tuple(entry_ends)))

    # Discovery order is already by smallest point; empty discs go last.
    for home in sorted(empty_homes):
        circles.append(Circle((), (), (), home=home))

    side_circle: dict[tuple[int, int], int] = {}
    side_entry: dict[tuple[int, int], int] = {}
    for idx, c in enumerate(circles):
        for side, entry in zip(c.sides, c.entry_ends):
            side_circle[side] = idx
            side_entry[side] = entry
    return BoundaryTrace(tuple(circles), side_circle, side_entry)


def all_sectors(g: RotationSystem) -> list[tuple[Home, Sector]]:
    return [((v, k), sec)
            for v in g.vertices
            for k, sec in enumerate(g.sectors[v])]


def trace_boundary(g: RotationSystem,
                   subset: Iterable[int] | None = None) -> BoundaryTrace:
    a = g.edge_set() if subset is None else frozenset(subset)
    if not a <= g.edge_set():
        raise RibbonError(f"subset {sorted(set(a) - g.edge_set())} not among the edges")
    return trace_sectors(all_sectors(g), g.signs, a)


def boundary_count(g: RotationSystem, subset: Iterable[int] | None = None) -> int:
    return trace_boundary(g, subset).f


def euler_genus(g: RotationSystem, subset: Iterable[int] | None = None) -> int:
    """Euler genus of the surface spanned by the discs and the bands of
    the subset: 2c - v + |A| - f."""
    a = g.edge_set() if subset is None else frozenset(subset)
    f = trace_boundary(g, a).f
    c = mg.components(g.underlying(), a)
    return 2 * c - len(g.sectors) + len(a) - f


def is_orientable(g: RotationSystem, subset: Iterable[int] | None = None) -> bool:
    """True iff the spanned surface is orientable: no band cycle gives a
    disc an inconsistent orientation (parity union-find over sectors;
    sectors of a pinch vertex are independent discs)."""
    a = g.edge_set() if subset is None else frozenset(subset)
    homes = [home for home, _ in all_sectors(g)]
    parent: dict[Home, Home] = {h: h for h in homes}
    parity = {h: 0 for h in homes}

    def find(h):
        trail = []
        while parent[h] != h:
            trail.append(h)
            h = parent[h]
        p = 0
        for u in reversed(trail):
            p ^= parity[u]
            parent[u] = h
            parity[u] = p
        return h

    for e in sorted(a):
        hu = g.half_home[(e, 0)]
        hw = g.half_home[(e, 1)]
        want = 0 if g.signs[e] > 0 else 1
        ru, rw = find(hu), find(hw)
        if ru == rw:
            if (parity[hu] ^ parity[hw]) != want:
                return False
        else:
            parent[ru] = rw
            parity[ru] = parity[hu] ^ parity[hw] ^ want
    return True


def is_quasi_tree(g: RotationSystem, subset: Iterable[int]) -> bool:
    """True iff the spanning ribbon subgraph on the subset is connected
    with exactly one boundary circle."""
    a = frozenset(subset)
    return (mg.components(g.underlying(), a) == 1
            and trace_boundary(g, a).f == 1)


# ---------------------------------------------------------------------------
# duality and petriality


def dual(g: RotationSystem) -> RotationSystem:
    """Geometric dual: one vertex per boundary circle, edges kept by id.

    The rotation of a dual vertex reads off the band sides its circle
    walks, the left side giving end 0 and the right side end 1.  A dual
    band is untwisted exactly when the two sides of the primal band are
    entered at opposite ends.  Circles around empty discs give isolated
    dual vertices.
    """
    require_pinch_free(g, "the geometric dual")
    bt = trace_boundary(g)
    rotations = {}
    for idx, c in enumerate(bt.circles):
        rotations[idx] = tuple((e, 0) if s == LEFT else (e, 1) for e, s in c.sides)
    signs = {}
    for e in g.edges:
        opposite = bt.side_entry_end[(e, LEFT)] != bt.side_entry_end[(e, RIGHT)]
        signs[e] = 1 if opposite else -1
    return RotationSystem.single(rotations, signs)


def twist(g: RotationSystem, edges: Iterable[int]) -> RotationSystem:
    """Partial petrial: give each listed band an extra half-twist."""
    flip = frozenset(edges)
    if not flip <= g.edge_set():
        raise RibbonError("twisting an absent edge")
    signs = {e: (-s if e in flip else s) for e, s in g.signs.items()}
    return RotationSystem(g.sectors, signs)


def delete_edge(g: RotationSystem, e: int) -> RotationSystem:
    """Remove the band of e; every disc stays."""
    if e not in g.signs:
        raise RibbonError(f"no edge {e}")
    sectors = {v: tuple(tuple(h for h in sec if h[0] != e) for sec in secs)
               for v, secs in g.sectors.items()}
    signs = {k: s for k, s in g.signs.items() if k != e}
    return RotationSystem(sectors, signs)


# -- sector surgery ---------------------------------------------------------
#
# flip_sector and contract_nonloop return the surgered system together
# with the corner-point relabelling they induce, so callers tracking
# circle identities (region bookkeeping) can transport them.


@dataclass(frozen=True)
class Surgery:
    system: "RotationSystem"
    point_map: Mapping[Point, Point]    # surviving old point -> new point
    home_map: Mapping[Home, Home]       # surviving old sector -> new sector
    fresh_home: Home | None = None      # spliced sector, when it came out empty


def _identity_points(g: RotationSystem) -> dict[Point, Point]:
    out = {}
    for h in g.half_home:
        for io in (IN, OUT):
            p = (h[0], h[1], io)
            out[p] = p
    return out


def flip_sector(g: RotationSystem, v: int, k: int) -> Surgery:
    """Reflect one disc.  Its cyclic order reverses, each edge with
    exactly one half-edge on the disc changes sign, and the in/out
    corners of the disc's half-edges swap."""
    if v not in g.sectors or not 0 <= k < len(g.sectors[v]):
        raise RibbonError(f"no sector {k} at vertex {v}")
    target = g.sectors[v][k]
    in_target = set(target)
    sectors = {u: tuple(tuple(reversed(sec)) if (u == v and i == k) else sec
                        for i, sec in enumerate(secs))
               for u, secs in g.sectors.items()}
    signs = dict(g.signs)
    for e in g.signs:
        halves_inside = ((e, 0) in in_target) + ((e, 1) in in_target)
        if halves_inside == 1:
            signs[e] = -signs[e]
    point_map = _identity_points(g)
    for h in in_target:
        for io in (IN, OUT):
            point_map[(h[0], h[1], io)] = (h[0], h[1], 1 - io)
    home_map = {home: home for home, _ in all_sectors(g)}
    return Surgery(RotationSystem(sectors, signs), point_map, home_map)


def contract_nonloop(g: RotationSystem, e: int) -> Surgery:
    """Contract a non-loop band by merging its end discs.

    A -1 band is first normalised by flipping the disc at its end-1
    side.  The merged vertex keeps the smaller id; its sector list is
    the end-0 vertex's with the spliced disc in place, followed by the
    other vertex's remaining sectors.  Boundary circles are preserved.
    """
    if e not in g.signs:
        raise RibbonError(f"no edge {e}")
    if g.is_loop(e):
        raise RibbonError(f"edge {e} is a loop; only non-loop bands contract here")

    pre_points = _identity_points(g)
    pre_homes = {home: home for home, _ in all_sectors(g)}
    if g.signs[e] < 0:
        wv, wk = g.half_home[(e, 1)]
        flip = flip_sector(g, wv, wk)
        g = flip.system
        pre_points = {p: flip.point_map[p] for p in pre_points}

    (u, uk) = g.half_home[(e, 0)]
    (w, wk) = g.half_home[(e, 1)]
    keep, gone = (u, w) if u < w else (w, u)
    su = g.sectors[u][uk]
    sw = g.sectors[w][wk]
    i = su.index((e, 0))
    j = sw.index((e, 1))
    spliced = su[:i] + sw[j + 1:] + sw[:j] + su[i + 1:]

    merged: list[Sector] = []
    home_map: dict[Home, Home] = {}
    for k, sec in enumerate(g.sectors[u]):
        if k == uk:
            spliced_idx = len(merged)
            merged.append(spliced)
        else:
            home_map[(u, k)] = (keep, len(merged))
            merged.append(sec)
    for k, sec in enumerate(g.sectors[w]):
        if k == wk:
            continue
        home_map[(w, k)] = (keep, len(merged))
        merged.append(sec)
    for vv in g.sectors:
        if vv in (u, w):
            continue
        for k in range(len(g.sectors[vv])):
            home_map[(vv, k)] = (vv, k)

    sectors = {vv: secs for vv, secs in g.sectors.items() if vv not in (u, w)}
    sectors[keep] = tuple(merged)
    signs = {k: s for k, s in g.signs.items() if k != e}
    system = RotationSystem(sectors, signs)

    point_map = {p: q for p, q in pre_points.items() if p[0] != e}
    fresh = (keep, spliced_idx) if not spliced else None
    return Surgery(system, point_map, home_map, fresh)


def contract_edge(g: RotationSystem, e: int) -> RotationSystem:
    return contract_nonloop(g, e).system


# ---------------------------------------------------------------------------
# medial map

BLACK, WHITE, CROSSING = "black", "white", "crossing"
STATE_NAMES = (BLACK, WHITE, CROSSING)


@dataclass(frozen=True)
class MedialMap:
    """The medial of a connected ribbon graph, with smoothing data.

    medial has one 4-valent vertex per original edge (ids are reused)
    and one edge per corner of the original graph.  corners records
    each corner as (vertex, from half-edge, to half-edge).  pairings
    stores, per medial vertex, how its four half-edges pair up under
    the black, white and crossing smoothings.
    """

    medial: RotationSystem
    corners: Mapping[int, tuple[int, Half, Half]]
    pairings: Mapping[int, Mapping[str, tuple[tuple[Half, Half], tuple[Half, Half]]]]


def medial(g: RotationSystem) -> MedialMap:
    require_pinch_free(g, "the medial graph")
    if not g.signs:
        raise RibbonError("medial of an edgeless graph is empty")
    if mg.components(g.underlying(), g.edge_set()) != 1:
        raise RibbonError("medial construction expects a connected graph")

    # One corner per consecutive pair of the rotation; a 1-valent
    # vertex gives the corner (h -> h).
    corners: dict[int, tuple[int, Half, Half]] = {}
    stub_half: dict[tuple[Half, int], Half] = {}
    cid = 0
    for v in g.vertices:
        rot = g.rotation(v)
        d = len(rot)
        for i in range(d):
            h_from, h_to = rot[i], rot[(i + 1) % d]
            corners[cid] = (v, h_from, h_to)
            stub_half[(h_from, OUT)] = (cid, 0)
            stub_half[(h_to, IN)] = (cid, 1)
            cid += 1

    def agree(h: Half) -> bool:
        return h[1] == 0 or g.signs[h[0]] > 0

    med_signs = {}
    for c, (_, h_from, h_to) in corners.items():
        med_signs[c] = 1 if agree(h_from) == agree(h_to) else -1

    rotations = {}
    pairings = {}
    for e in g.edges:
        h, hp = (e, 0), (e, 1)
        if g.signs[e] > 0:
            stubs = [(h, IN), (h, OUT), (hp, IN), (hp, OUT)]
            white = (((h, IN), (hp, OUT)), ((h, OUT), (hp, IN)))
            crossing = (((h, IN), (hp, IN)), ((h, OUT), (hp, OUT)))
        else:
            stubs = [(h, IN), (h, OUT), (hp, OUT), (hp, IN)]
            white = (((h, IN), (hp, IN)), ((h, OUT), (hp, OUT)))
            crossing = (((h, IN), (hp, OUT)), ((h, OUT), (hp, IN)))
        black = (((h, IN), (h, OUT)), ((hp, IN), (hp, OUT)))
        rotations[e] = tuple(stub_half[s] for s in stubs)
        pairings[e] = {
            BLACK: tuple((stub_half[a], stub_half[b]) for a, b in black),
            WHITE: tuple((stub_half[a], stub_half[b]) for a, b in white),
            CROSSING: tuple((stub_half[a], stub_half[b]) for a, b in crossing),
        }

    med = RotationSystem.single(rotations, med_signs)
    return MedialMap(med, corners, pairings)


def medial_faces(mm: MedialMap) -> tuple[dict[int, tuple[int, ...]],
                                         list[tuple[int, ...]]]:
    """Checkerboard-colour the faces of the medial.

    Returns (black, white): black maps each original vertex to the
    cyclic sequence of medial vertices its face walks; white lists the
    same sequences for the remaining faces.  A face is black iff every
    pass it makes through a medial vertex stays on one original
    half-edge, white iff no pass does; anything else is an error.
    """
    bt = trace_boundary(mm.medial)
    black: dict[int, tuple[int, ...]] = {}
    white: list[tuple[int, ...]] = []
    corner_vertex = {c: v for c, (v, _, _) in mm.corners.items()}

    def stub(point):
        c, end = point[0], point[1]
        _v, from_half, to_half = mm.corners[c]
        return (from_half, OUT) if end == 0 else (to_half, IN)

    for circle in bt.circles:
        # The walk alternates arcs along corner edges with passes
        # through medial vertices; a pass joins visits 2i+1 and 2i+2.
        # It stays inside the black face iff the two corner-edge stubs
        # it joins hang off the same original half-edge.
        n = len(circle.visits)
        stations = []
        colours = set()
        owners = set()
        for i in range(1, n + 1, 2):
            a = circle.visits[i]
            b = circle.visits[(i + 1) % n]
            ha, hb = stub(a)[0], stub(b)[0]
            if ha[0] != hb[0]:
                raise RibbonError("pass jumps between medial vertices")
            stations.append(ha[0])
            colours.add(ha == hb)
            owners.add(corner_vertex[a[0]])
        if len(colours) != 1:
            raise RibbonError("face mixes black and white passes")
        stations = tuple(stations)
        if colours.pop():
            if len(owners) != 1:
                raise RibbonError("black face spans several vertices")
            v = owners.pop()
            if v in black:
                raise RibbonError(f"two black faces claim vertex {v}")
            black[v] = stations
        else:
            white.append(stations)
    return black, white


def cyclic_forms_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    """Equality of cyclic words up to rotation and reflection."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = b + b
    rev = tuple(reversed(doubled))
    return any(doubled[i:i + len(a)] == a or rev[i:i + len(a)] == a
               for i in range(len(b)))


# ---------------------------------------------------------------------------
# comparison helper


def same_boundary_profile(g1: RotationSystem, g2: RotationSystem,
                          max_edges: int = 12) -> bool:
    """True iff both systems have the same edge ids and identical
    boundary counts on every edge subset.  Exponential; capped."""
    if g1.edge_set() != g2.edge_set():
        return False
    edges = g1.edges
    if len(edges) > max_edges:
        raise RibbonError(f"profile comparison capped at {max_edges} edges")
    for size in range(len(edges) + 1):
        for a in itertools.combinations(edges, size):
            if trace_boundary(g1, a).f != trace_boundary(g2, a).f:
                return False
    return True
