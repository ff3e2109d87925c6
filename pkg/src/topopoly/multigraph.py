"""Abstract multigraphs with stable integer ids.

Vertices and edges are small integers chosen by the caller (insertion
order by convention).  Loops and parallel edges are allowed.  Values are
immutable: minors return new graphs and never renumber surviving edges,
so an edge keeps its id through any chain of deletions and contractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


class DisjointSets:
    """Union-find over an arbitrary fixed set of hashable items."""

    def __init__(self, items: Iterable):
        self._parent = {item: item for item in items}
        self._count = len(self._parent)

    def find(self, item):
        parent = self._parent
        root = item
        while parent[root] != root:
            root = parent[root]
        while parent[item] != root:
            parent[item], item = root, parent[item]
        return root

    def union(self, a, b) -> bool:
        """Merge the classes of a and b; True if they were distinct."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self._parent[ra] = rb
        self._count -= 1
        return True

    @property
    def count(self) -> int:
        return self._count


@dataclass(frozen=True)
class Multigraph:
    """An abstract multigraph.

    ends maps each edge id to its (unordered) endpoint pair; a loop has
    both entries equal.  Isolated vertices are legal and must be listed
    in `vertices`.
    """

    vertices: tuple[int, ...]
    ends: Mapping[int, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "ends", dict(self.ends))
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertex id")
        for e, (u, v) in self.ends.items():
            if u not in vset or v not in vset:
                raise ValueError(f"edge {e} has endpoint outside the vertex set")

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.ends))

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.ends)

    def is_loop(self, e: int) -> bool:
        u, v = self.ends[e]
        return u == v

    def incident(self, v: int) -> list[int]:
        """Edge ids incident to v; loops appear once."""
        return [e for e, (a, b) in self.ends.items() if v in (a, b)]

    def __repr__(self):
        ends = ", ".join(f"{e}:{uv}" for e, uv in sorted(self.ends.items()))
        return f"Multigraph(v={list(self.vertices)}, ends={{{ends}}})"


def components(g: Multigraph, a: Iterable[int] | None = None) -> int:
    """Number of components of the spanning subgraph (V, A).

    With a=None the full edge set is used.  All vertices of g count,
    including isolated ones.
    """
    a = g.edge_set() if a is None else frozenset(a)
    ds = DisjointSets(g.vertices)
    for e in a:
        u, v = g.ends[e]
        ds.union(u, v)
    return ds.count


def rank(g: Multigraph, a: Iterable[int] | None = None) -> int:
    """Graph rank r(A) = v(G) - c(A) of the spanning subgraph (V, A)."""
    return len(g.vertices) - components(g, a)


def nullity(g: Multigraph, a: Iterable[int] | None = None) -> int:
    """Nullity n(A) = |A| - r(A)."""
    a = g.edge_set() if a is None else frozenset(a)
    return len(a) - rank(g, a)


def is_bridge(g: Multigraph, e: int) -> bool:
    """True iff deleting e increases the component count."""
    rest = g.edge_set() - {e}
    return components(g, rest) == components(g) + 1


def delete_edge(g: Multigraph, e: int) -> Multigraph:
    if e not in g.ends:
        raise KeyError(f"no edge {e}")
    ends = dict(g.ends)
    del ends[e]
    return Multigraph(g.vertices, ends)


def contract_edge(g: Multigraph, e: int) -> Multigraph:
    """Contract e; for a loop this is the same as deletion.

    The surviving merged vertex keeps the smaller of the two endpoint
    ids.  Edge ids never change.
    """
    if e not in g.ends:
        raise KeyError(f"no edge {e}")
    u, v = g.ends[e]
    if u == v:
        return delete_edge(g, e)
    keep, drop = min(u, v), max(u, v)
    ends = {}
    for f, (a, b) in g.ends.items():
        if f == e:
            continue
        a = keep if a == drop else a
        b = keep if b == drop else b
        ends[f] = (a, b)
    vertices = tuple(w for w in g.vertices if w != drop)
    return Multigraph(vertices, ends)


def id_respecting_isomorphism(g1: Multigraph, g2: Multigraph) -> dict | None:
    """Vertex bijection g1 -> g2 sending each edge id onto the same id.

    Edge ids must coincide and every edge must keep its endpoint pair
    (as an unordered pair).  Returns one such bijection, or None.
    Backtracking with degree pruning; meant for small graphs.
    """
    if g1.edge_set() != g2.edge_set() or len(g1.vertices) != len(g2.vertices):
        return None

    def profile(g):
        deg = {v: 0 for v in g.vertices}
        loops = {v: 0 for v in g.vertices}
        for u, w in g.ends.values():
            deg[u] += 1
            deg[w] += 1
            if u == w:
                loops[u] += 1
        return deg, loops

    deg1, loops1 = profile(g1)
    deg2, loops2 = profile(g2)
    if sorted(zip(deg1.values(), loops1.values())) != \
            sorted(zip(deg2.values(), loops2.values())):
        return None

    order = sorted(g1.vertices, key=lambda v: (-deg1[v], v))
    edges_at1 = {v: [] for v in g1.vertices}
    for e, (u, w) in g1.ends.items():
        edges_at1[u].append(e)
        if w != u:
            edges_at1[w].append(e)

    assign: dict = {}
    used: set = set()

    def feasible(v, cand):
        for e in edges_at1[v]:
            a, b = g1.ends[e]
            c, d = g2.ends[e]
            img = {assign.get(a), assign.get(b)}
            img.discard(None)
            if v == a == b:
                if {c, d} != {cand}:
                    return False
            elif not img <= {c, d} or cand not in {c, d}:
                return False
            other = a if b == v else b
            if other in assign and {assign[other], cand} != {c, d}:
                return False
        return True

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for cand in g2.vertices:
            if cand in used or deg2[cand] != deg1[v] or loops2[cand] != loops1[v]:
                continue
            if not feasible(v, cand):
                continue
            assign[v] = cand
            used.add(cand)
            if extend(i + 1):
                return True
            del assign[v]
            used.discard(cand)
        return False

    return dict(assign) if extend(0) else None
