"""Plain-text exchange format for embedded graphs.

    # comments run to the end of the line
    vertex 1: sector (1.0 2.0 3.0)
    vertex 2: sector (1.1 2.1 3.1)
    edge 1: 1 2 sign +
    edge 2: 1 2 sign +
    edge 3: 1 2 sign +
    region 0: genus 0 circles 0
    cellular

A half-edge token is edge.end with end 0 or 1.  A vertex may list
several sectors (a pinch point); an isolated vertex is "sector ()".
Edge lines restate the endpoints, 0-end first, and carry the sign.
Region lines glue the numbered boundary circles of the full trace
(see the trace command) onto a region of the given genus.  The single
keyword "cellular" glues a disc onto every circle instead of explicit
region lines.  With neither, the file describes a bare rotation
system.  All parse errors carry the offending line number.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import embedding as em
from . import ribbon as rb

_VERTEX = re.compile(r"vertex\s+(\d+)\s*:\s*(.*)")
_SECTOR = re.compile(r"sector\s*\(([^()]*)\)")
_HALF = re.compile(r"(\d+)\.([01])")
_EDGE = re.compile(r"edge\s+(\d+)\s*:\s*(\d+)\s+(\d+)\s+sign\s+([+-])")
_REGION = re.compile(r"region\s+(\d+)\s*:\s*genus\s+(-?\d+)\s+circles\s+([\d,\s]+)")


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class ParsedInput:
    """A rotation system, plus the embedding when region data was given."""

    rotation: rb.RotationSystem
    embedded: em.EmbeddedGraph | None

    def require_embedded(self) -> em.EmbeddedGraph:
        if self.embedded is None:
            raise FormatError("this input has no region lines and no "
                              "'cellular' keyword")
        return self.embedded


def _fail(lineno: int, msg: str):
    raise FormatError(f"line {lineno}: {msg}")


def parse(text: str) -> ParsedInput:
    sectors: dict[int, tuple] = {}
    signs: dict[int, int] = {}
    declared_ends: dict[int, tuple[int, int]] = {}
    edge_line: dict[int, int] = {}
    region_rows: list[tuple[int, int, int, list[int]]] = []  # line, id, genus, circles
    cellular_line = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "cellular":
            if cellular_line is not None:
                _fail(lineno, "duplicate 'cellular' keyword")
            cellular_line = lineno
            continue
        m = _VERTEX.fullmatch(line)
        if m:
            v = int(m.group(1))
            if v in sectors:
                _fail(lineno, f"vertex {v} declared twice")
            rest = m.group(2)
            groups = _SECTOR.findall(rest)
            if _SECTOR.sub("", rest).strip():
                _fail(lineno, "vertex line has text outside sector (...) groups")
            if not groups:
                _fail(lineno, f"vertex {v} needs at least one sector")
            secs = []
            for grp in groups:
                halves = []
                for tok in grp.split():
                    hm = _HALF.fullmatch(tok)
                    if not hm:
                        _fail(lineno, f"bad half-edge token '{tok}' "
                                      "(expected edge.end with end 0 or 1)")
                    halves.append((int(hm.group(1)), int(hm.group(2))))
                secs.append(tuple(halves))
            sectors[v] = tuple(secs)
            continue
        m = _EDGE.fullmatch(line)
        if m:
            e = int(m.group(1))
            if e in signs:
                _fail(lineno, f"edge {e} declared twice")
            signs[e] = 1 if m.group(4) == "+" else -1
            declared_ends[e] = (int(m.group(2)), int(m.group(3)))
            edge_line[e] = lineno
            continue
        m = _REGION.fullmatch(line)
        if m:
            r = int(m.group(1))
            genus = int(m.group(2))
            if genus < 0:
                _fail(lineno, f"region {r} has negative genus {genus}")
            circles = [int(tok) for tok in m.group(3).split(",") if tok.strip()]
            if not circles:
                _fail(lineno, f"region {r} lists no circles")
            if any(r == row[1] for row in region_rows):
                _fail(lineno, f"region {r} declared twice")
            region_rows.append((lineno, r, genus, circles))
            continue
        _fail(lineno, f"unrecognised line '{line}'")

    if not sectors:
        raise FormatError("no vertex lines")
    if cellular_line is not None and region_rows:
        _fail(cellular_line, "'cellular' cannot be combined with region lines")

    placed: dict[tuple[int, int], int] = {}
    for v, secs in sectors.items():
        for sec in secs:
            for h in sec:
                if h in placed:
                    raise FormatError(
                        f"half-edge {h[0]}.{h[1]} placed twice (vertex {placed[h]} "
                        f"and vertex {v})")
                placed[h] = v
    for e in signs:
        for end in (0, 1):
            if (e, end) not in placed:
                _fail(edge_line[e], f"half-edge {e}.{end} appears in no sector")
        actual = (placed[(e, 0)], placed[(e, 1)])
        if actual != declared_ends[e]:
            _fail(edge_line[e],
                  f"edge {e} declares ends {declared_ends[e][0]} "
                  f"{declared_ends[e][1]} but its half-edges sit at "
                  f"{actual[0]} {actual[1]}")
    for (e, _end), v in placed.items():
        if e not in signs:
            raise FormatError(f"vertex {v} references undeclared edge {e}")

    try:
        rotation = rb.RotationSystem(sectors, signs)
    except rb.RibbonError as exc:
        raise FormatError(str(exc)) from exc

    if cellular_line is not None:
        return ParsedInput(rotation, em.with_disc_regions(rotation))
    if not region_rows:
        return ParsedInput(rotation, None)

    f = rb.trace_boundary(rotation).f
    regions: dict[int, int] = {}
    region_genus: dict[int, int] = {}
    for lineno, r, genus, circles in region_rows:
        region_genus[r] = genus
        for c in circles:
            if not 0 <= c < f:
                _fail(lineno, f"region {r} lists circle {c}, but the trace has "
                              f"circles 0..{f - 1}")
            if c in regions:
                _fail(lineno, f"circle {c} is glued to region {regions[c]} "
                              f"and region {r}")
            regions[c] = r
    for c in range(f):
        if c not in regions:
            raise FormatError(f"circle {c} of the trace is not covered by any region")
    try:
        embedded = em.EmbeddedGraph(rotation, regions, region_genus)
    except em.EmbeddingError as exc:
        raise FormatError(str(exc)) from exc
    return ParsedInput(rotation, embedded)


def serialize(x) -> str:
    """Canonical text for an EmbeddedGraph or a bare RotationSystem."""
    if isinstance(x, em.EmbeddedGraph):
        rotation, embedded = x.rotation, x
    else:
        rotation, embedded = x, None
    lines = []
    for v in rotation.vertices:
        secs = " ".join(
            "sector (" + " ".join(f"{e}.{end}" for e, end in sec) + ")"
            for sec in rotation.sectors[v])
        lines.append(f"vertex {v}: {secs}")
    for e in rotation.edges:
        u, w = rotation.ends[e]
        sgn = "+" if rotation.signs[e] > 0 else "-"
        lines.append(f"edge {e}: {u} {w} sign {sgn}")
    if embedded is not None:
        for r in sorted(embedded.region_genus):
            circles = sorted(c for c, rr in embedded.regions.items() if rr == r)
            lines.append(f"region {r}: genus {embedded.region_genus[r]} "
                         f"circles {','.join(str(c) for c in circles)}")
    return "\n".join(lines) + "\n"
