"""Embedded planar multigraphs and their oriented doubles.

A graph is given together with a drawing: every vertex has a position and
every edge is a polyline from its ``from`` vertex, through optional
waypoints, to its ``to`` vertex.  Loops and parallel edges are allowed.

Oriented edges are indexed ``0..2|E|-1``: index ``j < |E|`` is edge ``j``
traversed from->to and index ``j + |E|`` is its reversal.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import geometry

Point = tuple[float, float]


class GraphError(ValueError):
    """Base class for invalid graph input."""


class MalformedSpec(GraphError):
    pass


class DanglingReference(GraphError):
    pass


class NotConnected(GraphError):
    pass


class DegreeOneVertex(GraphError):
    pass


BadGeometry = geometry.BadGeometry


@dataclass(frozen=True)
class Vertex:
    id: int
    x: float
    y: float

    @property
    def position(self) -> Point:
        return (self.x, self.y)


@dataclass(frozen=True)
class Edge:
    id: int
    source: int
    target: int
    waypoints: tuple[Point, ...] = ()

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class GraphSpec:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    name: str = ""

    def check(self) -> None:
        """Raise if ids are not contiguous or an edge names a missing vertex."""
        if [v.id for v in self.vertices] != list(range(len(self.vertices))):
            raise MalformedSpec("vertex ids must be 0..|V|-1 in order")
        if [e.id for e in self.edges] != list(range(len(self.edges))):
            raise MalformedSpec("edge ids must be 0..|E|-1 in order")
        for v in self.vertices:
            if not (math.isfinite(v.x) and math.isfinite(v.y)):
                raise MalformedSpec(f"vertex {v.id} has a non-finite position")
        n = len(self.vertices)
        for e in self.edges:
            for end in (e.source, e.target):
                if not 0 <= end < n:
                    raise DanglingReference(f"edge {e.id} references missing vertex {end}")
            for p in e.waypoints:
                if len(p) != 2 or not all(math.isfinite(c) for c in p):
                    raise MalformedSpec(f"edge {e.id} has a malformed waypoint {p!r}")

    def to_dict(self) -> dict:
        return {
            "vertices": [{"id": v.id, "x": v.x, "y": v.y} for v in self.vertices],
            "edges": [
                {"id": e.id, "from": e.source, "to": e.target,
                 "waypoints": [[x, y] for x, y in e.waypoints]}
                for e in self.edges
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict, name: str = "") -> GraphSpec:
        if not isinstance(data, dict):
            raise MalformedSpec("graph document must be a JSON object")
        unknown = set(data) - {"vertices", "edges"}
        if unknown:
            raise MalformedSpec(f"unknown top-level keys: {sorted(unknown)}")
        try:
            vertices = sorted(
                (Vertex(int(v["id"]), float(v["x"]), float(v["y"])) for v in data["vertices"]),
                key=lambda v: v.id,
            )
            edges = sorted(
                (
                    Edge(
                        int(e["id"]), int(e["from"]), int(e["to"]),
                        tuple((float(p[0]), float(p[1])) for p in e.get("waypoints", [])),
                    )
                    for e in data["edges"]
                ),
                key=lambda e: e.id,
            )
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            raise MalformedSpec(f"bad graph document: {exc}") from exc
        spec = cls(tuple(vertices), tuple(edges), name)
        spec.check()
        return spec

    @classmethod
    def loads(cls, text: str, name: str = "") -> GraphSpec:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedSpec(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data, name)


@dataclass(frozen=True)
class OrientedEdge:
    index: int
    edge: int
    origin: int
    end: int
    points: tuple[Point, ...]  # full drawn polyline in traversal order


@dataclass(frozen=True)
class EmbeddedGraph:
    spec: GraphSpec
    oriented: tuple[OrientedEdge, ...]
    incidence: tuple[tuple[int, ...], ...]  # per vertex: oriented edges leaving it
    turning: tuple[geometry.EdgeTurning, ...] = field(repr=False)

    @property
    def num_vertices(self) -> int:
        return len(self.spec.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.spec.edges)

    @property
    def name(self) -> str:
        return self.spec.name

    def reverse(self, e: int) -> int:
        m = self.num_edges
        return (e + m) % (2 * m)

    def origin(self, e: int) -> int:
        return self.oriented[e].origin

    def end(self, e: int) -> int:
        return self.oriented[e].end

    def successors(self, e: int) -> tuple[int, ...]:
        """Oriented edges that may follow ``e`` without backtracking."""
        back = self.reverse(e)
        return tuple(f for f in self.incidence[self.end(e)] if f != back)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def loop_count(self) -> int:
        return sum(1 for e in self.spec.edges if e.is_loop)


def _connected(n: int, edges: Sequence[Edge]) -> bool:
    if n == 0:
        return False
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in edges:
        adj[e.source].append(e.target)
        adj[e.target].append(e.source)
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def build_graph(spec: GraphSpec) -> EmbeddedGraph:
    """Validate ``spec`` and build the oriented double with its turning data.

    Raises DanglingReference, NotConnected, DegreeOneVertex or BadGeometry.
    Crossing detection is not done here; see :func:`validate_embedding`.
    """
    spec.check()
    n, m = len(spec.vertices), len(spec.edges)
    if not _connected(n, spec.edges):
        raise NotConnected("graph is not connected")
    deg = [0] * n
    for e in spec.edges:
        deg[e.source] += 1
        deg[e.target] += 1
    for v, d in enumerate(deg):
        if d < 2:
            raise DegreeOneVertex(f"vertex {v} has degree {d}; every vertex needs degree >= 2")

    pos = [v.position for v in spec.vertices]
    oriented: list[OrientedEdge] = []
    for e in spec.edges:
        pts = (pos[e.source], *e.waypoints, pos[e.target])
        oriented.append(OrientedEdge(e.id, e.id, e.source, e.target, pts))
    for e in spec.edges:
        pts = (pos[e.target], *reversed(e.waypoints), pos[e.source])
        oriented.append(OrientedEdge(e.id + m, e.id, e.target, e.source, pts))

    forward = [geometry.polyline_turning(o.points, what=f"edge {o.edge}") for o in oriented[:m]]
    turning = tuple(forward) + tuple(t.reversed() for t in forward)

    incidence: list[list[int]] = [[] for _ in range(n)]
    for o in oriented:
        incidence[o.origin].append(o.index)

    g = EmbeddedGraph(spec, tuple(oriented), tuple(tuple(x) for x in incidence), turning)
    # a vertex turn of exactly +-pi is a cusp between two distinct edges
    for e in range(2 * m):
        for f in g.successors(e):
            geometry.vertex_turn(turning[e].end_direction, turning[f].start_direction,
                                 what=f"transition {e}->{f}")
    return g


@dataclass
class Finding:
    severity: str  # "error" | "warning"
    code: str
    message: str
    locus: tuple = ()


@dataclass
class ValidationReport:
    findings: list[Finding] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(f.severity == "error" for f in self.findings)

    def errors(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "error"]


def _segments(g: EmbeddedGraph) -> Iterable[tuple[int, int, Point, Point]]:
    for o in g.oriented[: g.num_edges]:
        for k in range(len(o.points) - 1):
            yield o.edge, k, o.points[k], o.points[k + 1]


def validate_embedding(g: EmbeddedGraph, *, near_cusp: float = 1e-9) -> ValidationReport:
    """Check that the drawing is planar and report near-degenerate angles.

    Two segments may only meet at a graph vertex that ends both of them, or at
    the shared waypoint of consecutive segments of one edge.
    """
    report = ValidationReport()
    positions = [v.position for v in g.spec.vertices]
    for i in range(len(positions)):
        for j in range(i + 1, len(positions)):
            if positions[i] == positions[j]:
                report.findings.append(Finding(
                    "error", "vertex_overlap", f"vertices {i} and {j} share a position", (i, j)))

    segs = list(_segments(g))
    nseg = {e.id: len(e.waypoints) + 1 for e in g.spec.edges}

    def vertex_ends(e: int, k: int, p1: Point, p2: Point) -> set[Point]:
        ends = set()
        if k == 0:
            ends.add(p1)
        if k == nseg[e] - 1:
            ends.add(p2)
        return ends

    for a in range(len(segs)):
        ea, ka, p1, p2 = segs[a]
        for b in range(a + 1, len(segs)):
            eb, kb, q1, q2 = segs[b]
            if ea != eb:
                allowed = vertex_ends(ea, ka, p1, p2) & vertex_ends(eb, kb, q1, q2)
            else:
                allowed = set()
                if kb == ka + 1:
                    allowed.add(p2)
                if g.spec.edges[ea].is_loop and ka == 0 and kb == nseg[ea] - 1:
                    allowed.add(p1)
            bad = geometry.segments_conflict(p1, p2, q1, q2, allowed)
            if bad:
                report.findings.append(Finding(
                    "error", "crossing",
                    f"edge {ea} segment {ka} meets edge {eb} segment {kb} ({bad})",
                    (ea, ka, eb, kb),
                ))

    for e, t in enumerate(g.turning[: g.num_edges]):
        for k, turn in enumerate(t.turns):
            if math.pi - abs(turn) < near_cusp:
                report.findings.append(Finding(
                    "warning", "near_cusp", f"edge {e} bends by {turn!r} at waypoint {k}", (e, k)))
    for e in range(2 * g.num_edges):
        for f in g.successors(e):
            turn = geometry.vertex_turn(g.turning[e].end_direction, g.turning[f].start_direction)
            if math.pi - abs(turn) < near_cusp:
                report.findings.append(Finding(
                    "warning", "near_cusp", f"transition {e}->{f} turns by {turn!r}", (e, f)))
    return report
