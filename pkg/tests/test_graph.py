from __future__ import annotations

import json
import math

import pytest

from feynwitt.generators import BadParams, UnknownFamily, generate, parse_builtin
from feynwitt.geometry import BadGeometry
from feynwitt.graph import (
    DanglingReference, DegreeOneVertex, Edge, GraphSpec, MalformedSpec, NotConnected, Vertex,
    build_graph, validate_embedding,
)

from conftest import CORPUS, builtin


def test_triangle_has_six_oriented_edges():
    g = builtin("triangle")
    assert g.num_vertices == 3 and g.num_edges == 3
    assert len(g.oriented) == 6
    for v in g.spec.vertices:
        assert math.isclose(math.hypot(v.x, v.y), 1.0)


def test_bouquet_two_loops():
    g = builtin("bouquet:2")
    assert len(g.oriented) == 4
    for e in range(4):
        assert g.origin(e) == g.end(e) == 0
    assert g.loop_count() == 2


def test_reverse_convention():
    g = builtin("k4")
    m = g.num_edges
    for j in range(m):
        assert g.reverse(j) == j + m and g.reverse(j + m) == j
        assert g.origin(j) == g.end(j + m)
        assert g.oriented[j].points == tuple(reversed(g.oriented[j + m].points))


def test_isolated_vertex_not_connected():
    spec = GraphSpec(
        (Vertex(0, 0, 0), Vertex(1, 1, 0), Vertex(2, 0, 1), Vertex(3, 5, 5)),
        (Edge(0, 0, 1), Edge(1, 1, 2), Edge(2, 2, 0)),
    )
    with pytest.raises(NotConnected):
        build_graph(spec)


def test_pendant_vertex_rejected():
    spec = GraphSpec(
        (Vertex(0, 0, 0), Vertex(1, 1, 0), Vertex(2, 0, 1), Vertex(3, -1, -1)),
        (Edge(0, 0, 1), Edge(1, 1, 2), Edge(2, 2, 0), Edge(3, 0, 3)),
    )
    with pytest.raises(DegreeOneVertex):
        build_graph(spec)


def test_dangling_and_malformed():
    with pytest.raises(DanglingReference):
        GraphSpec((Vertex(0, 0, 0),), (Edge(0, 0, 4),)).check()
    with pytest.raises(MalformedSpec):
        GraphSpec((Vertex(1, 0, 0),), ()).check()
    with pytest.raises(MalformedSpec):
        GraphSpec.loads('{"vertices": [], "edges": [], "extra": 1}')
    with pytest.raises(MalformedSpec):
        GraphSpec.loads("not json")


def test_cusp_edge_is_bad_geometry():
    # waypoint makes the polyline double back on itself
    spec = GraphSpec(
        (Vertex(0, 0, 0), Vertex(1, 1, 0)),
        (Edge(0, 0, 1, ((2.0, 0.0),)), Edge(1, 0, 1, ((0.5, 1.0),))),
    )
    with pytest.raises(BadGeometry):
        build_graph(spec)


@pytest.mark.parametrize("name", CORPUS)
def test_json_round_trip(name):
    spec = parse_builtin(name)
    again = GraphSpec.loads(spec.dumps(), spec.name)
    assert again == spec
    assert json.loads(spec.dumps()) == spec.to_dict()


def test_square_validates():
    assert validate_embedding(builtin("cycle:4")).ok


def test_crossing_detected():
    # a square with both diagonals drawn as extra edges
    verts = (Vertex(0, 0, 0), Vertex(1, 1, 0), Vertex(2, 1, 1), Vertex(3, 0, 1))
    edges = (Edge(0, 0, 1), Edge(1, 1, 2), Edge(2, 2, 3), Edge(3, 3, 0), Edge(4, 0, 2), Edge(5, 1, 3))
    report = validate_embedding(build_graph(GraphSpec(verts, edges)))
    assert not report.ok
    assert any(f.code == "crossing" and f.severity == "error" for f in report.findings)


def test_loop_with_full_turn_validates():
    g = builtin("bouquet:1")
    assert validate_embedding(g).ok
    t = g.turning[0]
    base = math.atan2(t.start_direction[1], t.start_direction[0])
    end = math.atan2(t.end_direction[1], t.end_direction[0])
    # waypoint turns plus the turn at the base vertex close up to 2 pi
    close = (base - end + math.pi) % (2 * math.pi) - math.pi
    assert math.isclose(t.total + close, 2 * math.pi)


def test_generate_shapes():
    sq = generate("cycle", [4])
    assert len(sq.vertices) == 4 and len(sq.edges) == 4
    b = generate("bouquet", [3])
    assert len(b.vertices) == 1 and len(b.edges) == 3
    tc = build_graph(generate("theta_chain", [3]))
    assert tc.num_vertices == 4 and tc.num_edges == 6
    assert [tc.degree(v) for v in range(4)] == [2, 4, 4, 2]


def test_generate_errors():
    with pytest.raises(UnknownFamily):
        generate("petersen", [])
    with pytest.raises(BadParams):
        generate("cycle", [2])
    with pytest.raises(BadParams):
        generate("bouquet", [0])
    with pytest.raises(BadParams):
        parse_builtin("cycle:x")


@pytest.mark.parametrize("r", range(1, 9))
def test_families_are_plane(r):
    for name in ("bouquet", "theta_chain"):
        if name == "theta_chain" and r < 2:
            continue
        assert validate_embedding(build_graph(generate(name, [r]))).ok
    assert validate_embedding(build_graph(generate("cycle", [r + 2]))).ok
