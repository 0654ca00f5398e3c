from __future__ import annotations

import pytest

from feynwitt.generators import parse_builtin
from feynwitt.graph import Edge, EmbeddedGraph, GraphSpec, Vertex, build_graph

CORPUS = (
    "triangle", "cycle:4", "k4", "bouquet:1", "bouquet:2", "bouquet:3",
    "theta_chain:2", "theta_chain:3", "thick_square",
)
ORACLE_CORPUS = ("triangle", "cycle:4", "k4", "bouquet:2", "theta_chain:2")


def builtin(name: str) -> EmbeddedGraph:
    return build_graph(parse_builtin(name))


def digon_bridge_spec() -> GraphSpec:
    """Five vertices: a digon, a bridge, then a chain of two digons.

    Three independent digons give the same Euler polynomial as theta_chain:3
    while the vertex count differs.
    """
    verts = tuple(Vertex(k, float(k), 0.0) for k in range(5))
    edges = []
    for a in (0, 2, 3):
        mid = a + 0.5
        edges.append(Edge(len(edges), a, a + 1, ((mid, 0.3),)))
        edges.append(Edge(len(edges), a, a + 1, ((mid, -0.3),)))
    edges.append(Edge(len(edges), 1, 2))
    return GraphSpec(verts, tuple(edges), "digon_bridge")


def digon_bridge() -> EmbeddedGraph:
    return build_graph(digon_bridge_spec())


@pytest.fixture(params=CORPUS)
def corpus_graph(request) -> EmbeddedGraph:
    return builtin(request.param)


@pytest.fixture(params=ORACLE_CORPUS)
def oracle_graph(request) -> EmbeddedGraph:
    return builtin(request.param)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
