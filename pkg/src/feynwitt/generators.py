"""Builtin graph families with explicit non-crossing drawings."""

from __future__ import annotations

import math

from .graph import Edge, GraphError, GraphSpec, Vertex


class UnknownFamily(GraphError):
    pass


class BadParams(GraphError):
    pass


def _polar(r: float, a: float) -> tuple[float, float]:
    return (r * math.cos(a), r * math.sin(a))


def cycle(n: int) -> GraphSpec:
    """Regular n-gon traversed anticlockwise by the forward edges."""
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    verts = tuple(Vertex(k, *_polar(1.0, 2 * math.pi * k / n)) for k in range(n))
    edges = tuple(Edge(k, k, (k + 1) % n) for k in range(n))
    return GraphSpec(verts, edges, f"cycle:{n}")


def k4() -> GraphSpec:
    """Triangle 0,1,2 with vertex 3 at its centre joined to all three."""
    outer = [Vertex(k, *_polar(1.0, math.pi / 2 + 2 * math.pi * k / 3)) for k in range(3)]
    verts = (*outer, Vertex(3, 0.0, 0.0))
    pairs = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]
    return GraphSpec(verts, tuple(Edge(i, a, b) for i, (a, b) in enumerate(pairs)), "k4")


def bouquet(r: int) -> GraphSpec:
    """One vertex with ``r`` loops drawn as disjoint triangular petals."""
    if r < 1:
        raise BadParams("bouquet needs R >= 1")
    half_width = min(math.pi / 3, math.pi / (2 * r))
    edges = []
    for k in range(r):
        phi = 2 * math.pi * k / r
        edges.append(Edge(k, 0, 0, (_polar(1.0, phi - half_width), _polar(1.0, phi + half_width))))
    return GraphSpec((Vertex(0, 0.0, 0.0),), tuple(edges), f"bouquet:{r}")


def theta_chain(r: int) -> GraphSpec:
    """``r`` digons glued end to end along the x axis.

    Vertices ``0..r`` sit at ``(k, 0)``; edges ``2k`` and ``2k+1`` join
    ``k`` to ``k+1`` above and below the axis.
    """
    if r < 1:
        raise BadParams("theta_chain needs R >= 1")
    verts = tuple(Vertex(k, float(k), 0.0) for k in range(r + 1))
    edges = []
    for k in range(r):
        edges.append(Edge(2 * k, k, k + 1, ((k + 0.5, 0.3),)))
        edges.append(Edge(2 * k + 1, k, k + 1, ((k + 0.5, -0.3),)))
    return GraphSpec(verts, tuple(edges), f"theta_chain:{r}")


def thick_square() -> GraphSpec:
    """Square whose bottom side is tripled: 4 vertices, 6 edges.

    Shares its Euler polynomial ``(1+z^2)^3`` with ``theta_chain:3``.
    """
    verts = (Vertex(0, 0.0, 0.0), Vertex(1, 1.0, 0.0), Vertex(2, 1.0, 1.0), Vertex(3, 0.0, 1.0))
    edges = (
        Edge(0, 0, 1),
        Edge(1, 0, 1, ((0.5, -0.25),)),
        Edge(2, 0, 1, ((0.5, -0.5),)),
        Edge(3, 1, 2),
        Edge(4, 2, 3),
        Edge(5, 3, 0),
    )
    return GraphSpec(verts, edges, "thick_square")


_FAMILIES = {
    "bouquet": (bouquet, 1),
    "theta_chain": (theta_chain, 1),
    "cycle": (cycle, 1),
    "k4": (k4, 0),
    "thick_square": (thick_square, 0),
}

FAMILIES = tuple(_FAMILIES)


def generate(name: str, params: list[int] | tuple[int, ...] = ()) -> GraphSpec:
    if name == "triangle":
        name, params = "cycle", [3]
    if name not in _FAMILIES:
        raise UnknownFamily(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    fn, arity = _FAMILIES[name]
    if len(params) != arity:
        raise BadParams(f"{name} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*params)


def parse_builtin(text: str) -> GraphSpec:
    """Parse ``name[:p1[,p2...]]``, e.g. ``bouquet:3`` or ``k4``."""
    name, _, rest = text.partition(":")
    try:
        params = [int(p) for p in rest.split(",")] if rest else []
    except ValueError as exc:
        raise BadParams(f"bad parameters in {text!r}") from exc
    return generate(name, params)
