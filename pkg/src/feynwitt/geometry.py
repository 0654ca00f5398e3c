"""Turning angles of drawn edges and winding numbers of closed walks.

The turning angle between two consecutive oriented edges ``e -> f`` is the net
rotation of the unit tangent going from the arclength midpoint of ``e`` to the
arclength midpoint of ``f``.  It is split as

    alpha(e, f) = second_half(e) + vertex_turn(e, f) + first_half(f)

where only the single vertex turn is normalized to ``(-pi, pi)``.  The halves
are sums of signed exterior angles at waypoints, so a loop continuing into
itself accumulates a full revolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .graph import EmbeddedGraph

Point = tuple[float, float]
TWO_PI = 2.0 * math.pi

# waypoints closer than this fraction of the edge length to the midpoint
# have their turn split evenly between the two halves
MIDPOINT_RTOL = 1e-12


class BadGeometry(ValueError):
    pass


class NotAdjacent(ValueError):
    pass


class Backtrack(ValueError):
    pass


class WindingNotIntegral(ArithmeticError):
    pass


@dataclass(frozen=True)
class EdgeTurning:
    start_direction: Point
    end_direction: Point
    first_half_turn: float
    second_half_turn: float
    turns: tuple[float, ...] = ()  # exterior angle at each waypoint, in order

    @property
    def total(self) -> float:
        return self.first_half_turn + self.second_half_turn

    def reversed(self) -> EdgeTurning:
        sx, sy = self.start_direction
        ex, ey = self.end_direction
        return EdgeTurning(
            (-ex, -ey), (-sx, -sy),
            -self.second_half_turn, -self.first_half_turn,
            tuple(-t for t in reversed(self.turns)),
        )


def _unit(p: Point, q: Point, what: str) -> Point:
    dx, dy = q[0] - p[0], q[1] - p[1]
    n = math.hypot(dx, dy)
    if n == 0.0:
        raise BadGeometry(f"{what}: zero-length segment at {p}")
    return (dx / n, dy / n)


def signed_angle(u: Point, v: Point) -> float:
    """Angle from direction ``u`` to ``v`` in ``[-pi, pi]``, anticlockwise positive."""
    return math.atan2(u[0] * v[1] - u[1] * v[0], u[0] * v[0] + u[1] * v[1])


def vertex_turn(u: Point, v: Point, what: str = "turn") -> float:
    a = signed_angle(u, v)
    if abs(a) >= math.pi:
        raise BadGeometry(f"{what}: cusp (directions exactly opposite)")
    return a


def polyline_turning(points: Sequence[Point], what: str = "polyline") -> EdgeTurning:
    """Turning data for a polyline drawn through ``points``."""
    if len(points) < 2:
        raise BadGeometry(f"{what}: needs at least two points")
    dirs = [_unit(points[k], points[k + 1], what) for k in range(len(points) - 1)]
    lengths = [math.dist(points[k], points[k + 1]) for k in range(len(points) - 1)]
    turns = tuple(
        vertex_turn(dirs[k], dirs[k + 1], what=f"{what} waypoint {k}") for k in range(len(dirs) - 1)
    )
    half = 0.5 * sum(lengths)
    tol = MIDPOINT_RTOL * half
    first = second = 0.0
    s = 0.0
    for k, turn in enumerate(turns):
        s += lengths[k]  # arclength of waypoint k
        if s < half - tol:
            first += turn
        elif s > half + tol:
            second += turn
        else:
            first += 0.5 * turn
            second += 0.5 * turn
    return EdgeTurning(dirs[0], dirs[-1], first, second, turns)


def edge_turning(g: EmbeddedGraph, e: int) -> EdgeTurning:
    if not 0 <= e < 2 * g.num_edges:
        raise IndexError(f"no oriented edge {e}")
    return g.turning[e]


def transition_angle(g: EmbeddedGraph, e: int, f: int) -> float:
    """Net turning from the midpoint of ``e`` to the midpoint of ``f``."""
    if g.end(e) != g.origin(f):
        raise NotAdjacent(f"edge {e} does not end where edge {f} starts")
    if f == g.reverse(e):
        raise Backtrack(f"edge {f} reverses edge {e}")
    te, tf = g.turning[e], g.turning[f]
    turn = vertex_turn(te.end_direction, tf.start_direction, what=f"transition {e}->{f}")
    return te.second_half_turn + turn + tf.first_half_turn


def angle_table(g: EmbeddedGraph) -> dict[tuple[int, int], float]:
    """All admissible ``(e, f) -> alpha(e, f)``."""
    return {(e, f): transition_angle(g, e, f)
            for e in range(2 * g.num_edges) for f in g.successors(e)}


def winding_from_angles(total: float, tol: float = 1e-6) -> int:
    n = round(total / TWO_PI)
    if abs(total / TWO_PI - n) >= tol:
        raise WindingNotIntegral(f"turning {total!r} is not a multiple of 2pi")
    return n


def walk_winding(g: EmbeddedGraph, word: Sequence[int], tol: float = 1e-6) -> int:
    """Winding number of a closed non-backtracking walk given as oriented edges."""
    if not word:
        raise ValueError("empty walk")
    total = 0.0
    n = len(word)
    for k in range(n):
        total += transition_angle(g, word[k], word[(k + 1) % n])
    return winding_from_angles(total, tol)


def _orient(a: Point, b: Point, c: Point) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_conflict(p1: Point, p2: Point, q1: Point, q2: Point,
                      allowed: set[Point] = frozenset()) -> str:
    """Describe how segments p and q meet outside ``allowed`` points, or ``""``.

    ``allowed`` holds points where contact is permitted (shared graph
    vertices, shared waypoints of consecutive segments).
    """
    scale = max(math.dist(p1, p2), math.dist(q1, q2))
    eps = 1e-12 * scale * scale
    o1, o2 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    o3, o4 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    z1, z2, z3, z4 = (abs(o) <= eps for o in (o1, o2, o3, o4))

    if (o1 > eps and o2 < -eps or o1 < -eps and o2 > eps) and \
       (o3 > eps and o4 < -eps or o3 < -eps and o4 > eps):
        return "crossing"

    if z1 and z2:
        # collinear: compare extents along the common line
        d = (p2[0] - p1[0], p2[1] - p1[1])
        if abs(d[0]) + abs(d[1]) == 0.0:
            d = (q2[0] - q1[0], q2[1] - q1[1])
        proj = lambda p: p[0] * d[0] + p[1] * d[1]  # noqa: E731
        a0, a1 = sorted((proj(p1), proj(p2)))
        b0, b1 = sorted((proj(q1), proj(q2)))
        lo, hi = max(a0, b0), min(a1, b1)
        if hi < lo:
            return ""
        if hi > lo:
            return "overlap"
        # touching at one point
        touch = next(p for p in (p1, p2, q1, q2) if proj(p) == lo)
        return "" if touch in allowed else "touch"

    touches = []
    if z1 and _on_segment(q1, p1, p2):
        touches.append(q1)
    if z2 and _on_segment(q2, p1, p2):
        touches.append(q2)
    if z3 and _on_segment(p1, q1, q2):
        touches.append(p1)
    if z4 and _on_segment(p2, q1, q2):
        touches.append(p2)
    for t in touches:
        if t not in allowed:
            return "touch"
    return ""
