"""Euler polynomial: even-degree edge subsets counted by size."""

from __future__ import annotations

from collections import deque

from .graph import EmbeddedGraph
from .matrices import IntegerPolynomial

DEFAULT_CAP = 24


class TooLarge(ValueError):
    pass


def fundamental_cycles(g: EmbeddedGraph) -> list[int]:
    """Edge bitmasks of the fundamental cycles of a BFS spanning tree."""
    n = g.num_vertices
    edges = g.spec.edges
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in edges:
        adj[e.source].append((e.target, e.id))
        adj[e.target].append((e.source, e.id))
    parent_edge = [-1] * n
    depth = [-1] * n
    depth[0] = 0
    queue = deque([0])
    tree = set()
    while queue:
        u = queue.popleft()
        for w, eid in adj[u]:
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                parent_edge[w] = eid
                tree.add(eid)
                queue.append(w)

    def path_mask(u: int, w: int) -> int:
        mask = 0
        while u != w:
            if depth[u] < depth[w]:
                u, w = w, u
            eid = parent_edge[u]
            mask ^= 1 << eid
            e = edges[eid]
            u = e.source if e.target == u else e.target
        return mask

    return [(1 << e.id) ^ path_mask(e.source, e.target) for e in edges if e.id not in tree]


def euler_polynomial(g: EmbeddedGraph, cap: int = DEFAULT_CAP) -> IntegerPolynomial:
    """E_G(z) = sum over even subgraphs of z^(edge count).

    Walks the cycle space in Gray-code order, one symmetric difference per
    step.  Raises TooLarge when the cycle space dimension exceeds ``cap``.
    """
    basis = fundamental_cycles(g)
    dim = len(basis)
    if dim > cap:
        raise TooLarge(f"cycle space dimension {dim} exceeds cap {cap}")
    counts = [0] * (g.num_edges + 1)
    mask = 0
    counts[0] = 1
    for i in range(1, 1 << dim):
        # bit that flips between gray(i-1) and gray(i)
        mask ^= basis[(i & -i).bit_length() - 1]
        counts[mask.bit_count()] += 1
    return IntegerPolynomial(tuple(counts))


def euler_polynomial_bruteforce(g: EmbeddedGraph) -> IntegerPolynomial:
    """Same polynomial by checking all 2^|E| edge subsets."""
    m, n = g.num_edges, g.num_vertices
    ends = [(e.source, e.target) for e in g.spec.edges]
    counts = [0] * (m + 1)
    for mask in range(1 << m):
        parity = [0] * n
        for i in range(m):
            if mask >> i & 1:
                a, b = ends[i]
                parity[a] ^= 1
                parity[b] ^= 1
        if not any(parity):
            counts[mask.bit_count()] += 1
    return IntegerPolynomial(tuple(counts))
