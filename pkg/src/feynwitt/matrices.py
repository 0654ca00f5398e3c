"""Edge adjacency and Kac-Ward transition matrices, traces, determinants.

``det(1 - zM)`` is recovered exactly from power traces with Newton's
identities.  For the transition matrix the traces are complex floats that
must be certified integers first; all later arithmetic is exact.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import angle_table
from .graph import EmbeddedGraph

DEFAULT_TOL = 1e-6


class NonIntegralTrace(ArithmeticError):
    pass


class NonIntegralCoefficient(ArithmeticError):
    pass


@dataclass(frozen=True)
class IntegerPolynomial:
    """Exact integer polynomial; ``coeffs[k]`` is the coefficient of ``z^k``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def of(cls, coeffs: Sequence[int]) -> IntegerPolynomial:
        return cls(tuple(coeffs))

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntegerPolynomial(tuple(self[k] + other[k] for k in range(n)))

    def __neg__(self) -> IntegerPolynomial:
        return IntegerPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return self + (-other)

    def __mul__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntegerPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntegerPolynomial(tuple(out))

    def substitute_power(self, k: int) -> IntegerPolynomial:
        """``p(z^k)``."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntegerPolynomial(tuple(out))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


@dataclass(frozen=True)
class TraceTable:
    """Tr M^N for N = 1..n_max; index with ``table[N]``."""

    kind: str  # "T" or "S"
    values: tuple[int, ...]
    raw: tuple[complex, ...] = ()
    max_residual: float = 0.0

    @property
    def n_max(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"trace of power {n} not available (have 1..{len(self.values)})")
        return self.values[n - 1]

    def as_list(self) -> list[int]:
        return list(self.values)


def edge_adjacency(g: EmbeddedGraph) -> np.ndarray:
    """0/1 matrix T with T[e, f] = 1 iff f may follow e without backtracking."""
    size = 2 * g.num_edges
    t = np.zeros((size, size), dtype=np.int64)
    for e in range(size):
        for f in g.successors(e):
            t[e, f] = 1
    return t


def transition_matrix(g: EmbeddedGraph) -> np.ndarray:
    """Complex matrix S with S[e, f] = exp(i alpha(e, f) / 2) on the support of T."""
    size = 2 * g.num_edges
    s = np.zeros((size, size), dtype=np.complex128)
    for (e, f), alpha in angle_table(g).items():
        s[e, f] = cmath.exp(0.5j * alpha)
    return s


def block_deviation(s: np.ndarray) -> dict[str, float]:
    """Deviation of S from its block symmetries B = B^H, C = C^H, D = A^H."""
    m = s.shape[0] // 2
    a, b = s[:m, :m], s[:m, m:]
    c, d = s[m:, :m], s[m:, m:]
    return {
        "B": float(np.max(np.abs(b - b.conj().T), initial=0.0)),
        "C": float(np.max(np.abs(c - c.conj().T), initial=0.0)),
        "D": float(np.max(np.abs(d - a.conj().T), initial=0.0)),
        "diag_B": float(np.max(np.abs(np.diag(b)), initial=0.0)),
        "diag_C": float(np.max(np.abs(np.diag(c)), initial=0.0)),
    }


def _exact_traces(m: np.ndarray, n_max: int) -> list[int]:
    size = m.shape[0]
    row = int(np.max(np.abs(m).sum(axis=1), initial=0))
    if size * max(row, 1) ** n_max < 2**62:
        mat = m.astype(np.int64)
    else:
        mat = m.astype(object)
    p = mat.copy()
    out = [int(np.trace(p))]
    for _ in range(1, n_max):
        p = p @ mat
        out.append(int(np.trace(p)))
    return out


def power_traces(m: np.ndarray, n_max: int, tol: float = DEFAULT_TOL) -> TraceTable:
    """Tr M^N for N = 1..n_max by iterated multiplication.

    Integer matrices give exact traces.  Complex matrices must produce traces
    within ``tol`` of an integer with imaginary part below ``tol``; otherwise
    NonIntegralTrace is raised.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if m.shape[0] == 0:
        return TraceTable("T", (0,) * n_max)
    if np.issubdtype(m.dtype, np.integer) or m.dtype == object:
        return TraceTable("T", tuple(_exact_traces(m, n_max)))

    p = m.copy()
    raw = []
    for k in range(n_max):
        if k:
            p = p @ m
        raw.append(complex(np.trace(p)))
    values = []
    worst = 0.0
    for n, z in enumerate(raw, start=1):
        r = round(z.real)
        residual = max(abs(z.imag), abs(z.real - r))
        worst = max(worst, residual)
        if residual >= tol:
            raise NonIntegralTrace(f"Tr S^{n} = {z!r} is not within {tol} of an integer")
        values.append(int(r))
    return TraceTable("S", tuple(values), tuple(raw), worst)


def newton_det(traces: Sequence[int], order: int) -> IntegerPolynomial:
    """Coefficients of det(1 - zM) up to ``order`` from p_k = Tr M^k.

    Uses k d_k = -sum_{i=1..k} p_i d_{k-i}, which follows from
    log det(1 - zM) = -sum p_k z^k / k.
    """
    d = [1]
    for k in range(1, order + 1):
        num = -sum(traces[i - 1] * d[k - i] for i in range(1, k + 1))
        q, r = divmod(num, k)
        if r:
            raise NonIntegralCoefficient(f"coefficient of z^{k} is {num}/{k}")
        d.append(q)
    return IntegerPolynomial(tuple(d))


def char_poly(m: np.ndarray, tol: float = DEFAULT_TOL) -> IntegerPolynomial:
    """det(1 - zM) as an exact integer polynomial of degree <= order of M."""
    size = m.shape[0]
    if size == 0:
        return IntegerPolynomial((1,))
    traces = power_traces(m, size, tol)
    return newton_det(traces.values, size)


@dataclass(frozen=True)
class GraphMatrices:
    """T, S and their traces/determinants for one graph, computed once."""

    graph: EmbeddedGraph
    T: np.ndarray
    S: np.ndarray
    traces_T: TraceTable
    traces_S: TraceTable
    det_T: IntegerPolynomial
    det_S: IntegerPolynomial

    @classmethod
    def of(cls, g: EmbeddedGraph, n_max: int = 0, tol: float = DEFAULT_TOL) -> GraphMatrices:
        t = edge_adjacency(g)
        s = transition_matrix(g)
        n = max(n_max, t.shape[0], 1)
        tt = power_traces(t, n, tol)
        ts = power_traces(s, n, tol)
        return cls(g, t, s, tt, ts,
                   newton_det(tt.values, t.shape[0]), newton_det(ts.values, s.shape[0]))
