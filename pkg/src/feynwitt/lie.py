"""Superdimensions of the free Lie superalgebra attached to a graph.

The generating superspace has superdimensions read off the two
determinants: ``det(1 - zT) = 1 - sum t(n) z^n`` and
``det(1 - zS) = 1 - sum t'(n) z^n``.  Splitting by parity,
``t(n,0) = (t'(n) + t(n))/2`` and ``t(n,1) = (t(n) - t'(n))/2``.  The
generalized Witt formulas then give the homogeneous dimensions, which for a
planar graph reproduce (theta-, theta+).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .counting import NonIntegerCount, divisors, exact_div, moebius
from .graph import EmbeddedGraph
from .matrices import DEFAULT_TOL, GraphMatrices, IntegerPolynomial
from .series import RationalSeries, inverse


class ParityViolation(ArithmeticError):
    pass


@dataclass
class SuperdimensionTable:
    max_n: int
    t: list[int]
    t_prime: list[int]
    t0: list[int]
    t1: list[int]
    dim_l0: list[int] = field(default_factory=list)
    dim_l1: list[int] = field(default_factory=list)
    enveloping: list[int] = field(default_factory=list)  # index 0..max_n


def _value(seq: Sequence[int], n: int) -> int:
    return seq[n - 1] if 1 <= n <= len(seq) else 0


def superdims_from_polys(det_t: IntegerPolynomial, det_s: IntegerPolynomial,
                         max_n: int) -> SuperdimensionTable:
    t = [-det_t[n] for n in range(1, max_n + 1)]
    tp = [-det_s[n] for n in range(1, max_n + 1)]
    t0, t1 = [], []
    for n, (a, b) in enumerate(zip(t, tp), start=1):
        if (a + b) % 2:
            raise ParityViolation(f"t({n}) = {a} and t'({n}) = {b} differ in parity")
        t0.append((b + a) // 2)
        t1.append((a - b) // 2)
    return SuperdimensionTable(max_n, t, tp, t0, t1)


def superdims_from_graph(g: EmbeddedGraph, max_n: int, tol: float = DEFAULT_TOL) -> SuperdimensionTable:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    gm = GraphMatrices.of(g, 0, tol)
    return superdims_from_polys(gm.det_T, gm.det_S, max_n)


def _colored_w(gens: dict[tuple[int, int], int], max_n: int) -> dict[tuple[int, int], Fraction]:
    """W(tau, b) for tau <= max_n, b in {0, 1}.

    ``gens`` maps (degree, parity) to a nonzero superdimension.  Each
    multiset s of generator types with total degree tau and parity b
    contributes (|s|-1)!/s! * prod t^s.
    """
    types = sorted(gens)
    w: dict[tuple[int, int], Fraction] = {(n, b): Fraction(0) for n in range(1, max_n + 1) for b in (0, 1)}

    def walk(start: int, total: int, parity: int, count: int, weight: Fraction) -> None:
        if count:
            w[(total, parity)] += math.factorial(count - 1) * weight
        for j in range(start, len(types)):
            size, color = types[j]
            if total + size > max_n:
                continue
            tj = gens[types[j]]
            wt = weight
            for mult in range(1, (max_n - total) // size + 1):
                wt = wt * tj / mult
                walk(j + 1, total + mult * size, parity ^ (color & mult & 1), count + mult, wt)

    walk(0, 0, 0, 0, Fraction(1))
    return w


def witt_partition_sums(t: Sequence[int], max_n: int) -> list[Fraction]:
    """W(N) = sum over partitions s of N of (|s|-1)!/s! prod t(i)^s_i, N = 1..max_n."""
    gens = {(n, 0): _value(t, n) for n in range(1, max_n + 1) if _value(t, n)}
    w = _colored_w(gens, max_n)
    return [w[(n, 0)] for n in range(1, max_n + 1)]


def witt_dimensions_univariate(t: Sequence[int], max_n: int) -> list[int]:
    """Superdimensions of L_N for the free Lie superalgebra on superdims t(1), t(2), ..."""
    w = witt_partition_sums(t, max_n)
    out = []
    for n in range(1, max_n + 1):
        s = sum(Fraction(moebius(g), g) * w[n // g - 1] for g in divisors(n))
        out.append(exact_div(s, 1, f"Dim L_{n}"))
    return out


def witt_dimensions_bivariate(t0: Sequence[int], t1: Sequence[int], max_n: int) -> tuple[list[int], list[int]]:
    """(Dim L_(n,0), Dim L_(n,1)) for n = 1..max_n over the Z>0 x Z2 grading."""
    gens = {}
    for n in range(1, max_n + 1):
        for color, seq in ((0, t0), (1, t1)):
            v = _value(seq, n)
            if v:
                gens[(n, color)] = v
    w = _colored_w(gens, max_n)
    even, odd = [], []
    for n in range(1, max_n + 1):
        divs = divisors(n)
        l0 = sum(Fraction(moebius(g), g) * w[(n // g, 0)] for g in divs)
        l0 += sum(Fraction(moebius(g), g) * w[(n // g, 1)] for g in divs if g % 2 == 0)
        l1 = sum(Fraction(moebius(g), g) * w[(n // g, 1)] for g in divs if g % 2)
        even.append(exact_div(l0, 1, f"Dim L_({n},0)"))
        odd.append(exact_div(l1, 1, f"Dim L_({n},1)"))
    return even, odd


def enveloping_from_poly(det_s: IntegerPolynomial, max_n: int) -> list[int]:
    series = inverse(RationalSeries.from_coeffs(det_s.coeffs, max_n))
    return series.integer_coeffs()


def enveloping_dims(g: EmbeddedGraph, max_n: int, tol: float = DEFAULT_TOL) -> list[int]:
    """Coefficients 0..max_n of 1/det(1 - zS), the enveloping-algebra superdimensions."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    return enveloping_from_poly(GraphMatrices.of(g, 0, tol).det_S, max_n)


def superdimension_table(g: EmbeddedGraph, max_n: int, tol: float = DEFAULT_TOL) -> SuperdimensionTable:
    """All columns: generator superdims, Lie dimensions and enveloping dims."""
    gm = GraphMatrices.of(g, 0, tol)
    table = superdims_from_polys(gm.det_T, gm.det_S, max_n)
    table.dim_l0, table.dim_l1 = witt_dimensions_bivariate(table.t0, table.t1, max_n)
    table.enveloping = enveloping_from_poly(gm.det_S, max_n)
    return table


__all__ = [
    "NonIntegerCount",
    "ParityViolation",
    "SuperdimensionTable",
    "enveloping_dims",
    "superdimension_table",
    "superdims_from_graph",
    "witt_dimensions_bivariate",
    "witt_dimensions_univariate",
    "witt_partition_sums",
]
