from __future__ import annotations

from fractions import Fraction

import pytest

from feynwitt.counting import theta_tables, witt
from feynwitt.lie import (
    enveloping_dims, superdimension_table, superdims_from_graph, witt_dimensions_bivariate,
    witt_dimensions_univariate, witt_partition_sums,
)
from feynwitt.matrices import GraphMatrices
from feynwitt.series import product_form

from conftest import builtin


def test_triangle_superdims():
    t = superdims_from_graph(builtin("triangle"), 8)
    assert (t.t[2], t.t_prime[2], t.t0[2], t.t1[2]) == (2, -2, 0, 2)
    assert t.t[7] == t.t_prime[7] == t.t0[7] == t.t1[7] == 0


def test_bouquet_superdims():
    t = superdims_from_graph(builtin("bouquet:1"), 2)
    assert t.t_prime == [-2, -1]


def test_triangle_bivariate():
    t = superdimension_table(builtin("triangle"), 6)
    assert t.dim_l1[2] == 2 and t.dim_l0[2] == 0


def test_square_bivariate():
    t = superdimension_table(builtin("cycle:4"), 8)
    assert (t.dim_l0[3], t.dim_l1[3]) == (0, 2)
    assert (t.dim_l0[7], t.dim_l1[7]) == (0, 0)


def test_bivariate_with_no_odd_part():
    t0 = [3, 1, 0, 2]
    even, odd = witt_dimensions_bivariate(t0, [0] * 4, 8)
    assert odd == [0] * 8
    assert even == witt_dimensions_univariate(t0, 8)


def test_classical_witt_recovered():
    for r in (1, 2, 3):
        assert witt_dimensions_univariate([r], 8) == [witt(n, r) for n in range(1, 9)]


def test_cross_check(corpus_graph):
    n = 10
    gm = GraphMatrices.of(corpus_graph, n)
    counts = theta_tables(gm.traces_T, gm.traces_S, n)
    table = superdimension_table(corpus_graph, n)
    assert table.dim_l0 == counts.column("theta_minus")
    assert table.dim_l1 == counts.column("theta_plus")
    assert witt_dimensions_univariate(table.t_prime, n) == counts.column("omega")
    assert witt_dimensions_univariate(table.t, n) == counts.column("theta")
    w = witt_partition_sums(table.t_prime, n)
    assert w == [Fraction(gm.traces_S[k], k) for k in range(1, n + 1)]


def test_denominator_identities(corpus_graph):
    n = 10
    gm = GraphMatrices.of(corpus_graph, n)
    table = superdimension_table(corpus_graph, n)
    plus = product_form([(k, -1, table.dim_l0[k - 1] + table.dim_l1[k - 1]) for k in range(1, n + 1)], n)
    minus = product_form(
        [f for k in range(1, n + 1) for f in ((k, -1, table.dim_l0[k - 1]), (k, 1, table.dim_l1[k - 1]))], n)
    assert plus.integer_coeffs() == [gm.det_T[k] for k in range(n + 1)]
    assert minus.integer_coeffs() == [gm.det_S[k] for k in range(n + 1)]


def test_enveloping_examples():
    assert enveloping_dims(builtin("bouquet:1"), 4) == [1, -2, 3, -4, 5]
    assert enveloping_dims(builtin("triangle"), 6) == [1, 0, 0, -2, 0, 0, 3]
    assert enveloping_dims(builtin("k4"), 0) == [1]


def test_enveloping_is_omega_product(corpus_graph):
    n = 10
    gm = GraphMatrices.of(corpus_graph, n)
    counts = theta_tables(gm.traces_T, gm.traces_S, n)
    prod = product_form([(k, -1, -counts[k].omega) for k in range(1, n + 1)], n)
    assert enveloping_dims(corpus_graph, n) == prod.integer_coeffs()


def test_bad_max_n():
    with pytest.raises(ValueError):
        superdims_from_graph(builtin("triangle"), 0)
