from __future__ import annotations

import pytest

from feynwitt.counting import theta_tables
from feynwitt.matrices import GraphMatrices
from feynwitt.oracle import (
    canonical_rotation, classes, count_signed, enumerate_closed_walks, oracle_count_table,
    signed_class_counts, smallest_period,
)

from conftest import builtin


def test_triangle_walks():
    g = builtin("triangle")
    assert len(enumerate_closed_walks(g, 3)) == 6
    assert enumerate_closed_walks(g, 1) == []


def test_bouquet_walks():
    words = enumerate_closed_walks(builtin("bouquet:1"), 2)
    assert sorted(words) == [(0, 0), (1, 1)]


def test_signed_counts():
    assert count_signed(builtin("triangle"), 3) == (6, 0)
    assert count_signed(builtin("cycle:4"), 8) == (0, 8)
    assert count_signed(builtin("k4"), 1) == (0, 0)


def test_classes():
    cs = classes(builtin("triangle"), 3)
    assert len(cs) == 2 and all(c.sign == 1 for c in cs)
    assert classes(builtin("cycle:4"), 8) == []
    cs = classes(builtin("bouquet:2"), 1)
    assert len(cs) == 4 and all(c.sign == 1 and c.winding in (1, -1) for c in cs)


def test_word_helpers():
    assert smallest_period((1, 2, 1, 2)) == 2
    assert smallest_period((1, 2, 3)) == 3
    assert canonical_rotation((3, 1, 2)) == (1, 2, 3)


def test_oracle_matches_closed_form(oracle_graph):
    n = 8
    gm = GraphMatrices.of(oracle_graph, n)
    closed = theta_tables(gm.traces_T, gm.traces_S, n)
    oracle = oracle_count_table(oracle_graph, n)
    assert oracle.rows == closed.rows
    for k in range(1, n + 1):
        assert len(enumerate_closed_walks(oracle_graph, k)) == gm.traces_T[k]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_signed_class_counts_k4(n):
    gm = GraphMatrices.of(builtin("k4"), n)
    row = theta_tables(gm.traces_T, gm.traces_S, n)[n]
    assert signed_class_counts(builtin("k4"), n) == (row.theta_plus, row.theta_minus)
