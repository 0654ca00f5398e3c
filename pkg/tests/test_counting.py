from __future__ import annotations

import pytest

from feynwitt.counting import (
    divisors, faa_di_bruno_c, moebius, omega, partitions, theta_tables, traces_from_c,
    verify_recursions, walk_counts_from_thetas, witt,
)
from feynwitt.matrices import GraphMatrices

from conftest import builtin


def tables(name, n=12):
    gm = GraphMatrices.of(builtin(name), n)
    return gm, theta_tables(gm.traces_T, gm.traces_S, n)


def test_moebius_examples():
    assert moebius(1) == 1
    assert moebius(12) == 0
    assert moebius(30) == -1
    with pytest.raises(ValueError):
        moebius(0)


def test_divisors_and_partitions():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert sum(1 for _ in partitions(6)) == 11
    for p in partitions(7):
        assert sum(k * m for k, m in p) == 7


def test_triangle_theta():
    _, t = tables("triangle")
    assert t[3].theta == 2 and t[3].theta_plus == 2 and t[3].theta_minus == 0


def test_square_theta():
    _, t = tables("cycle:4")
    assert (t[4].theta_plus, t[4].theta_minus) == (2, 0)
    assert t[4].omega == -2 and t[8].omega == 2


def test_empty_sums_are_zero():
    _, t = tables("k4", 2)
    assert all(v == 0 for v in (t[1].theta, t[1].theta_plus, t[1].theta_minus, t[2].theta))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_bouquet_omega(r):
    gm, _ = tables(f"bouquet:{r}")
    assert [omega(gm.traces_S, n) for n in range(1, 13)] == [-2 * r, 2 * r] + [0] * 10


@pytest.mark.parametrize("name,r", [("theta_chain:2", 2), ("theta_chain:3", 3), ("thick_square", 3)])
def test_theta_chain_omega(name, r):
    gm, _ = tables(name)
    want = [0] * 12
    want[1], want[3] = -2 * r, 2 * r
    assert [omega(gm.traces_S, n) for n in range(1, 13)] == want


def test_witt_values():
    assert [witt(1, r) for r in range(5)] == list(range(5))
    assert all(witt(n, 1) == 0 for n in range(2, 10))
    assert witt(2, 2) == 1 and witt(3, 2) == 2


def test_faa_di_bruno_triangle():
    gm, _ = tables("triangle", 6)
    c = [faa_di_bruno_c(gm.traces_S, i, "plus") for i in range(1, 7)]
    assert c == [0, 0, -2, 0, 0, -1]


def test_faa_di_bruno_seed(corpus_graph):
    gm = GraphMatrices.of(corpus_graph, 1)
    assert faa_di_bruno_c(gm.traces_S, 1, "plus") == gm.traces_S[1] == omega(gm.traces_S, 1)


def test_faa_di_bruno_bouquet_minus():
    gm, _ = tables("bouquet:1", 2)
    assert faa_di_bruno_c(gm.traces_S, 1, "minus") == -2
    assert faa_di_bruno_c(gm.traces_S, 2, "minus") == 3


@pytest.mark.parametrize("branch", ["plus", "minus"])
def test_traces_round_trip(corpus_graph, branch):
    n = 8
    gm = GraphMatrices.of(corpus_graph, n)
    c = [faa_di_bruno_c(gm.traces_S, i, branch) for i in range(1, n + 1)]
    assert [traces_from_c(c, branch, k) for k in range(1, n + 1)] == gm.traces_S.as_list()[:n]


def test_traces_from_c_small():
    assert traces_from_c([5], "plus", 1) == 5
    assert traces_from_c([5], "minus", 1) == 5
    gm, _ = tables("bouquet:2", 4)
    c = [faa_di_bruno_c(gm.traces_S, i, "minus") for i in range(1, 5)]
    assert traces_from_c(c, "minus", 4) == 4


def test_inversion_round_trip(corpus_graph):
    n = 10
    gm = GraphMatrices.of(corpus_graph, n)
    t = theta_tables(gm.traces_T, gm.traces_S, n)
    for k in range(1, n + 1):
        assert walk_counts_from_thetas(t, k) == (t[k].k_plus, t[k].k_minus, gm.traces_T[k])


def test_recursion_identities(corpus_graph):
    report = verify_recursions(corpus_graph)
    assert report.identities_passed, [r for r in report.results if not r.passed]
    assert report["magnitude bound |c+(n)| <= |c-(n)|"].passed


def test_literal_bound_fails_at_first_nonzero_index():
    # c+ and c- agree and are negative at the first index where either is nonzero
    report = verify_recursions(builtin("triangle"))
    bound = report["bound |c+(n)| <= c-(n)"]
    assert bound.kind == "inequality"
    assert bound.first_failure == 3
