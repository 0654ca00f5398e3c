from __future__ import annotations

import pytest

from feynwitt.euler import TooLarge, euler_polynomial, euler_polynomial_bruteforce
from feynwitt.matrices import IntegerPolynomial

from conftest import builtin, digon_bridge


def _power(base, r):
    out = IntegerPolynomial((1,))
    for _ in range(r):
        out = out * IntegerPolynomial(base)
    return out


def test_triangle():
    assert euler_polynomial(builtin("triangle")).coeffs == (1, 0, 0, 1)


@pytest.mark.parametrize("r", [1, 2, 3, 5])
def test_bouquet(r):
    assert euler_polynomial(builtin(f"bouquet:{r}")) == _power((1, 1), r)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_theta_chain(r):
    assert euler_polynomial(builtin(f"theta_chain:{r}")) == _power((1, 0, 1), r)


def test_pair_shares_euler_polynomial():
    want = _power((1, 0, 1), 3)
    assert euler_polynomial(builtin("thick_square")) == want
    assert euler_polynomial(digon_bridge()) == want


def test_matches_bruteforce(corpus_graph):
    assert euler_polynomial(corpus_graph) == euler_polynomial_bruteforce(corpus_graph)


def test_cap():
    with pytest.raises(TooLarge):
        euler_polynomial(builtin("bouquet:5"), cap=4)
