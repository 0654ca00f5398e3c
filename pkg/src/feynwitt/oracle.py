"""Brute-force enumeration of closed non-backtracking walks and cycle classes.

This is ground truth for the trace formulas, so it deliberately shares
nothing with :mod:`feynwitt.matrices` beyond the turning angles.  Cost is
exponential in the walk length.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .counting import CountRow, CountTable, omega_from_thetas
from .geometry import TWO_PI, angle_table, winding_from_angles
from .graph import EmbeddedGraph

Word = tuple[int, ...]


@dataclass(frozen=True)
class CycleClass:
    canonical: Word  # lexicographically least rotation
    sign: int
    winding: int
    period: int = 1  # classes are only formed from non-periodic words

    @property
    def length(self) -> int:
        return len(self.canonical)


def smallest_period(word: Word) -> int:
    """Least d dividing len(word) with word equal to its rotation by d."""
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[d:] + word[:d] == word:
            return d
    return n


def canonical_rotation(word: Word) -> Word:
    return min(word[k:] + word[:k] for k in range(len(word)))


def sign_of_winding(n: int) -> int:
    return -1 if n % 2 == 0 else 1


def _walks(g: EmbeddedGraph, n: int, tol: float) -> Iterator[tuple[Word, int]]:
    """Closed tail-less walks of length n with their winding numbers."""
    alpha = angle_table(g)
    succ = [sorted(g.successors(e)) for e in range(2 * g.num_edges)]
    for start in range(2 * g.num_edges):
        closes = set(e for e in range(2 * g.num_edges) if start in succ[e])
        word = [start]
        turn = [0.0]
        # explicit DFS over successor indices
        stack = [0]
        while stack:
            depth = len(word)
            if depth == n:
                last = word[-1]
                if last in closes:
                    total = turn[-1] + alpha[(last, start)]
                    yield tuple(word), winding_from_angles(total, tol)
                stack.pop()
                word.pop()
                turn.pop()
                continue
            i = stack[-1]
            options = succ[word[-1]]
            if i == len(options):
                stack.pop()
                word.pop()
                turn.pop()
                continue
            stack[-1] = i + 1
            nxt = options[i]
            turn.append(turn[-1] + alpha[(word[-1], nxt)])
            word.append(nxt)
            stack.append(0)


def enumerate_closed_walks(g: EmbeddedGraph, n: int) -> list[Word]:
    """Every closed tail-less non-backtracking walk of length n, each
    starting edge counted separately, so the count equals Tr T^n."""
    if n < 1:
        raise ValueError("walk length must be >= 1")
    return [w for w, _ in _walks(g, n, 1e-6)]


def count_signed(g: EmbeddedGraph, n: int, tol: float = 1e-6) -> tuple[int, int]:
    """(K+, K-): numbers of length-n closed walks with sign +1 and -1."""
    if n < 1:
        raise ValueError("walk length must be >= 1")
    plus = minus = 0
    for _, wind in _walks(g, n, tol):
        if sign_of_winding(wind) > 0:
            plus += 1
        else:
            minus += 1
    return plus, minus


def classes(g: EmbeddedGraph, n: int, tol: float = 1e-6) -> list[CycleClass]:
    """Rotation classes of non-periodic length-n cycles, sorted by canonical word.

    A cycle and its inversion are different classes.
    """
    if n < 1:
        raise ValueError("walk length must be >= 1")
    found: dict[Word, int] = {}
    for word, wind in _walks(g, n, tol):
        if smallest_period(word) != n:
            continue
        key = canonical_rotation(word)
        if key not in found:
            found[key] = wind
    return [CycleClass(w, sign_of_winding(found[w]), found[w]) for w in sorted(found)]


def signed_class_counts(g: EmbeddedGraph, n: int, tol: float = 1e-6) -> tuple[int, int]:
    """(theta+, theta-) counted by enumeration."""
    cs = classes(g, n, tol)
    plus = sum(1 for c in cs if c.sign > 0)
    return plus, len(cs) - plus


def winding_total(g: EmbeddedGraph, word: Word) -> float:
    """Raw turning sum of a closed walk, in units of full turns."""
    alpha = angle_table(g)
    n = len(word)
    return sum(alpha[(word[k], word[(k + 1) % n])] for k in range(n)) / TWO_PI


def oracle_count_table(g: EmbeddedGraph, max_n: int, tol: float = 1e-6) -> CountTable:
    """Count table built purely by enumeration; Omega from the theta combination."""
    kp, km, tp, tm = [], [], [], []
    for n in range(1, max_n + 1):
        plus = minus = 0
        seen: dict[Word, int] = {}
        for word, wind in _walks(g, n, tol):
            if sign_of_winding(wind) > 0:
                plus += 1
            else:
                minus += 1
            if smallest_period(word) == n:
                seen.setdefault(canonical_rotation(word), sign_of_winding(wind))
        kp.append(plus)
        km.append(minus)
        tp.append(sum(1 for s in seen.values() if s > 0))
        tm.append(sum(1 for s in seen.values() if s < 0))
    rows = tuple(
        CountRow(n, kp[n - 1], km[n - 1], tp[n - 1], tm[n - 1], tp[n - 1] + tm[n - 1],
                 omega_from_thetas(tp, tm, n))
        for n in range(1, max_n + 1)
    )
    return CountTable(rows, "oracle")
