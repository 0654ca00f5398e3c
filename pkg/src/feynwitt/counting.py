"""Closed-form counts: Moebius sums over traces, Witt numbers, partition sums.

Every division here is a theorem about integers, so a non-zero remainder
raises NonIntegerCount instead of being rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .matrices import TraceTable


class NonIntegerCount(ArithmeticError):
    pass


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius is defined for n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def exact_div(num: int | Fraction, den: int, what: str = "count") -> int:
    q = Fraction(num) / den
    if q.denominator != 1:
        raise NonIntegerCount(f"{what}: {num}/{den} is not an integer")
    return q.numerator


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[tuple[int, int], ...]]:
    """Partitions of n as ``((part, multiplicity), ...)`` with parts decreasing."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for part in range(min(n, max_part), 0, -1):
        for mult in range(n // part, 0, -1):
            for rest in partitions(n - part * mult, part - 1):
                yield ((part, mult),) + rest


@dataclass(frozen=True)
class CountRow:
    n: int
    k_plus: int
    k_minus: int
    theta_plus: int
    theta_minus: int
    theta: int
    omega: int


@dataclass(frozen=True)
class CountTable:
    rows: tuple[CountRow, ...]
    source: str  # "closed-form" or "oracle"

    @property
    def max_n(self) -> int:
        return len(self.rows)

    def __getitem__(self, n: int) -> CountRow:
        if not 1 <= n <= len(self.rows):
            raise IndexError(n)
        return self.rows[n - 1]

    def column(self, name: str) -> list[int]:
        return [getattr(r, name) for r in self.rows]


def signed_walk_counts(traces_t: TraceTable, traces_s: TraceTable, n: int) -> tuple[int, int]:
    """(K+(n), K-(n)) = ((Tr T^n - Tr S^n)/2, (Tr T^n + Tr S^n)/2)."""
    t, s = traces_t[n], traces_s[n]
    return exact_div(t - s, 2, f"K+({n})"), exact_div(t + s, 2, f"K-({n})")


def omega(traces_s: TraceTable, n: int) -> int:
    """Omega(n) = (1/n) sum_{g | n} mu(g) Tr S^(n/g)."""
    return exact_div(sum(moebius(g) * traces_s[n // g] for g in divisors(n)), n, f"Omega({n})")


def theta_tables(traces_t: TraceTable, traces_s: TraceTable, max_n: int) -> CountTable:
    kp = {}
    km = {}
    for n in range(1, max_n + 1):
        kp[n], km[n] = signed_walk_counts(traces_t, traces_s, n)
    rows = []
    for n in range(1, max_n + 1):
        divs = divisors(n)
        tp = sum(moebius(g) * kp[n // g] for g in divs if g % 2)
        tm = (sum(moebius(g) * kp[n // g] for g in divs if g % 2 == 0)
              + sum(moebius(g) * km[n // g] for g in divs))
        th = sum(moebius(g) * traces_t[n // g] for g in divs)
        rows.append(CountRow(
            n, kp[n], km[n],
            exact_div(tp, n, f"theta+({n})"),
            exact_div(tm, n, f"theta-({n})"),
            exact_div(th, n, f"theta({n})"),
            omega(traces_s, n),
        ))
    return CountTable(tuple(rows), "closed-form")


def walk_counts_from_thetas(table: CountTable, n: int) -> tuple[int, int, int]:
    """Invert the Moebius sums: (K+(n), K-(n), K(n)) rebuilt from class counts.

    K+(n) = sum_{g odd | n} (n/g) theta+(n/g),
    K-(n) = sum_{g even | n} (n/g) theta+(n/g) + sum_{g | n} (n/g) theta-(n/g),
    K(n)  = sum_{g | n} (n/g) theta(n/g).
    """
    kp = km = k = 0
    for g in divisors(n):
        d = n // g
        row = table[d]
        if g % 2:
            kp += d * row.theta_plus
        else:
            km += d * row.theta_plus
        km += d * row.theta_minus
        k += d * row.theta
    return kp, km, k


def omega_from_thetas(theta_plus: Sequence[int], theta_minus: Sequence[int], n: int) -> int:
    """Omega(n) as theta-(n) - theta+(n), plus theta+(n/2) when n is even.

    Sequences are indexed so that ``seq[n-1]`` belongs to n.
    """
    value = theta_minus[n - 1] - theta_plus[n - 1]
    if n % 2 == 0:
        value += theta_plus[n // 2 - 1]
    return value


def witt(n: int, r: int) -> int:
    """Dimension of the degree-n part of the free Lie algebra on r generators."""
    if n < 1 or r < 0:
        raise ValueError("witt needs n >= 1 and r >= 0")
    return exact_div(sum(moebius(g) * r ** (n // g) for g in divisors(n)), n, f"M({n};{r})")


def _branch_sign(branch: str) -> int:
    if branch not in ("plus", "minus"):
        raise ValueError("branch must be 'plus' or 'minus'")
    return 1 if branch == "plus" else -1


def faa_di_bruno_c(traces: TraceTable | Sequence[int], i: int, branch: str) -> int:
    """c+(i) or c-(i) from power traces by a sum over partitions of i.

    The series 1 - sum c+(i) z^i equals exp(-g) and 1 + sum c-(i) z^i equals
    exp(g), with g = sum Tr S^k z^k / k.  The partition with m parts is
    weighted by (-1)^(m+1) on the plus branch and by 1 on the minus branch.
    """
    sign = _branch_sign(branch)
    tr = traces if isinstance(traces, TraceTable) else TraceTable("S", tuple(traces))
    total = Fraction(0)
    for part in partitions(i):
        m = sum(mult for _, mult in part)
        term = Fraction(1)
        for k, a in part:
            term *= Fraction(tr[k] ** a, math.factorial(a) * k**a)
        total += (-1) ** (m + 1) * term if sign > 0 else term
    return exact_div(total, 1, f"c{'+' if sign > 0 else '-'}({i})")


def traces_from_c(c: Sequence[int], branch: str, n: int) -> int:
    """Rebuild Tr S^n from c(1..n) (``c[i-1]`` is c(i)) by a partition sum."""
    sign = _branch_sign(branch)
    total = Fraction(0)
    for part in partitions(n):
        size = sum(mult for _, mult in part)
        term = Fraction(math.factorial(size - 1))
        for i, s in part:
            term *= Fraction(c[i - 1] ** s, math.factorial(s))
        total += sign ** (size + 1) * term
    return exact_div(n * total, 1, f"Tr S^{n}")


@dataclass
class RelationResult:
    name: str
    passed: bool
    first_failure: int | None = None
    detail: str = ""
    kind: str = "identity"  # or "inequality"


@dataclass
class RecursionReport:
    max_n: int
    results: list[RelationResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def identities_passed(self) -> bool:
        return all(r.passed for r in self.results if r.kind == "identity")

    def __getitem__(self, name: str) -> RelationResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def check_recursions(traces_s: TraceTable, euler: Sequence[int], max_n: int) -> RecursionReport:
    """Check the coefficient relations linking Tr S^n, c+-, Omega and a(n).

    ``euler[k]`` is a(k), the number of even subgraphs with k edges.
    """
    w = {n: traces_s[n] for n in range(1, max_n + 1)}
    cp = {n: faa_di_bruno_c(traces_s, n, "plus") for n in range(1, max_n + 1)}
    cm = {n: faa_di_bruno_c(traces_s, n, "minus") for n in range(1, max_n + 1)}
    cp[0] = 0
    om = {n: omega(traces_s, n) for n in range(1, max_n + 1)}

    def a(k: int) -> int:
        return euler[k] if 0 <= k < len(euler) else 0

    def first_bad(pred, start=1) -> int | None:
        for n in range(start, max_n + 1):
            if not pred(n):
                return n
        return None

    report = RecursionReport(max_n)

    def add(name, pred, start=1, kind="identity", detail=""):
        bad = first_bad(pred, start)
        report.results.append(RelationResult(name, bad is None, bad, detail, kind))

    add("seed c(1) = Tr S = Omega(1)",
        lambda n: n > 1 or cp[1] == w[1] == om[1] == cm[1])
    add("Newton recursion, plus branch",
        lambda n: n * cp[n] == w[n] - sum(w[n - k] * cp[k] for k in range(1, n)), start=2)
    add("Newton recursion, minus branch",
        lambda n: n * cm[n] == w[n] + sum(w[n - k] * cm[k] for k in range(1, n)), start=2)
    add("c- from c+ convolution",
        lambda n: cm[n] == cp[n] + sum(cp[i] * cm[n - i] for i in range(1, n)), start=2)
    first = first_bad(lambda n: abs(cp[n]) <= cm[n])
    report.results.append(RelationResult(
        "bound |c+(n)| <= c-(n)", first is None, first,
        "" if first is None else f"|c+({first})| = {abs(cp[first])}, c-({first}) = {cm[first]}",
        "inequality",
    ))
    first = first_bad(lambda n: abs(cp[n]) <= abs(cm[n]))
    report.results.append(RelationResult(
        "magnitude bound |c+(n)| <= |c-(n)|", first is None, first, "", "inequality"))

    def omega_relation(n: int) -> bool:
        rhs = Fraction(cp[n])
        rhs += Fraction(sum(sum(g * om[g] for g in divisors(k)) * cp[n - k] for k in range(1, n)), n)
        rhs -= sum(Fraction(g, n) * om[g] for g in divisors(n) if g != n)
        return rhs == om[n]

    add("Omega from c+ and divisor sums", omega_relation)
    add("Euler coefficients from c+",
        lambda n: 2 * n * a(n) == -n * cp[n] + sum((3 * k - n) * a(k) * cp[n - k] for k in range(1, n + 1)))
    return report


def verify_recursions(g, max_n: int | None = None, tol: float = 1e-6) -> RecursionReport:
    """Run :func:`check_recursions` on a graph, by default up to n = 2|E|."""
    from .euler import euler_polynomial
    from .matrices import GraphMatrices

    n = 2 * g.num_edges if max_n is None else max_n
    gm = GraphMatrices.of(g, n, tol)
    return check_recursions(gm.traces_S, euler_polynomial(g).coeffs, n)
