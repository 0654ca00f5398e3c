"""Truncated formal power series with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Number = int | Fraction


class ZeroConstantTerm(ZeroDivisionError):
    pass


class BadConstantTerm(ValueError):
    pass


@dataclass(frozen=True)
class RationalSeries:
    """``sum coeffs[k] z^k + O(z^(order+1))``.

    Binary operations truncate to the smaller of the two orders.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number], order: int) -> RationalSeries:
        c = list(coeffs)[: order + 1]
        c += [0] * (order + 1 - len(c))
        return cls(tuple(c))

    @classmethod
    def one(cls, order: int) -> RationalSeries:
        return cls.from_coeffs([1], order)

    @classmethod
    def zero(cls, order: int) -> RationalSeries:
        return cls.from_coeffs([0], order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def truncate(self, order: int) -> RationalSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series known to O(z^{self.order + 1})")
        return RationalSeries(self.coeffs[: order + 1])

    def _align(self, other: RationalSeries) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...], int]:
        n = min(self.order, other.order)
        return self.coeffs[: n + 1], other.coeffs[: n + 1], n

    def __add__(self, other: RationalSeries) -> RationalSeries:
        a, b, _ = self._align(other)
        return RationalSeries(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> RationalSeries:
        return RationalSeries(tuple(-x for x in self.coeffs))

    def __sub__(self, other: RationalSeries) -> RationalSeries:
        return self + (-other)

    def __mul__(self, other: RationalSeries | Number) -> RationalSeries:
        if not isinstance(other, RationalSeries):
            k = Fraction(other)
            return RationalSeries(tuple(k * x for x in self.coeffs))
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalSeries) -> RationalSeries:
        return mul(self, inverse(other))

    def __pow__(self, k: int) -> RationalSeries:
        if k < 0:
            return inverse(self) ** (-k)
        out = RationalSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def substitute_power(self, k: int) -> RationalSeries:
        """``f(z^k)`` truncated at the same order."""
        out = [Fraction(0)] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if i * k > self.order:
                break
            out[i * k] = c
        return RationalSeries(tuple(out))

    def first_mismatch(self, other: RationalSeries) -> int | None:
        a, b, _ = self._align(other)
        for k, (x, y) in enumerate(zip(a, b)):
            if x != y:
                return k
        return None

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else (" z" if k == 1 else f" z^{k}")
            terms.append(f"{c}{mono}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"{body} [O(z^{self.order + 1})]"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def mul(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    x, y, n = a._align(b)
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(x):
        if ai:
            for j in range(n + 1 - i):
                if y[j]:
                    out[i + j] += ai * y[j]
    return RationalSeries(tuple(out))


def inverse(a: RationalSeries) -> RationalSeries:
    a0 = a[0]
    if a0 == 0:
        raise ZeroConstantTerm("series with zero constant term has no inverse")
    n = a.order
    b = [Fraction(0)] * (n + 1)
    b[0] = 1 / a0
    for k in range(1, n + 1):
        s = sum((a[i] * b[k - i] for i in range(1, k + 1)), Fraction(0))
        b[k] = -s / a0
    return RationalSeries(tuple(b))


def derivative(a: RationalSeries) -> RationalSeries:
    """Formal derivative; the result is known to one order less."""
    if a.order == 0:
        return RationalSeries((Fraction(0),))
    return RationalSeries(tuple(k * a[k] for k in range(1, a.order + 1)))


def log(a: RationalSeries) -> RationalSeries:
    """Formal logarithm of a series with constant term 1."""
    if a[0] != 1:
        raise BadConstantTerm("log needs constant term 1")
    n = a.order
    # z (log a)' = z a' / a, so k l_k = k a_k - sum_{i<k} i l_i a_{k-i}
    l = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        s = k * a[k] - sum((i * l[i] * a[k - i] for i in range(1, k)), Fraction(0))
        l[k] = s / k
    return RationalSeries(tuple(l))


def exp(a: RationalSeries) -> RationalSeries:
    """Formal exponential of a series with constant term 0."""
    if a[0] != 0:
        raise BadConstantTerm("exp needs constant term 0")
    n = a.order
    e = [Fraction(0)] * (n + 1)
    e[0] = Fraction(1)
    for k in range(1, n + 1):
        e[k] = sum((i * a[i] * e[k - i] for i in range(1, k + 1)), Fraction(0)) / k
    return RationalSeries(tuple(e))


def generalized_binomial(e: int, k: int) -> int:
    """C(e, k) for any integer e (negative e gives the inverse-power series)."""
    num = 1
    den = 1
    for j in range(k):
        num *= e - j
        den *= j + 1
    return num // den


def product_form(factors: Iterable[tuple[int, int, int]], order: int) -> RationalSeries:
    """Truncated ``prod (1 + sign z^N)^e`` over ``(N, sign, e)`` triples.

    Each factor is expanded with (generalized) binomial coefficients, so
    negative exponents need no inversion.
    """
    out = RationalSeries.one(order)
    for n, sign, e in factors:
        if n < 1:
            raise ValueError("factor degree must be >= 1")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if e == 0 or n > order:
            continue
        c = [0] * (order + 1)
        for k in range(order // n + 1):
            c[k * n] = generalized_binomial(e, k) * sign**k
        out = mul(out, RationalSeries.from_coeffs(c, order))
    return out


def from_poly(coeffs: Sequence[int], order: int) -> RationalSeries:
    return RationalSeries.from_coeffs(coeffs, order)
