"""Truncated formal power series in t with polynomial coefficients in x.

Every family in this package can be read off a generating function here by
exact coefficient extraction. None of these routines touch the triangle
recurrences, so they serve as an independent oracle for them.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .polyalg import Poly, as_rational


class TruncatedSeries:
    """Series sum_{n <= order} c_n t^n with Poly coefficients c_n.

    Arithmetic discards every term beyond t^order; nothing wraps around.
    Binary operations require equal orders. Instances are immutable.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs)
        if len(cs) > order + 1:
            raise ValueError("more coefficients than the truncation order admits")
        for c in cs:
            if not isinstance(c, Poly):
                raise TypeError("coefficients must be Poly values")
        cs.extend([Poly.ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (Poly.ONE,))

    def coefficient(self, n: int) -> Poly:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        """Cauchy product, truncated at the common order."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        n_max = self.order
        out = [Poly.ZERO] * (n_max + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n_max - i + 1):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(n_max, out)

    def scale(self, factor) -> "TruncatedSeries":
        """Multiply every coefficient by a Poly or exact scalar."""
        if not isinstance(factor, Poly):
            factor = Poly.constant(as_rational(factor))
        return TruncatedSeries(self.order, tuple(c * factor for c in self.coeffs))

    def exp(self) -> "TruncatedSeries":
        """exp of a series with zero constant term.

        Uses the derivative recurrence (n+1) E_{n+1} = sum_j (j+1) a_{j+1} E_{n-j}
        (from E' = a' E), keeping the cost quadratic in the order instead of
        summing powers.
        """
        if not self.coeffs[0].is_zero():
            raise ValueError("exp needs a zero constant term")
        n_max = self.order
        out = [Poly.ZERO] * (n_max + 1)
        out[0] = Poly.ONE
        for n in range(n_max):
            acc = Poly.ZERO
            for j in range(n + 1):
                a = self.coeffs[j + 1]
                if a.is_zero():
                    continue
                acc = acc + a * out[n - j] * Fraction(j + 1)
            out[n + 1] = acc * Fraction(1, n + 1)
        return TruncatedSeries(n_max, out)

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={list(self.coeffs)!r})"


def degenerate_exp_series(exponent: Poly, lam, order: int) -> TruncatedSeries:
    """Series whose t^n coefficient is the deformed power of `exponent`, over n!.

    For a constant exponent c the result is the deformed exponential of c;
    exponent x gives the two-variable series generalizing e^{x t} (its
    lam = 0 case).
    """
    lam = as_rational(lam)
    coeffs = []
    prod = Poly.ONE
    for n in range(order + 1):
        coeffs.append(prod * Fraction(1, factorial(n)))
        prod = prod * (exponent - Poly.constant(n * lam))
    return TruncatedSeries(order, coeffs)


def bell_polys_via_series(n_max: int, lam) -> list[Poly]:
    """Bell-type polynomials for n = 0..n_max, read off exp(x * (e_lam(t) - 1)).

    Each entry is n! times the t^n coefficient of the composed series.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    e = degenerate_exp_series(Poly.ONE, lam, n_max)
    inner = (e - TruncatedSeries.one(n_max)).scale(Poly.X)
    egf = inner.exp()
    return [egf.coefficient(n) * Fraction(factorial(n)) for n in range(n_max + 1)]


def rbell_polys_via_series(n_max: int, r: int, lam) -> list[Poly]:
    """Shifted Bell-type polynomials: the Bell series times the deformed
    exponential of the constant r, extracted the same way."""
    if n_max < 0 or r < 0:
        raise ValueError("n_max and r must be nonnegative")
    e = degenerate_exp_series(Poly.ONE, lam, n_max)
    inner = (e - TruncatedSeries.one(n_max)).scale(Poly.X)
    egf = inner.exp() * degenerate_exp_series(Poly.constant(r), lam, n_max)
    return [egf.coefficient(n) * Fraction(factorial(n)) for n in range(n_max + 1)]


def stirling_rows_via_series(n_max: int, k: int, r: int, lam) -> list[Fraction]:
    """Triangle column k for n = k..n_max from its generating function
    (e_lam(t) - 1)^k / k! times the deformed exponential of r."""
    if k < 0 or r < 0:
        raise ValueError("k and r must be nonnegative")
    if n_max < k:
        raise ValueError("n_max must be at least k")
    e = degenerate_exp_series(Poly.ONE, lam, n_max)
    u = e - TruncatedSeries.one(n_max)
    p = TruncatedSeries.one(n_max)
    for _ in range(k):
        p = p * u
    p = p.scale(Fraction(1, factorial(k))) * degenerate_exp_series(Poly.constant(r), lam, n_max)
    out = []
    for n in range(k, n_max + 1):
        c = p.coefficient(n)
        if c.degree > 0:  # all inputs are scalar series: unreachable
            raise AssertionError("column series must have scalar coefficients")
        out.append(c.coefficient(0) * factorial(n))
    return out
