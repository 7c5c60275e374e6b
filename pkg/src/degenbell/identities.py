"""Split-order recurrences for the Bell-type polynomial families, and grid
verification that ties all three computation routes together.

The headline identities express a polynomial of split order m+n through
triangle entries of order m, deformed powers, and lower-order polynomials;
at lam = 0, r = 0 they collapse to the classical Bell-number recurrence over
set partitions.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .operators import extract_bell_via_operators, extract_rbell_via_operators
from .polyalg import Poly, as_rational, binomial, degenerate_falling_eval
from .report import VerificationReport
from .series import bell_polys_via_series, rbell_polys_via_series
from .triangles import (
    bell_poly_degenerate,
    rbell_poly_degenerate,
    stirling2_degenerate,
    triangle,
)

DEFAULT_LAMBDAS = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(1, 2),
    Fraction(-2, 3),
    Fraction(3),
)


def spivey_bell_terms(m: int, n: int, lam) -> list[tuple[tuple[int, int], Poly]]:
    """The (j, k)-indexed terms of the split-order Bell recurrence, in
    lexicographic order: C(n,k) T(m,j) (j - m*lam)_{n-k} x^j phi_k(x).

    Zero terms are kept so the array lines up index-by-index with the
    classical lam = 0 term array.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    lam = as_rational(lam)
    terms = []
    for j in range(m + 1):
        smj = stirling2_degenerate(m, j, lam)
        xj = Poly.monomial(j)
        for k in range(n + 1):
            c = binomial(n, k) * smj * degenerate_falling_eval(j - m * lam, n - k, lam)
            terms.append(((j, k), xj * bell_poly_degenerate(k, lam) * c))
    return terms


def spivey_rhs_bell(m: int, n: int, lam) -> Poly:
    """Right-hand side of the split-order Bell recurrence, as one polynomial.

    Exact equality with the order-(m+n) polynomial built from the triangle is
    what verify_spivey_bell checks.
    """
    out = Poly.ZERO
    for _, term in spivey_bell_terms(m, n, lam):
        out = out + term
    return out


def classical_spivey_terms(m: int, n: int) -> list[tuple[tuple[int, int], Poly]]:
    """The lam = 0 terms computed directly with plain powers:
    C(n,k) T(m,j) j^(n-k) x^j phi_k(x)."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    terms = []
    for j in range(m + 1):
        smj = stirling2_degenerate(m, j, 0)
        xj = Poly.monomial(j)
        for k in range(n + 1):
            c = binomial(n, k) * smj * Fraction(j) ** (n - k)
            terms.append(((j, k), xj * bell_poly_degenerate(k, 0) * c))
    return terms


def spivey_rhs_rbell(m: int, n: int, r: int, lam) -> Poly:
    """Right-hand side of the split-order recurrence for the r-shifted family:
    sum over k <= m, l <= n of C(n,l) T(m,k) (k - m*lam)_{n-l} x^k phi_l(x),
    with T and phi taken from the (lam, r) triangle."""
    if m < 0 or n < 0 or r < 0:
        raise ValueError("m, n, r must be nonnegative")
    lam = as_rational(lam)
    row = triangle(lam, r).row(m)
    out = Poly.ZERO
    for k in range(m + 1):
        smk = row[k]
        if smk == 0:
            continue
        xk = Poly.monomial(k)
        for l in range(n + 1):
            c = binomial(n, l) * smk * degenerate_falling_eval(k - m * lam, n - l, lam)
            if c == 0:
                continue
            out = out + xk * rbell_poly_degenerate(l, r, lam) * c
    return out


def _classical_rbell_rhs(m: int, n: int, r: int) -> Poly:
    """lam = 0 right-hand side with plain powers k^(n-l) in place of the
    deformed ones."""
    row = triangle(0, r).row(m)
    out = Poly.ZERO
    for k in range(m + 1):
        smk = row[k]
        if smk == 0:
            continue
        xk = Poly.monomial(k)
        for l in range(n + 1):
            c = binomial(n, l) * smk * Fraction(k) ** (n - l)
            out = out + xk * rbell_poly_degenerate(l, r, 0) * c
    return out


def verify_spivey_bell(m_max: int, n_max: int, lambdas) -> VerificationReport:
    """Exact polynomial (plus x = 1 scalar) check of the split-order Bell
    recurrence over the whole grid; an empty lam list passes vacuously."""
    lambdas = [as_rational(v) for v in lambdas]
    report = VerificationReport(
        identity="spivey-bell",
        grid={"m_max": m_max, "n_max": n_max, "lambdas": lambdas},
    )
    start = time.perf_counter()
    for lam in lambdas:
        for m in range(m_max + 1):
            for n in range(n_max + 1):
                target = bell_poly_degenerate(m + n, lam)
                rhs = spivey_rhs_bell(m, n, lam)
                params = {"m": m, "n": n, "lambda": lam}
                report.record(params, target, rhs)
                report.record({**params, "at": "x=1"}, target(1), rhs(1))
    report.elapsed = time.perf_counter() - start
    return report


def verify_spivey_rbell(m_max: int, n_max: int, r_max: int, lambdas) -> VerificationReport:
    """Exact polynomial check of the r-shifted split-order recurrence; at
    lam = 0 the classical plain-power form is checked as well."""
    lambdas = [as_rational(v) for v in lambdas]
    report = VerificationReport(
        identity="spivey-rbell",
        grid={"m_max": m_max, "n_max": n_max, "r_max": r_max, "lambdas": lambdas},
    )
    start = time.perf_counter()
    for lam in lambdas:
        for r in range(r_max + 1):
            for m in range(m_max + 1):
                for n in range(n_max + 1):
                    target = rbell_poly_degenerate(m + n, r, lam)
                    params = {"m": m, "n": n, "r": r, "lambda": lam}
                    report.record(params, target, spivey_rhs_rbell(m, n, r, lam))
                    if lam == 0:
                        report.record(
                            {**params, "form": "classical-powers"},
                            target,
                            _classical_rbell_rhs(m, n, r),
                        )
    report.elapsed = time.perf_counter() - start
    return report


def triple_agreement(n_max: int, r_max: int, lambdas) -> VerificationReport:
    """The triangle recurrences, the series extractions, and the operator
    extractions must produce identical polynomials, for both families."""
    lambdas = [as_rational(v) for v in lambdas]
    report = VerificationReport(
        identity="triple-agreement",
        grid={"n_max": n_max, "r_max": r_max, "lambdas": lambdas},
    )
    start = time.perf_counter()
    for lam in lambdas:
        from_series = bell_polys_via_series(n_max, lam)
        for n in range(n_max + 1):
            from_triangle = bell_poly_degenerate(n, lam)
            params = {"family": "bell", "n": n, "lambda": lam}
            report.record({**params, "pair": "triangle-vs-series"}, from_triangle, from_series[n])
            report.record(
                {**params, "pair": "triangle-vs-operators"},
                from_triangle,
                extract_bell_via_operators(n, lam),
            )
        for r in range(r_max + 1):
            from_series = rbell_polys_via_series(n_max, r, lam)
            for n in range(n_max + 1):
                from_triangle = rbell_poly_degenerate(n, r, lam)
                params = {"family": "rbell", "n": n, "r": r, "lambda": lam}
                report.record({**params, "pair": "triangle-vs-series"}, from_triangle, from_series[n])
                report.record(
                    {**params, "pair": "triangle-vs-operators"},
                    from_triangle,
                    extract_rbell_via_operators(n, r, lam),
                )
    report.elapsed = time.perf_counter() - start
    return report
