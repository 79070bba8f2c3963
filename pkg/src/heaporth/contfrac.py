"""Finite J-fraction convergents and their series expansions.

The depth-n convergent is the rational function obtained by cutting the
continued fraction

    1 / (1 - c_0 x - lambda_1 x^2 / (1 - c_1 x - lambda_2 x^2 / ( ... )))

after the level containing c_n.  Convergents are normalized so the
denominator's constant term is 1, which turns the identities relating them
to the reversed basis polynomials into plain cross-multiplications.

The series of the full fraction agrees with a convergent well past the
cut -- the coefficient of x^k is stable once 2n + 1 >= k -- so moments can
be read off a sufficiently deep convergent by exact long division.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basis import CoeffSpec, generate_basis
from .poly import UniPoly, reciprocal_poly
from .series import RationalFn, TruncatedSeries


@dataclass(frozen=True)
class Convergent:
    """Depth-n cut of the J-fraction, as an exact rational function."""

    n: int
    spec: CoeffSpec
    value: RationalFn


def convergent(n: int, spec: CoeffSpec) -> Convergent:
    """Build the depth-n convergent bottom-up.

    Starting from R = 1 - c_n x, each level wraps
    R <- (1 - c_k x) - lambda_{k+1} x^2 / R; the convergent is 1/R.
    """
    if n < 0:
        raise ValueError("depth must be >= 0")
    x2 = UniPoly.monomial(2)
    r_num = UniPoly((1, -spec.c(n)))
    r_den = UniPoly.one()
    for k in range(n - 1, -1, -1):
        head = UniPoly((1, -spec.c(k)))
        r_num, r_den = head * r_num - spec.lam(k + 1) * x2 * r_den, r_num
    value = RationalFn(r_den, r_num).normalized()
    return Convergent(n, spec, value)


def convergent_qstar_identity(n: int, spec: CoeffSpec) -> bool:
    """Does the depth-n convergent equal S Q_n* / Q_{n+1}*?

    Q_k* is the degree-k reversal of the basis polynomial Q_k, and S views
    the coefficient sequences shifted by one index.  Checked by exact
    cross-multiplication.
    """
    j = convergent(n, spec).value
    basis = generate_basis(n + 1, spec)
    shifted_basis = generate_basis(n, spec.shifted())
    q_next_star = reciprocal_poly(basis.poly(n + 1), n + 1)
    s_qn_star = reciprocal_poly(shifted_basis.poly(n), n)
    return j.num * q_next_star == s_qn_star * j.den


def convergent_difference(n: int, spec: CoeffSpec) -> bool:
    """Does J(n) - J(n-1) equal lambda_1...lambda_n x^(2n) / (Q_n* Q_{n+1}*)?

    Compared cross-multiplied, without reducing either side to lowest terms.
    """
    if n < 1:
        raise ValueError("difference needs depth >= 1")
    lhs = convergent(n, spec).value - convergent(n - 1, spec).value
    basis = generate_basis(n + 1, spec)
    qn_star = reciprocal_poly(basis.poly(n), n)
    q_next_star = reciprocal_poly(basis.poly(n + 1), n + 1)
    rhs = RationalFn(
        UniPoly.monomial(2 * n, spec.lam_product(n)), qn_star * q_next_star
    )
    return lhs == rhs


def j_series(order: int, spec: CoeffSpec) -> TruncatedSeries:
    """Moment generating series to the requested order.

    Expands a convergent deep enough that every returned coefficient is
    already stable (depth m with 2m + 1 >= order).
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    depth = (order + 1) // 2
    return convergent(depth, spec).value.series(order)


def cfrac_latex(depth: int, spec: CoeffSpec) -> str:
    """Nested \\cfrac display of the depth-n cut under the given spec."""
    if depth < 0:
        raise ValueError("depth must be >= 0")

    def head(k: int) -> str:
        p = UniPoly((1, -spec.c(k)))
        return p.to_latex()

    def level(k: int) -> str:
        if k == depth:
            return head(k)
        lam = spec.lam(k + 1)
        numerator = UniPoly.monomial(2, lam)
        if lam.is_constant and lam.constant_value() < 0:
            sign = "+"
            numerator = -numerator
        else:
            sign = "-"
        return f"{head(k)} {sign} \\cfrac{{{numerator.to_latex()}}}{{{level(k + 1)}}}"

    return f"\\cfrac{{1}}{{{level(0)}}}"
