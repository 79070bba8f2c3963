"""Truncated formal power series and exact rational functions.

A TruncatedSeries fixes an order N up front and stores coefficients for
powers 0..N of its main variable; arithmetic never pretends to know anything
past the declared order (combining two series truncates to the shorter one,
and reading past the order raises rather than returning a silent zero).

A RationalFn is a numerator/denominator pair of UniPoly values whose
denominator is nonzero at 0, which is exactly the condition for a power
series expansion at the origin to exist.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .poly import Indeterminate, MultiPoly, UniPoly, X, as_multipoly


class NonExpandableError(ArithmeticError):
    """Series expansion at 0 is impossible (denominator vanishes there)."""


class TruncatedSeries:
    """Power series known exactly up to a declared order."""

    __slots__ = ("_coeffs", "var")

    def __init__(self, coeffs: Iterable[object], var: Indeterminate = X):
        lst = [as_multipoly(c) for c in coeffs]
        if not lst:
            raise ValueError("a series needs at least the constant coefficient")
        for c in lst:
            if c.contains(var):
                raise ValueError("coefficient mentions the series variable")
        self._coeffs = tuple(lst)
        self.var = var

    @classmethod
    def zero(cls, order: int, var: Indeterminate = X) -> "TruncatedSeries":
        return cls([0] * (order + 1), var)

    @classmethod
    def one(cls, order: int, var: Indeterminate = X) -> "TruncatedSeries":
        return cls([1] + [0] * order, var)

    @classmethod
    def from_unipoly(cls, p: UniPoly, order: int) -> "TruncatedSeries":
        coeffs = [p.coeff(k) for k in range(order + 1)]
        return cls(coeffs, p.var)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[MultiPoly, ...]:
        return self._coeffs

    def coefficient(self, n: int) -> MultiPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond declared order {self.order}")
        return self._coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise IndexError(f"cannot extend a series from order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1], self.var)

    def map_coefficients(
        self, fn: Callable[[MultiPoly], MultiPoly]
    ) -> "TruncatedSeries":
        return TruncatedSeries((fn(c) for c in self._coeffs), self.var)

    # -- arithmetic (result order = shorter operand) -------------------------

    def _coerce(self, other: object) -> "TruncatedSeries | None":
        if isinstance(other, TruncatedSeries):
            if other.var != self.var:
                raise ValueError("mixed series variables")
            return other
        try:
            p = as_multipoly(other)
        except TypeError:
            return None
        return TruncatedSeries([p] + [MultiPoly.zero()] * self.order, self.var)

    def __add__(self, other: object) -> "TruncatedSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return TruncatedSeries(
            (self._coeffs[k] + o._coeffs[k] for k in range(n + 1)), self.var
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries((-c for c in self._coeffs), self.var)

    def __sub__(self, other: object) -> "TruncatedSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "TruncatedSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "TruncatedSeries":
        if isinstance(other, UniPoly):
            other = TruncatedSeries.from_unipoly(other, self.order)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        out = [MultiPoly.zero()] * (n + 1)
        for i in range(n + 1):
            a = self._coeffs[i]
            if a.is_zero:
                continue
            for j in range(n + 1 - i):
                b = o._coeffs[j]
                if b.is_zero:
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, self.var)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.var == other.var and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.var, self._coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries({self})"

    def __str__(self) -> str:
        poly = UniPoly(self._coeffs, self.var)
        head = str(poly) if not poly.is_zero else "0"
        return f"{head} + O({self.var}^{self.order + 1})"


def series_div(num: UniPoly, den: UniPoly, order: int) -> TruncatedSeries:
    """Power series of num/den at 0, exact up to the requested order.

    The denominator must have a nonzero rational constant term.
    """
    if num.var != den.var:
        raise ValueError("mixed main variables")
    if order < 0:
        raise ValueError("order must be nonnegative")
    d0 = den.coeff(0)
    if d0.is_zero:
        raise NonExpandableError("denominator vanishes at 0")
    if not d0.is_constant:
        raise NonExpandableError(
            "denominator constant term must be a nonzero rational"
        )
    inv = 1 / d0.constant_value()
    out: list[MultiPoly] = []
    dmax = den.degree
    for n in range(order + 1):
        acc = num.coeff(n)
        for k in range(1, min(n, dmax) + 1):
            acc = acc - den.coeff(k) * out[n - k]
        out.append(acc * inv)
    return TruncatedSeries(out, num.var)


class RationalFn:
    """Quotient of two UniPoly values, expandable as a series at 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly):
        if num.var != den.var:
            raise ValueError("mixed main variables")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if den.coeff(0).is_zero:
            raise NonExpandableError("denominator must be nonzero at 0")
        self.num = num
        self.den = den

    @property
    def var(self) -> Indeterminate:
        return self.num.var

    def normalized(self) -> "RationalFn":
        """Scale so the denominator's constant term is exactly 1."""
        c = self.den.coeff(0)
        if not c.is_constant:
            raise ValueError("cannot normalize by a symbolic constant term")
        inv = 1 / c.constant_value()
        return RationalFn(self.num * inv, self.den * inv)

    def series(self, order: int) -> TruncatedSeries:
        return series_div(self.num, self.den, order)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        if not isinstance(other, RationalFn):
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        if not isinstance(other, RationalFn):
            return NotImplemented
        return RationalFn(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        # cross-multiplied comparison; no polynomial gcd anywhere
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFn({self})"

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"
