"""Exact sparse multivariate polynomials over the rationals.

The variable universe is fixed once and for all: ``x`` (the main recursion
variable), ``t`` (an auxiliary generating-function variable), and the two
infinite indexed families ``c0, c1, c2, ...`` and ``l1, l2, l3, ...``.
Variables are totally ordered

    x < t < c0 < c1 < ... < l1 < l2 < ...

and monomials are compared graded-lexicographically against that order
(total degree first, then the earliest variable with the larger exponent
wins).  That single order fixes term printing, JSON layout and leading-term
selection, so equal polynomials always render identically.

Coefficients are ``fractions.Fraction`` throughout; nothing in this module
ever rounds.  A monomial is stored as a tuple of ``(Indeterminate, exponent)``
pairs sorted by the variable order, with no zero exponents; the polynomial
itself is a map from monomials to nonzero coefficients.  All values are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

BigRational = Fraction

Rat = Union[int, Fraction]

_KIND_RANK = {"x": 0, "t": 1, "c": 2, "l": 3}


def _as_coeff(value: object) -> Rat:
    """Normalize a coefficient: exact, and a plain int whenever integral.

    Integer coefficients dominate in practice and plain int arithmetic is
    far cheaper than Fraction's; mixing the two is safe because Python
    defines == and hash consistently across them.
    """
    if isinstance(value, int):
        return value
    if not isinstance(value, Fraction):
        value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


class InexactDivisionError(ArithmeticError):
    """Raised when an exact polynomial quotient does not exist."""


class DegreeError(ValueError):
    """Raised when a polynomial exceeds the degree bound of an operation."""


class Indeterminate:
    """A variable of kind ``x``, ``t``, ``c`` or ``l`` plus an index.

    ``x`` and ``t`` carry no index; ``c`` indices start at 0 and ``l``
    indices at 1.  Instances are immutable; the sort key and hash are
    precomputed because monomial arithmetic leans on them heavily.
    """

    __slots__ = ("kind", "index", "_key", "_hash")

    def __init__(self, kind: str, index: int = 0):
        if kind not in _KIND_RANK:
            raise ValueError(f"unknown indeterminate kind {kind!r}")
        if kind in ("x", "t") and index != 0:
            raise IndexError(f"{kind!r} carries no index")
        if kind == "c" and index < 0:
            raise IndexError("c index must be >= 0")
        if kind == "l" and index < 1:
            raise IndexError("l index must be >= 1")
        self.kind = kind
        self.index = index
        self._key = (_KIND_RANK[kind], index)
        self._hash = hash(self._key)

    @property
    def sort_key(self) -> tuple[int, int]:
        return self._key

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Indeterminate):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if self.kind in ("x", "t"):
            return self.kind
        return f"{self.kind}{self.index}"

    def __repr__(self) -> str:
        return f"Indeterminate({self.kind!r}, {self.index})"

    def to_latex(self) -> str:
        if self.kind in ("x", "t"):
            return self.kind
        if self.kind == "c":
            return f"c_{{{self.index}}}"
        return f"\\lambda_{{{self.index}}}"

    @classmethod
    def parse(cls, text: str) -> "Indeterminate":
        if text == "x":
            return X
        if text == "t":
            return T
        if len(text) >= 2 and text[0] in ("c", "l") and text[1:].isdigit():
            return cls(text[0], int(text[1:]))
        raise ValueError(f"cannot parse indeterminate {text!r}")


X = Indeterminate("x")
T = Indeterminate("t")


@lru_cache(maxsize=None)
def c_var(i: int) -> Indeterminate:
    return Indeterminate("c", i)


@lru_cache(maxsize=None)
def lam_var(i: int) -> Indeterminate:
    return Indeterminate("l", i)


# A monomial: ((var, exp), ...) sorted by var order, exponents > 0.
Mono = tuple[tuple[Indeterminate, int], ...]

_EMPTY_MONO: Mono = ()


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    out: list[tuple[Indeterminate, int]] = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        ka, kb = va._key, vb._key
        if ka == kb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif ka < kb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_div(a: Mono, b: Mono) -> Mono | None:
    """a / b, or None when b does not divide a."""
    rem = dict(a)
    for v, e in b:
        have = rem.get(v, 0)
        if have < e:
            return None
        if have == e:
            del rem[v]
        else:
            rem[v] = have - e
    return tuple(sorted(rem.items(), key=lambda p: p[0]._key))


def _mono_deg(m: Mono) -> int:
    return sum(e for _, e in m)


def _mono_cmp(a: Mono, b: Mono) -> int:
    """Graded lexicographic comparison; positive when a > b."""
    da, db = _mono_deg(a), _mono_deg(b)
    if da != db:
        return 1 if da > db else -1
    i = j = 0
    while i < len(a) or j < len(b):
        if j >= len(b) or (i < len(a) and a[i][0]._key < b[j][0]._key):
            return 1  # a owns the earliest differing variable
        if i >= len(a) or b[j][0]._key < a[i][0]._key:
            return -1
        ea, eb = a[i][1], b[j][1]
        if ea != eb:
            return 1 if ea > eb else -1
        i += 1
        j += 1
    return 0


class MultiPoly:
    """Sparse exact polynomial in the fixed variable universe.

    Instances are immutable; arithmetic returns new objects.  Plain ints and
    Fractions coerce automatically in mixed expressions.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Mono, Rat] | None = None):
        clean: dict[Mono, Rat] = {}
        if terms:
            for mono, coeff in terms.items():
                q = _as_coeff(coeff)
                if q:
                    clean[mono] = q
        self._terms = clean
        self._hash: int | None = None

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "MultiPoly":
        return _ONE

    @classmethod
    def const(cls, value: Rat) -> "MultiPoly":
        return cls({_EMPTY_MONO: _as_coeff(value)})

    @classmethod
    def variable(cls, ind: Indeterminate) -> "MultiPoly":
        return _variable_poly(ind)

    @classmethod
    def x(cls) -> "MultiPoly":
        return cls.variable(X)

    @classmethod
    def t(cls) -> "MultiPoly":
        return cls.variable(T)

    @classmethod
    def c(cls, i: int) -> "MultiPoly":
        return cls.variable(c_var(i))

    @classmethod
    def lam(cls, i: int) -> "MultiPoly":
        return cls.variable(lam_var(i))

    @classmethod
    def from_terms(
        cls, terms: Iterable[tuple[Rat, Mapping[Indeterminate, int]]]
    ) -> "MultiPoly":
        """Build from (coefficient, {variable: exponent}) pairs."""
        acc: dict[Mono, Rat] = {}
        for coeff, powers in terms:
            mono = tuple(
                sorted(
                    ((v, e) for v, e in powers.items() if e != 0),
                    key=lambda p: p[0].sort_key,
                )
            )
            for v, e in mono:
                if e < 0:
                    raise ValueError("negative exponent")
            acc[mono] = acc.get(mono, 0) + Fraction(coeff)
        return cls(acc)

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _EMPTY_MONO in self._terms)

    def constant_value(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self}")
        return Fraction(self._terms[_EMPTY_MONO])

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        return max(_mono_deg(m) for m in self._terms)

    def contains(self, ind: Indeterminate) -> bool:
        return any(v == ind for m in self._terms for v, _ in m)

    def variables(self) -> list[Indeterminate]:
        seen = {v for m in self._terms for v, _ in m}
        return sorted(seen, key=lambda v: v.sort_key)

    def items(self) -> Iterator[tuple[Mono, Rat]]:
        return iter(self._terms.items())

    def coefficient(self, powers: Mapping[Indeterminate, int]) -> Fraction:
        mono = tuple(
            sorted(
                ((v, e) for v, e in powers.items() if e != 0),
                key=lambda p: p[0].sort_key,
            )
        )
        return Fraction(self._terms.get(mono, 0))

    def _leading(self) -> tuple[Mono, Rat]:
        best: Mono | None = None
        for m in self._terms:
            if best is None or _mono_cmp(m, best) > 0:
                best = m
        assert best is not None
        return best, self._terms[best]

    def _sorted_terms(self) -> list[tuple[Mono, Rat]]:
        """Terms in descending canonical order."""
        monos = list(self._terms)
        # insertion sort via pairwise comparison keeps this dependency-free;
        # term counts here are small enough that O(n^2) is irrelevant
        import functools

        monos.sort(key=functools.cmp_to_key(_mono_cmp), reverse=True)
        return [(m, self._terms[m]) for m in monos]

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(value: object) -> "MultiPoly | None":
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return MultiPoly.const(value)
        return None

    @classmethod
    def _raw(cls, terms: dict[Mono, Rat]) -> "MultiPoly":
        """Wrap an already-canonical term dict without copying."""
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def sum(cls, parts: Iterable["MultiPoly | Rat"]) -> "MultiPoly":
        """Sum many polynomials with a single accumulator.

        Equivalent to repeated ``+`` but linear in the total term count,
        which matters when thousands of path weights are collected.
        """
        out: dict[Mono, Rat] = {}
        for part in parts:
            p = cls._coerce(part)
            if p is None:
                raise TypeError(f"cannot interpret {part!r} as a polynomial")
            for m, q in p._terms.items():
                s = out.get(m)
                if s is None:
                    out[m] = q
                else:
                    s = s + q
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return cls._raw(out)

    def __add__(self, other: object) -> "MultiPoly":
        o = MultiPoly._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, q in o._terms.items():
            s = out.get(m, 0) + q
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({m: -q for m, q in self._terms.items()})

    def __sub__(self, other: object) -> "MultiPoly":
        o = MultiPoly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "MultiPoly":
        o = MultiPoly._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "MultiPoly":
        o = MultiPoly._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[Mono, Rat] = {}
        for ma, qa in self._terms.items():
            for mb, qb in o._terms.items():
                m = _mono_mul(ma, mb)
                s = out.get(m, 0) + qa * qb
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, divisor: "MultiPoly | Rat") -> "MultiPoly":
        """Exact quotient self/divisor; raises InexactDivisionError otherwise."""
        d = MultiPoly._coerce(divisor)
        if d is None:
            raise TypeError("divisor must be a polynomial or rational")
        if d.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if d.is_constant:
            dv = d.constant_value()
            if dv == 1:
                return self
            if dv == -1:
                return -self
            return self * (1 / dv)
        quot: dict[Mono, Rat] = {}
        rem = self
        lead_m, lead_q = d._leading()
        while not rem.is_zero:
            rm, rq = rem._leading()
            tm = _mono_div(rm, lead_m)
            if tm is None:
                raise InexactDivisionError(f"{d} does not divide {self}")
            tq = Fraction(rq) / lead_q
            quot[tm] = quot.get(tm, 0) + tq
            rem = rem - MultiPoly({tm: tq}) * d
        return MultiPoly(quot)

    # -- structural maps -----------------------------------------------------

    def substitute(
        self, mapping: Mapping[Indeterminate, "MultiPoly | Rat"]
    ) -> "MultiPoly":
        """Simultaneously replace variables by polynomials or rationals."""
        repl: dict[Indeterminate, MultiPoly] = {}
        for ind, value in mapping.items():
            v = MultiPoly._coerce(value)
            if v is None:
                raise TypeError(f"cannot substitute {value!r}")
            repl[ind] = v

        def term_image(mono: Mono, coeff: Fraction) -> MultiPoly:
            term = MultiPoly.const(coeff)
            for ind, exp in mono:
                base = repl.get(ind)
                if base is None:
                    base = MultiPoly.variable(ind)
                term = term * base**exp
            return term

        return MultiPoly.sum(
            term_image(mono, coeff) for mono, coeff in self._terms.items()
        )

    def shift_indexed(self) -> "MultiPoly":
        """Bump every c_i to c_{i+1} and every l_i to l_{i+1}; x, t untouched."""
        out: dict[Mono, Rat] = {}
        for mono, coeff in self._terms.items():
            new = tuple(
                (c_var(v.index + 1) if v.kind == "c"
                 else lam_var(v.index + 1) if v.kind == "l"
                 else v, e)
                for v, e in mono
            )
            out[new] = coeff
        return MultiPoly(out)

    # -- comparison / rendering ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        o = MultiPoly._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for mono, coeff in self._sorted_terms():
            mag = abs(coeff)
            body = _render_term(mag, mono, star="*", power="^")
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(parts)

    def to_latex(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for mono, coeff in self._sorted_terms():
            mag = abs(coeff)
            body = _render_term_latex(mag, mono)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(parts)

    # -- JSON ------------------------------------------------------------------

    def to_json_dict(self) -> dict:
        terms = []
        for mono, coeff in self._sorted_terms():
            powers = {str(v): e for v, e in mono}
            terms.append(
                {"coeff": f"{coeff.numerator}/{coeff.denominator}", "powers": powers}
            )
        return {"terms": terms}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "MultiPoly":
        acc: dict[Mono, Rat] = {}
        for entry in data["terms"]:
            coeff = Fraction(entry["coeff"])
            mono = tuple(
                sorted(
                    ((Indeterminate.parse(name), int(e))
                     for name, e in entry["powers"].items()),
                    key=lambda p: p[0].sort_key,
                )
            )
            acc[mono] = acc.get(mono, 0) + coeff
        return cls(acc)


_ZERO = MultiPoly()
_ONE = MultiPoly({_EMPTY_MONO: 1})


@lru_cache(maxsize=None)
def _variable_poly(ind: Indeterminate) -> MultiPoly:
    return MultiPoly({((ind, 1),): 1})


def _render_term(mag: Rat, mono: Mono, star: str, power: str) -> str:
    vars_part = star.join(
        str(v) if e == 1 else f"{v}{power}{e}" for v, e in mono
    )
    if not vars_part:
        return str(mag)
    if mag == 1:
        return vars_part
    return f"{mag}{star}{vars_part}"


def _render_term_latex(mag: Rat, mono: Mono) -> str:
    vars_part = " ".join(
        v.to_latex() if e == 1 else f"{v.to_latex()}^{{{e}}}" for v, e in mono
    )
    if mag.denominator == 1:
        mag_part = str(mag.numerator)
    else:
        mag_part = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
    if not vars_part:
        return mag_part
    if mag == 1:
        return vars_part
    return f"{mag_part} {vars_part}"


def as_multipoly(value: object) -> MultiPoly:
    p = MultiPoly._coerce(value)
    if p is None:
        raise TypeError(f"cannot interpret {value!r} as a polynomial")
    return p


class UniPoly:
    """Dense polynomial in one distinguished variable (``x`` by default).

    Coefficients are MultiPoly values that must not mention the main
    variable; the coefficient at index k multiplies var**k.  The zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs", "var")

    def __init__(self, coeffs: Iterable[object] = (), var: Indeterminate = X):
        lst = [as_multipoly(c) for c in coeffs]
        for c in lst:
            if c.contains(var):
                raise ValueError(f"coefficient {c} mentions the main variable {var}")
        while lst and lst[-1].is_zero:
            lst.pop()
        self._coeffs = tuple(lst)
        self.var = var

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, var: Indeterminate = X) -> "UniPoly":
        return cls((), var)

    @classmethod
    def one(cls, var: Indeterminate = X) -> "UniPoly":
        return cls((1,), var)

    @classmethod
    def const(cls, value: object, var: Indeterminate = X) -> "UniPoly":
        return cls((value,), var)

    @classmethod
    def monomial(cls, k: int, coeff: object = 1, var: Indeterminate = X) -> "UniPoly":
        if k < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * k + (coeff,), var)

    @classmethod
    def from_multipoly(cls, p: MultiPoly, var: Indeterminate = X) -> "UniPoly":
        """Collect a MultiPoly by powers of var."""
        buckets: dict[int, dict[Mono, Rat]] = {}
        for mono, coeff in p.items():
            k = 0
            rest = []
            for v, e in mono:
                if v == var:
                    k = e
                else:
                    rest.append((v, e))
            buckets.setdefault(k, {})[tuple(rest)] = coeff
        if not buckets:
            return cls.zero(var)
        top = max(buckets)
        coeffs = [MultiPoly(buckets.get(k, {})) for k in range(top + 1)]
        return cls(coeffs, var)

    # -- queries -------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def coeffs(self) -> tuple[MultiPoly, ...]:
        return self._coeffs

    def coeff(self, k: int) -> MultiPoly:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return MultiPoly.zero()

    def to_multipoly(self) -> MultiPoly:
        out = MultiPoly.zero()
        xk = MultiPoly.one()
        v = MultiPoly.variable(self.var)
        for c in self._coeffs:
            out = out + c * xk
            xk = xk * v
        return out

    # -- arithmetic ------------------------------------------------------------

    def _coerce_other(self, other: object) -> "UniPoly | None":
        if isinstance(other, UniPoly):
            if other.var != self.var:
                raise ValueError("mixed main variables")
            return other
        p = MultiPoly._coerce(other)
        if p is None:
            return None
        return UniPoly((p,), self.var)

    def __add__(self, other: object) -> "UniPoly":
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        n = max(len(self._coeffs), len(o._coeffs))
        return UniPoly(
            (self.coeff(k) + o.coeff(k) for k in range(n)), self.var
        )

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly((-c for c in self._coeffs), self.var)

    def __sub__(self, other: object) -> "UniPoly":
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "UniPoly":
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "UniPoly":
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return UniPoly.zero(self.var)
        out = [MultiPoly.zero()] * (len(self._coeffs) + len(o._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(o._coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = UniPoly.one(self.var)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- structural maps ---------------------------------------------------------

    def reciprocal(self, n: int) -> "UniPoly":
        """Degree-n reversal var**n * p(1/var); requires degree <= n."""
        if self.degree > n:
            raise DegreeError(f"degree {self.degree} exceeds bound {n}")
        padded = list(self._coeffs) + [MultiPoly.zero()] * (n + 1 - len(self._coeffs))
        return UniPoly(reversed(padded), self.var)

    def shift_indexed(self) -> "UniPoly":
        return UniPoly((c.shift_indexed() for c in self._coeffs), self.var)

    def substitute(
        self, mapping: Mapping[Indeterminate, "MultiPoly | Rat"]
    ) -> "UniPoly":
        if any(v == self.var for v in mapping):
            raise ValueError("cannot substitute the main variable")
        return UniPoly((c.substitute(mapping) for c in self._coeffs), self.var)

    def evaluate(self, value: Rat) -> Fraction:
        """Exact evaluation at a rational point; coefficients must be constant."""
        v = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * v + c.constant_value()
        return acc

    def evaluate_float(self, value: float) -> float:
        acc = 0.0
        for c in reversed(self._coeffs):
            acc = acc * value + float(c.constant_value())
        return acc

    # -- comparison / rendering ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        o = self._coerce_other(other) if not isinstance(other, UniPoly) else other
        if o is None:
            return NotImplemented
        return self.var == o.var and self._coeffs == o._coeffs

    def __hash__(self) -> int:
        return hash((self.var, self._coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        return self._render(latex=False)

    def to_latex(self) -> str:
        return self._render(latex=True)

    def _render(self, latex: bool) -> str:
        if self.is_zero:
            return "0"
        var_name = self.var.to_latex() if latex else str(self.var)
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if c.is_zero:
                continue
            sign, body = _render_unipoly_piece(c, k, var_name, latex)
            if not parts:
                parts.append(body if sign > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if sign > 0 else f" - {body}")
        return "".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "var": str(self.var),
            "coeffs": [c.to_json_dict() for c in self._coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "UniPoly":
        var = Indeterminate.parse(data["var"])
        return cls((MultiPoly.from_json_dict(c) for c in data["coeffs"]), var)


def _render_unipoly_piece(
    c: MultiPoly, k: int, var_name: str, latex: bool
) -> tuple[int, str]:
    """Render c * var**k as (sign, unsigned text)."""
    xpart = ""
    if k == 1:
        xpart = var_name
    elif k > 1:
        xpart = f"{var_name}^{{{k}}}" if latex else f"{var_name}^{k}"
    terms = c._sorted_terms()
    if len(terms) == 1:
        mono, coeff = terms[0]
        mag = abs(coeff)
        if latex:
            body = _render_term_latex(mag, mono)
        else:
            body = _render_term(mag, mono, star="*", power="^")
        if xpart:
            if mag == 1 and not mono:
                body = xpart
            else:
                body = f"{body} {xpart}" if latex else f"{body}*{xpart}"
        return (1 if coeff > 0 else -1), body
    # multi-term coefficient: parenthesize; factor out -1 when uniformly negative
    all_neg = all(q < 0 for _, q in terms)
    inner = (-c) if all_neg else c
    inner_text = inner.to_latex() if latex else str(inner)
    if xpart:
        body = (
            f"\\left({inner_text}\\right) {xpart}"
            if latex
            else f"({inner_text})*{xpart}"
        )
    else:
        body = f"\\left({inner_text}\\right)" if latex else f"({inner_text})"
    return (-1 if all_neg else 1), body


def reciprocal_poly(q: UniPoly, n: int) -> UniPoly:
    """The degree-n reversal of q: var**n * q(1/var)."""
    return q.reciprocal(n)


def shift_vars(p: "MultiPoly | UniPoly") -> "MultiPoly | UniPoly":
    """Index shift on both families: c_i -> c_{i+1}, l_i -> l_{i+1}."""
    return p.shift_indexed()
