"""Sparse multivariate polynomials with exact coefficients.

A Polynomial is a map {exponent tuple -> nonzero coefficient} over a fixed
field, in a fixed number of variables: three (x, y, z) for projective work,
two (u, v) for local charts.  The zero polynomial is the empty map.
Instances are immutable by convention: every operation returns a new value,
so polynomials can be shared freely across concurrent tasks.

Term order is not baked into the representation; sorted views are produced
on demand for whichever order is active (see `sorted_terms`).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .field import QQ, RationalField
from .monomial import (
    GREVLEX,
    Mono,
    MonomialOrder,
    intern_mono,
    mono_deg,
    mono_div,
    mono_mul,
    mono_one,
)

_VAR_NAMES = {1: ("t",), 2: ("u", "v"), 3: ("x", "y", "z")}


class Polynomial:
    __slots__ = ("nvars", "field", "terms")

    def __init__(self, nvars: int, field=QQ, terms=None, *, _raw: bool = False):
        self.nvars = nvars
        self.field = field
        if terms is None:
            self.terms = {}
        elif _raw:
            # caller guarantees: coeffs in the field, nonzero, monos interned
            self.terms = terms
        else:
            clean = {}
            for mono, coeff in dict(terms).items():
                c = field.coerce(coeff)
                if c != field.zero:
                    clean[intern_mono(tuple(mono))] = c
            self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, field=QQ) -> "Polynomial":
        return cls(nvars, field, None)

    @classmethod
    def constant(cls, value, nvars: int, field=QQ) -> "Polynomial":
        c = field.coerce(value)
        if c == field.zero:
            return cls(nvars, field, None)
        return cls(nvars, field, {mono_one(nvars): c}, _raw=True)

    @classmethod
    def variable(cls, index: int, nvars: int, field=QQ) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, field, {intern_mono(tuple(exps)): field.one}, _raw=True)

    @classmethod
    def term(cls, coeff, mono: Mono, nvars: int, field=QQ) -> "Polynomial":
        c = field.coerce(coeff)
        if c == field.zero:
            return cls(nvars, field, None)
        return cls(nvars, field, {intern_mono(tuple(mono)): c}, _raw=True)

    # -- predicates and views ------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int | None:
        """Max total degree, or None for the zero polynomial (explicit
        undefined marker; never a silent -1)."""
        if not self.terms:
            return None
        return max(map(mono_deg, self.terms))

    def homogeneous_degree(self) -> tuple[bool, int | None]:
        """(is_homogeneous, degree).  Zero counts as homogeneous with
        undefined (None) degree."""
        if not self.terms:
            return True, None
        degs = {mono_deg(m) for m in self.terms}
        if len(degs) == 1:
            return True, degs.pop()
        return False, None

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree()[0]

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Mono, object]]:
        """Terms sorted strictly descending under `order`."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder = GREVLEX) -> tuple[Mono, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order.key
        mono = max(self.terms, key=key)
        return mono, self.terms[mono]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Mono:
        return self.leading_term(order)[0]

    def coefficient(self, mono: Mono):
        return self.terms.get(tuple(mono), self.field.zero)

    # -- ring operations ------------------------------------------------

    def _check_ring(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars or self.field != other.field:
            raise ValueError("polynomials belong to different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        add, zero = self.field.add, self.field.zero
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = add(out.get(mono, zero), coeff)
            if c == zero:
                out.pop(mono, None)
            else:
                out[mono] = c
        return Polynomial(self.nvars, self.field, out, _raw=True)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        sub, zero = self.field.sub, self.field.zero
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = sub(out.get(mono, zero), coeff)
            if c == zero:
                out.pop(mono, None)
            else:
                out[mono] = c
        return Polynomial(self.nvars, self.field, out, _raw=True)

    def __neg__(self) -> "Polynomial":
        neg = self.field.neg
        return Polynomial(
            self.nvars, self.field, {m: neg(c) for m, c in self.terms.items()}, _raw=True
        )

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        mul, add, zero = self.field.mul, self.field.add, self.field.zero
        out: dict = {}
        if len(self.terms) > len(other.terms):
            long_terms, short_terms = self.terms, other.terms
        else:
            long_terms, short_terms = other.terms, self.terms
        for m1, c1 in short_terms.items():
            for m2, c2 in long_terms.items():
                mono = mono_mul(m1, m2)
                c = add(out.get(mono, zero), mul(c1, c2))
                if c == zero:
                    out.pop(mono, None)
                else:
                    out[mono] = c
        return Polynomial(self.nvars, self.field, out, _raw=True)

    def scale(self, coeff) -> "Polynomial":
        c = self.field.coerce(coeff)
        if c == self.field.zero:
            return Polynomial.zero(self.nvars, self.field)
        mul = self.field.mul
        return Polynomial(
            self.nvars, self.field, {m: mul(c, v) for m, v in self.terms.items()}, _raw=True
        )

    def term_mul(self, coeff, mono: Mono) -> "Polynomial":
        """Multiply by the single term coeff * mono."""
        c = self.field.coerce(coeff)
        if c == self.field.zero:
            return Polynomial.zero(self.nvars, self.field)
        mul = self.field.mul
        mono = intern_mono(tuple(mono))
        return Polynomial(
            self.nvars,
            self.field,
            {mono_mul(m, mono): mul(c, v) for m, v in self.terms.items()},
            _raw=True,
        )

    def div_term(self, coeff, mono: Mono) -> "Polynomial":
        """Exact division by the single term coeff * mono; raises when any
        term is not divisible."""
        c = self.field.coerce(coeff)
        if c == self.field.zero:
            raise ZeroDivisionError("division by zero term")
        div = self.field.div
        mono = tuple(mono)
        out = {}
        for m, v in self.terms.items():
            q = mono_div(m, mono)
            if q is None:
                raise ValueError(f"term {m} not divisible by {mono}")
            out[q] = div(v, c)
        return Polynomial(self.nvars, self.field, out, _raw=True)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        if lc == self.field.one:
            return self
        return self.scale(self.field.inv(lc))

    def primitive(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        """Scale to integer coefficients with content 1 and positive leading
        coefficient (Q only; over GF(p) this is just `monic`)."""
        if not self.terms:
            return self
        if not isinstance(self.field, RationalField):
            return self.monic(order)
        from math import gcd

        denom = 1
        for c in self.terms.values():
            denom = denom * c.denominator // gcd(denom, c.denominator)
        numer = 0
        for c in self.terms.values():
            numer = gcd(numer, c.numerator * denom)
        factor = Fraction(denom, numer)
        if self.leading_term(order)[1] < 0:
            factor = -factor
        return self.scale(factor)

    # -- calculus and substitution ---------------------------------------

    def partial_derivative(self, var: int) -> "Polynomial":
        """Formal partial derivative with respect to variable `var`."""
        if not 0 <= var < self.nvars:
            raise ValueError(f"variable index {var} out of range")
        field = self.field
        out = {}
        for mono, coeff in self.terms.items():
            e = mono[var]
            if e == 0:
                continue
            new = list(mono)
            new[var] = e - 1
            c = field.mul(coeff, field.coerce(e))
            if c != field.zero:
                out[intern_mono(tuple(new))] = c
        return Polynomial(self.nvars, self.field, out, _raw=True)

    def evaluate(self, point: Sequence):
        """Value at a point with coordinates in the field."""
        field = self.field
        coords = [field.coerce(v) for v in point]
        if len(coords) != self.nvars:
            raise ValueError("wrong number of coordinates")
        total = field.zero
        for mono, coeff in self.terms.items():
            v = coeff
            for x, e in zip(coords, mono):
                for _ in range(e):
                    v = field.mul(v, x)
            total = field.add(total, v)
        return total

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring map sending variable i to images[i]; images live in a common
        (possibly different) ring."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0]
        out = Polynomial.zero(target.nvars, target.field)
        # cache powers of each image
        powers: list[list[Polynomial]] = [[Polynomial.constant(1, target.nvars, target.field)] for _ in images]
        for mono, coeff in self.terms.items():
            term = Polynomial.constant(coeff, target.nvars, target.field)
            for i, e in enumerate(mono):
                cache = powers[i]
                while len(cache) <= e:
                    cache.append(cache[-1] * images[i])
                if e:
                    term = term * cache[e]
            out = out + term
        return out

    # -- structural ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, self.field, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: Polynomial, names: Iterable[str] | None = None) -> str:
    """Render in the text syntax accepted by the parser: integer-or-rational
    coefficients, `^` powers, explicit `*`."""
    if not p.terms:
        return "0"
    names = tuple(names) if names else _VAR_NAMES.get(p.nvars) or tuple(
        f"x{i}" for i in range(p.nvars)
    )
    pieces = []
    for mono, coeff in p.sorted_terms(GREVLEX):
        factors = []
        for name, e in zip(names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        c = coeff
        sign = "-" if _is_negative(p.field, c) else "+"
        if sign == "-":
            c = p.field.neg(c)
        mag = str(c)
        if body and mag == "1":
            piece = body
        elif body:
            piece = f"{mag}*{body}"
        else:
            piece = mag
        pieces.append((sign, piece))
    first_sign, first = pieces[0]
    text = (first_sign if first_sign == "-" else "") + first
    for sign, piece in pieces[1:]:
        text += f" {sign} {piece}"
    return text


def _is_negative(field, coeff) -> bool:
    return isinstance(field, RationalField) and coeff < 0


def euler_combination(p: Polynomial) -> Polynomial:
    """x*p_x + y*p_y + z*p_z (equals deg(p) * p for homogeneous p; handy
    self-test of differentiation and arithmetic)."""
    out = Polynomial.zero(p.nvars, p.field)
    for i in range(p.nvars):
        out = out + Polynomial.variable(i, p.nvars, p.field) * p.partial_derivative(i)
    return out
