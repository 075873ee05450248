"""Colon ideals, ideal intersections, and saturation at (x, y, z).

All three reduce to syzygy computations, which keeps the logic transparent
and reuses the tracked Buchberger kernel:

* (I : g)   = first coordinates of the syzygies of (g, f_1, ..., f_r);
* I cap J   = images sum s_i f_i of the syzygies of (f_1..f_r, g_1..g_m)
              restricted to the I-block;
* saturate  = iterate I -> (I:x) cap (I:y) cap (I:z) until stable; the exit
              test *is* the verification that one further colon step fixes
              the ideal.
"""

from __future__ import annotations

from typing import Sequence

from .field import QQ
from .groebner import (
    Vec,
    buchberger,
    poly_to_vec,
    polys_to_vec,
    vec_add,
    vec_term_mul,
    vec_to_polys,
)
from .monomial import GREVLEX, MonomialOrder
from .poly import Polynomial
from .syzygy import minimal_generators, syzygy_generators


def _degrees(polys: Sequence[Polynomial]) -> list[int]:
    degs = []
    for p in polys:
        ok, d = p.homogeneous_degree()
        if not ok:
            raise ValueError("saturation machinery needs homogeneous input")
        degs.append(0 if d is None else d)
    return degs


def colon_ideal(gens: Sequence[Polynomial], g: Polynomial,
                order: MonomialOrder = GREVLEX) -> list[Polynomial]:
    """Minimal generators of (I : g) = {h : h*g in I}."""
    gens = [p for p in gens if p]
    if not g:
        raise ValueError("colon by the zero polynomial")
    if not gens:
        return []
    nvars, field = g.nvars, g.field
    stacked = [g] + list(gens)
    degs = _degrees(stacked)
    vecs = [poly_to_vec(p) for p in stacked]
    syz = syzygy_generators(vecs, (0,), order, field, nvars)
    firsts: list[Vec] = []
    for s in syz:
        first = {(0, m): c for (pos, m), c in s.items() if pos == 0}
        if first:
            firsts.append(first)
    mins = minimal_generators(firsts, (degs[0],), order, field, nvars)
    return [vec_to_polys(v, 1, nvars, field)[0].primitive(order) for v in mins]


def intersect_ideals(a: Sequence[Polynomial], b: Sequence[Polynomial],
                     order: MonomialOrder = GREVLEX) -> list[Polynomial]:
    """Minimal generators of the intersection of two homogeneous ideals."""
    a = [p for p in a if p]
    b = [p for p in b if p]
    if not a or not b:
        return []
    nvars, field = a[0].nvars, a[0].field
    stacked = list(a) + list(b)
    _degrees(stacked)
    vecs = [poly_to_vec(p) for p in stacked]
    syz = syzygy_generators(vecs, (0,), order, field, nvars)
    images: list[Vec] = []
    for s in syz:
        img: Vec = {}
        for (pos, m), c in s.items():
            if pos < len(a):
                img = vec_add(img, vec_term_mul(poly_to_vec(a[pos]), c, m, field), field)
        if img:
            images.append(img)
    mins = minimal_generators(images, (0,), order, field, nvars)
    return [vec_to_polys(v, 1, nvars, field)[0].primitive(order) for v in mins]


def ideals_equal(a: Sequence[Polynomial], b: Sequence[Polynomial],
                 order: MonomialOrder = GREVLEX) -> bool:
    """Equality via the canonical reduced Groebner bases."""
    gb_a = buchberger(a, order)
    gb_b = buchberger(b, order)
    return [p.terms for p in gb_a] == [p.terms for p in gb_b]


def saturate(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
             max_rounds: int = 64) -> list[Polynomial]:
    """Saturation of a homogeneous ideal with respect to (x, y, z).

    Iterates one colon step (I : x) cap (I : y) cap (I : z) = (I : m) until
    a round returns the same ideal; the successful round doubles as the
    stability certificate.
    """
    gens = [p for p in gens if p]
    if not gens:
        return []
    nvars, field = gens[0].nvars, gens[0].field
    if nvars != 3:
        raise ValueError("saturation is defined for the projective ring in x, y, z")
    current = list(gens)
    for _ in range(max_rounds):
        step = None
        for var in range(3):
            v = Polynomial.variable(var, nvars, field)
            quot = colon_ideal(current, v, order)
            step = quot if step is None else intersect_ideals(step, quot, order)
        if ideals_equal(step, current, order):
            return buchberger(current, order)
        current = step
    raise RuntimeError("saturation did not stabilize (degree guard exceeded)")


def ideal_contains(gb: Sequence[Polynomial], h: Polynomial,
                   order: MonomialOrder = GREVLEX) -> bool:
    """Membership of h in the ideal with reduced Groebner basis `gb`."""
    from .groebner import normal_form

    return not normal_form(h, gb, order)
