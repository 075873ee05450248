"""Local standard bases in two variables via Mora's tangent-cone algorithm.

Computations happen in Q[u, v] under the anti-graded local order (1 is the
largest monomial); leading ideals then describe the local ring at the
origin, so `local_quotient_dim` counts the standard monomials under the
staircase — the dimension of R/(gens) for R the formal (equivalently
convergent, for polynomial input) power series ring.

The normal form is Mora's weak normal form: reducers are selected by
minimal ecart (degree spread between a polynomial and its leading term) and
the intermediate remainder itself joins the reducer pool whenever its ecart
drops below every applicable reducer's.  This is what makes the reduction
terminate for local orders, where naive division can cycle forever.
The returned remainder r satisfies unit * p = (combination of gens) + r, a
unit multiple being irrelevant for the leading-ideal data consumed here.
"""

from __future__ import annotations

from typing import Sequence

from .field import QQ
from .monomial import LOCAL_ORDER, mono_deg, mono_div, mono_divides
from .poly import Polynomial

_MAX_REDUCTION_STEPS = 200_000


class LocalComputationError(RuntimeError):
    pass


def ecart(p: Polynomial) -> int:
    """Total degree of p minus degree of its local leading monomial."""
    if not p:
        raise ValueError("ecart of zero")
    return p.total_degree() - mono_deg(p.leading_monomial(LOCAL_ORDER))


def mora_normal_form(p: Polynomial, reducers: Sequence[Polynomial]) -> Polynomial:
    """Mora weak normal form of p with respect to `reducers`."""
    pool = [g for g in reducers if g]
    h = p
    steps = 0
    while h:
        lm_h, lc_h = h.leading_term(LOCAL_ORDER)
        candidates = [g for g in pool if mono_divides(g.leading_monomial(LOCAL_ORDER), lm_h)]
        if not candidates:
            return h
        g = min(candidates, key=ecart)
        if ecart(g) > ecart(h):
            pool.append(h)
        lm_g, lc_g = g.leading_term(LOCAL_ORDER)
        factor = h.field.div(lc_h, lc_g)
        h = h - g.term_mul(factor, mono_div(lm_h, lm_g))
        steps += 1
        if steps > _MAX_REDUCTION_STEPS:
            raise LocalComputationError("Mora reduction exceeded the step guard")
    return h


def local_standard_basis(gens: Sequence[Polynomial]) -> list[Polynomial]:
    """Standard basis of the ideal generated by `gens` in the local ring at
    the origin of the (u, v) chart."""
    basis = [g for g in gens if g]
    if not basis:
        return []
    nvars = basis[0].nvars
    if nvars != 2:
        raise ValueError("local standard bases are computed in the two local variables")
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    guard = 0
    while pairs:
        i, j = pairs.pop(0)
        gi, gj = basis[i], basis[j]
        (mi, ci) = gi.leading_term(LOCAL_ORDER)
        (mj, cj) = gj.leading_term(LOCAL_ORDER)
        lcm = tuple(max(a, b) for a, b in zip(mi, mj))
        s = gi.term_mul(gi.field.inv(ci), mono_div(lcm, mi)) - gj.term_mul(
            gj.field.inv(cj), mono_div(lcm, mj)
        )
        h = mora_normal_form(s, basis)
        if h:
            basis.append(h)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
        guard += 1
        if guard > 10_000:
            raise LocalComputationError("standard basis loop exceeded the pair guard")
    return basis


def leading_staircase(basis: Sequence[Polynomial]) -> list[tuple]:
    """Minimal set of local leading monomials of a standard basis."""
    leads = [g.leading_monomial(LOCAL_ORDER) for g in basis if g]
    minimal: list[tuple] = []
    for m in sorted(leads, key=mono_deg):
        if not any(mono_divides(g, m) for g in minimal):
            minimal.append(m)
    return minimal


def local_quotient_dim(gens: Sequence[Polynomial]) -> int | None:
    """dim of R/(gens) at the origin: the number of standard monomials, or
    None when the quotient is not finite dimensional (no pure power of some
    variable in the leading ideal)."""
    basis = local_standard_basis(gens)
    if not basis:
        return None
    leads = leading_staircase(basis)
    if any(mono_deg(m) == 0 for m in leads):
        return 0  # a unit: the ideal is everything locally
    u_bound = min((m[0] for m in leads if m[1] == 0), default=None)
    v_bound = min((m[1] for m in leads if m[0] == 0), default=None)
    if u_bound is None or v_bound is None:
        return None
    count = 0
    for a in range(u_bound):
        for b in range(v_bound):
            m = (a, b)
            if not any(mono_divides(g, m) for g in leads):
                count += 1
    return count
