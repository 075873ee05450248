"""Buchberger engine for homogeneous ideals and submodules of free modules.

Everything is computed on *vectors*: a vector is a dict mapping module
terms ``(position, monomial)`` to nonzero coefficients.  An ideal is the
rank-one case.  The module term order is TOP (term over position): ring
order on the monomials first, lower position wins ties.

Engine features, chosen for the scale of this artifact (three variables,
degrees comfortably below twenty):

* normal selection strategy — S-pairs processed by ascending degree,
  which for homogeneous input is the classical degree-by-degree run;
* Gebauer-Moller pair pruning (criteria M, F, B) with the coprimality
  criterion applied only in rank one, where it is valid;
* monic, tail-reduced (fully interreduced) output, so reduced bases are
  canonical and ideal equality is a dict comparison;
* optional tracking of representation vectors (every basis element as an
  explicit combination of the input generators) — the raw material for
  syzygy extraction;
* degree-truncated completion: S-pairs are processed through an event
  queue keyed by degree, so membership tests in degree d only pay for the
  basis up to d (used heavily by minimal-generator extraction).

Reductions walk a lazy max-heap of module-term keys, which avoids
rescanning the working dict for its leading term at every step.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .field import QQ
from .monomial import (
    GREVLEX,
    MonomialOrder,
    mono_coprime,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_one,
)
from .poly import Polynomial

# A module term is (position, monomial); a Vec maps module terms to coeffs.
Vec = dict


class EngineError(RuntimeError):
    """Internal inconsistency in the Groebner kernel."""


# ---------------------------------------------------------------------------
# vector helpers
# ---------------------------------------------------------------------------


def poly_to_vec(p: Polynomial, position: int = 0) -> Vec:
    return {(position, m): c for m, c in p.terms.items()}


def polys_to_vec(coords: Sequence[Polynomial]) -> Vec:
    out: Vec = {}
    for pos, p in enumerate(coords):
        for m, c in p.terms.items():
            out[(pos, m)] = c
    return out


def vec_to_polys(v: Vec, rank: int, nvars: int, field) -> list[Polynomial]:
    buckets: list[dict] = [{} for _ in range(rank)]
    for (pos, m), c in v.items():
        buckets[pos][m] = c
    return [Polynomial(nvars, field, b, _raw=True) for b in buckets]


def vec_degree(v: Vec, shifts: Sequence[int]) -> int | None:
    """Degree of a homogeneous vector (None for zero); raises on
    inhomogeneous input."""
    deg = None
    for (pos, m) in v:
        d = mono_deg(m) + shifts[pos]
        if deg is None:
            deg = d
        elif d != deg:
            raise ValueError("vector is not homogeneous for the given shifts")
    return deg


def vec_is_homogeneous(v: Vec, shifts: Sequence[int]) -> bool:
    try:
        vec_degree(v, shifts)
        return True
    except ValueError:
        return False


def vec_scale(v: Vec, c, field) -> Vec:
    mul = field.mul
    return {t: mul(c, x) for t, x in v.items()}


def vec_term_mul(v: Vec, c, mono, field) -> Vec:
    if c == field.one:
        return {(pos, mono_mul(mono, m)): x for (pos, m), x in v.items()}
    mul = field.mul
    return {(pos, mono_mul(mono, m)): mul(c, x) for (pos, m), x in v.items()}


def vec_add(a: Vec, b: Vec, field) -> Vec:
    add, zero = field.add, field.zero
    out = dict(a)
    for t, c in b.items():
        s = add(out.get(t, zero), c)
        if s == zero:
            out.pop(t, None)
        else:
            out[t] = s
    return out


def vec_sub(a: Vec, b: Vec, field) -> Vec:
    sub, zero = field.sub, field.zero
    out = dict(a)
    for t, c in b.items():
        s = sub(out.get(t, zero), c)
        if s == zero:
            out.pop(t, None)
        else:
            out[t] = s
    return out


# ---------------------------------------------------------------------------
# engine
# ---------------------------------------------------------------------------


def _module_negkey(order: MonomialOrder):
    """Negated TOP key for min-heaps: smallest heap entry = largest term."""
    ring_key = order.key

    def negkey(term):
        pos, mono = term
        k = ring_key(mono)
        return (-k[0], tuple(-e for e in k[1]), pos)

    return negkey


class _Basis:
    __slots__ = ("vec", "lt", "items", "rep", "degree")

    def __init__(self, vec: Vec, lt, rep, degree: int):
        self.vec = vec
        self.lt = lt              # (position, monomial); coefficient is 1
        self.items = list(vec.items())
        self.rep = rep            # Vec over generator indices, or None
        self.degree = degree


class GroebnerEngine:
    """Incremental Buchberger on homogeneous vectors.

    Events (generator insertions and S-pairs) live in one priority queue
    keyed by degree; ``complete_to(d)`` drains events of degree <= d, after
    which normal forms are exact for inputs of degree <= d.  Homogeneity
    makes this sound: processing an event never creates an event of lower
    degree.
    """

    def __init__(self, shifts: Sequence[int], order: MonomialOrder = GREVLEX,
                 field=QQ, *, nvars: int = 3, track: bool = False):
        if order.is_local:
            raise ValueError("the Buchberger engine needs a global order")
        self.shifts = tuple(shifts)
        self.order = order
        self.field = field
        self.nvars = nvars
        self.track = track
        self.basis: list[_Basis] = []
        self._negkey = _module_negkey(order)
        self._keycache: dict = {}
        self._events: list = []   # (degree, seq, kind, payload)
        self._seq = 0
        self._live_pairs: dict = {}
        self._ngens = 0
        self.zero_reduction_reps: list[Vec] = []  # input combos reducing to 0

    # -- input ----------------------------------------------------------

    def add_generator(self, vec: Vec, rep: Vec | None = None) -> None:
        """Queue a homogeneous generator.  When tracking, `rep` defaults to
        the unit vector at the generator's index (in insertion order,
        counting zero generators)."""
        index = self._ngens
        self._ngens += 1
        if not vec:
            return
        deg = vec_degree(vec, self.shifts)
        if self.track and rep is None:
            rep = {(index, mono_one(self.nvars)): self.field.one}
        self._push(deg, "gen", (vec, rep))

    def _push(self, degree: int, kind: str, payload) -> None:
        self._seq += 1
        heapq.heappush(self._events, (degree, self._seq, kind, payload))

    # -- reduction --------------------------------------------------------

    def _key(self, term):
        k = self._keycache.get(term)
        if k is None:
            k = self._negkey(term)
            self._keycache[term] = k
        return k

    def reduce_vec(self, vec: Vec, *, with_quotients: bool = False):
        """Full normal form of `vec` against the current basis.

        Returns (remainder, quotients); quotients maps basis indices to
        {monomial: coeff} dicts with vec = sum_i quotients[i] * basis[i]
        + remainder.  The caller must have completed the engine through
        the degree of `vec`.
        """
        field = self.field
        sub, mul, add, zero = field.sub, field.mul, field.add, field.zero
        work = dict(vec)
        remainder: Vec = {}
        quotients: dict[int, dict] | None = {} if with_quotients else None
        key = self._key
        heap = list({key(t) for t in work})
        entry_of = {key(t): t for t in work}
        heapq.heapify(heap)
        basis = self.basis
        while heap:
            k = heapq.heappop(heap)
            term = entry_of[k]
            c = work.get(term)
            if c is None:
                continue
            pos, mono = term
            red = None
            red_idx = -1
            for idx, b in enumerate(basis):
                bpos, bmono = b.lt
                if bpos == pos and mono_divides(bmono, mono):
                    red, red_idx = b, idx
                    break
            if red is None:
                remainder[term] = c
                del work[term]
                continue
            q = mono_div(mono, red.lt[1])
            if with_quotients:
                qd = quotients.setdefault(red_idx, {})
                qd[q] = add(qd.get(q, zero), c)
            del work[term]
            for (bpos2, bmono2), bc in red.items:
                t2 = (bpos2, mono_mul(q, bmono2))
                if t2 == term:
                    continue
                s = sub(work.get(t2, zero), mul(c, bc))
                if s == zero:
                    work.pop(t2, None)
                else:
                    if t2 not in work:
                        k2 = key(t2)
                        entry_of[k2] = t2
                        heapq.heappush(heap, k2)
                    work[t2] = s
        if work:
            raise EngineError("reduction left unprocessed terms")
        return remainder, quotients

    # -- pair management (Gebauer-Moller update) --------------------------

    def _update_pairs(self, t: int) -> None:
        """Install pairs (i, t) for the new element t, pruned by the
        Gebauer-Moller criteria; prune old pairs by the chain criterion."""
        basis = self.basis
        pos_t, m_t = basis[t].lt
        rank_one = len(self.shifts) == 1

        cand: list[tuple[int, tuple]] = []
        for i in range(t):
            pos_i, m_i = basis[i].lt
            if pos_i == pos_t:
                cand.append((i, mono_lcm(m_i, m_t)))

        # criterion M: drop pairs whose lcm is a proper multiple of another
        survivors = [
            (i, lcm_i)
            for i, lcm_i in cand
            if not any(
                lcm_j != lcm_i and mono_divides(lcm_j, lcm_i) for _, lcm_j in cand
            )
        ]

        # criterion F: one representative per lcm class, preferring a
        # coprime pair (criterion B then removes the whole class, rank one)
        by_lcm: dict[tuple, list[int]] = {}
        for i, lcm_i in survivors:
            by_lcm.setdefault(lcm_i, []).append(i)
        new_pairs: list[tuple[int, tuple]] = []
        for lcm_i, members in by_lcm.items():
            if rank_one and any(mono_coprime(basis[i].lt[1], m_t) for i in members):
                continue
            new_pairs.append((members[0], lcm_i))

        # chain criterion on old pairs
        for (i, j) in list(self._live_pairs):
            if basis[i].lt[0] != pos_t:
                continue
            m_ij = mono_lcm(basis[i].lt[1], basis[j].lt[1])
            if (
                mono_divides(m_t, m_ij)
                and mono_lcm(basis[i].lt[1], m_t) != m_ij
                and mono_lcm(basis[j].lt[1], m_t) != m_ij
            ):
                del self._live_pairs[(i, j)]

        for i, lcm_i in new_pairs:
            self._live_pairs[(i, t)] = True
            self._push(mono_deg(lcm_i) + self.shifts[pos_t], "pair", (i, t))

    # -- main loop ---------------------------------------------------------

    def _insert(self, vec: Vec, rep: Vec | None) -> None:
        field = self.field
        lt_term = min(vec, key=self._key)
        lc = vec[lt_term]
        if lc != field.one:
            inv = field.inv(lc)
            vec = vec_scale(vec, inv, field)
            if rep is not None:
                rep = vec_scale(rep, inv, field)
        deg = vec_degree(vec, self.shifts)
        self.basis.append(_Basis(vec, lt_term, rep, deg))
        self._update_pairs(len(self.basis) - 1)

    def complete_to(self, degree: int | None = None) -> None:
        """Process all events of degree <= `degree` (all events if None)."""
        while self._events:
            deg, _, kind, payload = self._events[0]
            if degree is not None and deg > degree:
                return
            heapq.heappop(self._events)
            if kind == "gen":
                vec, rep = payload
                rem, quot = self.reduce_vec(vec, with_quotients=self.track)
                if self.track:
                    rep = self._rep_after_reduction(rep, quot)
                if rem:
                    self._insert(rem, rep)
                elif self.track and rep:
                    self.zero_reduction_reps.append(rep)
            else:
                i, j = payload
                if (i, j) not in self._live_pairs:
                    continue
                del self._live_pairs[(i, j)]
                svec, srep = self._spair(i, j)
                rem, quot = self.reduce_vec(svec, with_quotients=self.track)
                if self.track:
                    srep = self._rep_after_reduction(srep, quot)
                if rem:
                    self._insert(rem, srep)

    def _spair(self, i: int, j: int):
        field = self.field
        bi, bj = self.basis[i], self.basis[j]
        (pos, mi), (_, mj) = bi.lt, bj.lt
        lcm = mono_lcm(mi, mj)
        qi, qj = mono_div(lcm, mi), mono_div(lcm, mj)
        svec = vec_sub(
            vec_term_mul(bi.vec, field.one, qi, field),
            vec_term_mul(bj.vec, field.one, qj, field),
            field,
        )
        srep = None
        if self.track:
            srep = vec_sub(
                vec_term_mul(bi.rep, field.one, qi, field),
                vec_term_mul(bj.rep, field.one, qj, field),
                field,
            )
        return svec, srep

    def _rep_after_reduction(self, rep: Vec | None, quotients: dict | None) -> Vec:
        field = self.field
        out = dict(rep) if rep else {}
        if quotients:
            for idx, qd in quotients.items():
                brep = self.basis[idx].rep
                for mono, c in qd.items():
                    out = vec_sub(out, vec_term_mul(brep, c, mono, field), field)
        return out

    # -- outputs -----------------------------------------------------------

    def interreduce(self) -> None:
        """Replace the completed basis with the reduced basis (monic,
        LT-minimal, tail-reduced).  Reduced bases are canonical for a fixed
        order, so equality of ideals/modules becomes basis comparison."""
        if self._events:
            raise EngineError("interreduce called before completion")
        keep: list[_Basis] = []
        for b in sorted(self.basis, key=lambda b: self._key(b.lt), reverse=True):
            if not any(
                k.lt[0] == b.lt[0] and mono_divides(k.lt[1], b.lt[1]) for k in keep
            ):
                keep.append(b)
        full = self.basis
        reduced: list[_Basis] = []
        for idx, b in enumerate(keep):
            self.basis = keep[:idx] + keep[idx + 1:]
            rem, quot = self.reduce_vec(b.vec, with_quotients=self.track)
            rep = b.rep
            if self.track:
                rep = self._rep_after_reduction(rep, quot)
            if not rem:
                self.basis = full
                raise EngineError("basis element tail-reduced to zero")
            reduced.append(_Basis(rem, b.lt, rep, b.degree))
        reduced.sort(key=lambda b: self._key(b.lt), reverse=True)
        self.basis = reduced
        self._live_pairs = {}

    def basis_vectors(self) -> list[Vec]:
        return [b.vec for b in self.basis]

    def basis_reps(self) -> list[Vec]:
        if not self.track:
            raise EngineError("engine was not tracking representations")
        return [b.rep for b in self.basis]

    def normal_form(self, vec: Vec, *, with_quotients: bool = False):
        deg = vec_degree(vec, self.shifts)
        if deg is not None:
            self.complete_to(deg)
        return self.reduce_vec(vec, with_quotients=with_quotients)

    def contains(self, vec: Vec) -> bool:
        if not vec:
            return True
        rem, _ = self.normal_form(vec)
        return not rem

    def leading_terms(self) -> list[tuple[int, tuple]]:
        return [b.lt for b in self.basis]


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


def buchberger(gens: Iterable[Polynomial], order: MonomialOrder = GREVLEX) -> list[Polynomial]:
    """Reduced Groebner basis of the homogeneous ideal generated by `gens`.

    Non-homogeneous input is rejected; zero generators are ignored.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    field, nvars = gens[0].field, gens[0].nvars
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError(f"generator {g} is not homogeneous")
        if g.nvars != nvars or g.field != field:
            raise ValueError("generators belong to different rings")
    engine = GroebnerEngine((0,), order, field, nvars=nvars)
    for g in gens:
        engine.add_generator(poly_to_vec(g))
    engine.complete_to(None)
    engine.interreduce()
    return [vec_to_polys(v, 1, nvars, field)[0] for v in engine.basis_vectors()]


def buchberger_module(
    gens: Iterable[Sequence[Polynomial]],
    shifts: Sequence[int],
    order: MonomialOrder = GREVLEX,
) -> list[list[Polynomial]]:
    """Reduced Groebner basis of a homogeneous submodule of the free module
    with the given generator degree shifts."""
    gens = [list(g) for g in gens]
    gens = [g for g in gens if any(p for p in g)]
    if not gens:
        return []
    field = nvars = None
    for g in gens:
        for p in g:
            if p:
                field, nvars = p.field, p.nvars
                break
        if field is not None:
            break
    engine = GroebnerEngine(tuple(shifts), order, field, nvars=nvars)
    for g in gens:
        vec = polys_to_vec(g)
        if not vec_is_homogeneous(vec, shifts):
            raise ValueError("module generator is not homogeneous")
        engine.add_generator(vec)
    engine.complete_to(None)
    engine.interreduce()
    return [vec_to_polys(v, len(shifts), nvars, field) for v in engine.basis_vectors()]


def groebner_engine_for(
    gens: Sequence[Vec], shifts: Sequence[int], order: MonomialOrder = GREVLEX,
    field=QQ, *, nvars: int = 3, track: bool = False, reduced: bool = True,
) -> GroebnerEngine:
    """Engine with a fully computed basis for the given homogeneous vectors."""
    engine = GroebnerEngine(tuple(shifts), order, field, nvars=nvars, track=track)
    for vec in gens:
        if not vec_is_homogeneous(vec, shifts):
            raise ValueError("generator is not homogeneous")
        engine.add_generator(vec)
    engine.complete_to(None)
    if reduced:
        engine.interreduce()
    return engine


def normal_form(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of p on division by `basis` (a Groebner basis, for exact
    membership semantics): no remainder term is divisible by any leading
    term, and p - remainder lies in the span of the basis."""
    basis = [g for g in basis if g]
    if not p or not basis:
        return p
    field, nvars = p.field, p.nvars
    engine = GroebnerEngine((0,), order, field, nvars=nvars)
    for g in basis:
        gm = g.monic(order)
        lt_mono = gm.leading_monomial(order)
        vec = poly_to_vec(gm)
        engine.basis.append(_Basis(vec, (0, lt_mono), None, 0))
    rem, _ = engine.reduce_vec(poly_to_vec(p))
    return vec_to_polys(rem, 1, nvars, field)[0]
