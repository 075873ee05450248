"""Syzygies, minimal generating sets, and minimal graded free resolutions.

The first-syzygy computation follows Schreyer: run a tracked Buchberger on
the generators, keep the transformation matrix A (basis = A * generators),
express each generator over the basis by division (B), then reduce every
same-position S-pair of the final reduced basis to zero while recording
quotients.  Each zero reduction yields a syzygy of the basis; pushing those
through A and adding the rows of (Id - B*A) yields a generating set of the
syzygy module of the *original* generators.  Minimization is the classical
graded greedy: walk candidates by ascending degree and keep exactly those
outside the module generated by the previously kept ones (membership via a
degree-truncated Groebner engine).

Resolutions iterate syzygies-then-minimize; with minimal generating sets at
every level the result is the minimal free resolution, so the Betti table
read off the generator degrees is intrinsic.  Over three variables the
length never exceeds three — exceeding it raises, as it can only mean an
engine bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .field import QQ
from .groebner import (
    EngineError,
    GroebnerEngine,
    Vec,
    groebner_engine_for,
    vec_add,
    vec_degree,
    vec_sub,
    vec_term_mul,
)
from .monomial import GREVLEX, MonomialOrder, mono_div, mono_lcm, mono_one


def combine(coeff_vec: Vec, mats: Sequence[Vec], field) -> Vec:
    """sum over terms ((k, m), c) of coeff_vec of  c * m * mats[k]."""
    out: Vec = {}
    for (k, m), c in coeff_vec.items():
        out = vec_add(out, vec_term_mul(mats[k], c, m, field), field)
    return out


def _quotients_to_vec(quotients: dict | None, nvars: int) -> Vec:
    out: Vec = {}
    if quotients:
        for idx, qd in quotients.items():
            for mono, c in qd.items():
                out[(idx, mono)] = c
    return out


def syzygy_generators(
    gens: Sequence[Vec],
    shifts: Sequence[int],
    order: MonomialOrder = GREVLEX,
    field=QQ,
    nvars: int = 3,
) -> list[Vec]:
    """Generating set (not yet minimal) of the syzygy module of `gens`.

    Each returned vector s satisfies sum_i s_i * gens[i] = 0 exactly; the
    collection generates all such vectors.  Zero generators contribute their
    unit syzygies through the (Id - B*A) rows.
    """
    gens = list(gens)
    if not gens:
        return []
    engine = groebner_engine_for(
        gens, shifts, order, field, nvars=nvars, track=True, reduced=True
    )
    basis = engine.basis
    one = field.one

    # B: each generator over the basis (remainder must vanish)
    b_rows: list[Vec] = []
    for g in gens:
        rem, quot = engine.reduce_vec(g, with_quotients=True)
        if rem:
            raise EngineError("generator does not reduce to zero over its own basis")
        b_rows.append(_quotients_to_vec(quot, nvars))

    a_rows = [b.rep for b in basis]

    syzygies: list[Vec] = []

    # Schreyer syzygies from every same-position pair of the reduced basis
    for i in range(len(basis)):
        pos_i, m_i = basis[i].lt
        for j in range(i + 1, len(basis)):
            pos_j, m_j = basis[j].lt
            if pos_i != pos_j:
                continue
            lcm = mono_lcm(m_i, m_j)
            qi, qj = mono_div(lcm, m_i), mono_div(lcm, m_j)
            svec = vec_sub(
                vec_term_mul(basis[i].vec, one, qi, field),
                vec_term_mul(basis[j].vec, one, qj, field),
                field,
            )
            rem, quot = engine.reduce_vec(svec, with_quotients=True)
            if rem:
                raise EngineError("S-pair of a Groebner basis did not reduce to zero")
            sig: Vec = {(i, qi): one, (j, qj): field.neg(one)}
            sig = vec_sub(sig, _quotients_to_vec(quot, nvars), field)
            s = combine(sig, a_rows, field)
            if s:
                syzygies.append(s)

    # rows of Id - B*A
    for i, b_row in enumerate(b_rows):
        row = {(i, mono_one(nvars)): one}
        s = vec_sub(row, combine(b_row, a_rows, field), field)
        if s:
            syzygies.append(s)

    return syzygies


def minimal_generators(
    vecs: Sequence[Vec],
    shifts: Sequence[int],
    order: MonomialOrder = GREVLEX,
    field=QQ,
    nvars: int = 3,
) -> list[Vec]:
    """Minimal generating set of the module generated by `vecs`, sorted by
    ascending degree (ties keep input order)."""
    items = []
    for idx, v in enumerate(vecs):
        if not v:
            continue
        items.append((vec_degree(v, shifts), idx, v))
    items.sort(key=lambda t: (t[0], t[1]))
    engine = GroebnerEngine(tuple(shifts), order, field, nvars=nvars)
    kept: list[Vec] = []
    for _, _, v in items:
        if not engine.contains(v):
            kept.append(v)
            engine.add_generator(v)
    return kept


# ---------------------------------------------------------------------------
# resolutions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """Map (homological index i, internal degree j) -> rank."""

    entries: dict

    def rank(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def regularity(self) -> int:
        return max(j - i for (i, j) in self.entries)

    def projective_dimension(self) -> int:
        return max(i for (i, _) in self.entries)

    def max_index(self) -> int:
        return self.projective_dimension()

    def column(self, i: int) -> dict:
        return {j: b for (ii, j), b in self.entries.items() if ii == i}

    def to_json(self) -> list[dict]:
        return [
            {"i": i, "j": j, "beta": b}
            for (i, j), b in sorted(self.entries.items())
        ]

    def __str__(self) -> str:
        return ", ".join(
            f"beta({i},{j})={b}" for (i, j), b in sorted(self.entries.items())
        )


@dataclass
class FreeResolution:
    """Minimal graded free resolution.

    `level_shifts[i]` holds the generator degrees of F_i.  For i >= 1,
    `maps[i-1]` holds the images of F_i's basis inside F_{i-1} (vectors
    over positions of F_{i-1}).  For a submodule, `maps` additionally
    starts with the inclusion F_0 -> ambient.
    """

    betti: BettiTable
    level_shifts: list[tuple[int, ...]]
    maps: list[list[Vec]]
    quotient: bool

    def regularity(self) -> int:
        return self.betti.regularity()

    def length(self) -> int:
        return len(self.level_shifts) - 1


_MAX_LEVELS = 3  # polynomial ring in three variables


def _betti_from_levels(level_degs: Sequence[Sequence[int]]) -> BettiTable:
    entries: dict = {}
    for i, degs in enumerate(level_degs):
        for j in degs:
            entries[(i, j)] = entries.get((i, j), 0) + 1
    return BettiTable(entries)


def resolve_submodule(
    gens: Sequence[Vec],
    ambient_shifts: Sequence[int],
    order: MonomialOrder = GREVLEX,
    field=QQ,
    nvars: int = 3,
) -> FreeResolution:
    """Minimal free resolution of the submodule generated by `gens` inside
    the free module with the given shifts."""
    mins = minimal_generators(gens, ambient_shifts, order, field, nvars)
    level_degs: list[list[int]] = []
    maps: list[list[Vec]] = []
    current = mins
    cur_shifts = tuple(ambient_shifts)
    while current:
        degs = [vec_degree(v, cur_shifts) for v in current]
        level_degs.append(degs)
        maps.append(list(current))
        if len(level_degs) > _MAX_LEVELS + 1:
            raise EngineError("resolution exceeded the length bound for three variables")
        raw = syzygy_generators(current, cur_shifts, order, field, nvars)
        cur_shifts = tuple(degs)
        current = minimal_generators(raw, cur_shifts, order, field, nvars)
    return FreeResolution(
        betti=_betti_from_levels(level_degs),
        level_shifts=[tuple(d) for d in level_degs],
        maps=maps,
        quotient=False,
    )


def resolve_quotient(
    relations: Sequence[Vec],
    ambient_shifts: Sequence[int],
    order: MonomialOrder = GREVLEX,
    field=QQ,
    nvars: int = 3,
) -> FreeResolution:
    """Minimal free resolution of F/N where F is free with the given shifts
    and N is generated by `relations`.  The presentation must already be
    minimal on the F side: no relation may carry a unit entry."""
    one = mono_one(nvars)
    for rel in relations:
        if any(m == one for (_, m) in rel):
            raise ValueError("relation with a unit entry: presentation is not minimal")
    sub = resolve_submodule(relations, ambient_shifts, order, field, nvars)
    level_degs = [list(ambient_shifts)] + [list(s) for s in sub.level_shifts]
    if len(level_degs) > _MAX_LEVELS + 2:
        raise EngineError("resolution exceeded the length bound for three variables")
    return FreeResolution(
        betti=_betti_from_levels(level_degs),
        level_shifts=[tuple(d) for d in level_degs],
        maps=sub.maps,
        quotient=True,
    )


def check_complex(res: FreeResolution, field=QQ) -> bool:
    """Composition of consecutive differentials is zero (exactness smoke
    test used by the suite)."""
    maps = res.maps
    for i in range(1, len(maps)):
        for v in maps[i]:
            image = combine(v, maps[i - 1], field)
            if image:
                return False
    return True
