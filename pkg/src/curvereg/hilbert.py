"""Graded dimensions of ideals, modules and their quotients.

Two independent routes are provided on purpose:

* the production route counts standard monomials against the leading
  terms of a Groebner basis (`quotient_dim`, `submodule_dim`);
* the oracle route (`rank_of_slice`, `quotient_dim_oracle`,
  `syzygy_dim_oracle`) builds the multiplication matrix of a graded slice
  and row-reduces it exactly — no Groebner machinery involved.  The test
  suite holds the two routes to exact agreement.

Rank computation over Q clears denominators and eliminates fraction-free
on sparse integer rows, so no floating point ever appears.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
from typing import Callable, Sequence

from .field import QQ, PrimeField, RationalField
from .monomial import Mono, mono_deg, mono_divides, mono_mul, monomials_of_degree
from .groebner import Vec


def ring_dim(nvars: int, k: int) -> int:
    """dim of the degree-k piece of the polynomial ring in nvars variables."""
    if k < 0:
        return 0
    return comb(k + nvars - 1, nvars - 1)


def free_module_dim(shifts: Sequence[int], nvars: int, k: int) -> int:
    return sum(ring_dim(nvars, k - s) for s in shifts)


def _minimize_leads(leads: Sequence[tuple[int, Mono]]) -> dict[int, list[Mono]]:
    by_pos: dict[int, list[Mono]] = {}
    for pos, mono in leads:
        by_pos.setdefault(pos, []).append(mono)
    for pos, monos in by_pos.items():
        minimal: list[Mono] = []
        for m in sorted(monos, key=mono_deg):
            if not any(mono_divides(g, m) for g in minimal):
                minimal.append(m)
        by_pos[pos] = minimal
    return by_pos


class QuotientDims:
    """Graded dimensions of F/N from the leading terms of a Groebner basis
    of N (F free with the given shifts)."""

    def __init__(self, leads: Sequence[tuple[int, Mono]], shifts: Sequence[int], nvars: int):
        self.shifts = tuple(shifts)
        self.nvars = nvars
        self.leads = _minimize_leads(leads)
        self._cache: dict[int, int] = {}

    def __call__(self, k: int) -> int:
        cached = self._cache.get(k)
        if cached is not None:
            return cached
        total = 0
        for pos, shift in enumerate(self.shifts):
            deg = k - shift
            if deg < 0:
                continue
            pos_leads = self.leads.get(pos, ())
            if not pos_leads:
                total += ring_dim(self.nvars, deg)
                continue
            for m in monomials_of_degree(self.nvars, deg):
                if not any(mono_divides(g, m) for g in pos_leads):
                    total += 1
        self._cache[k] = total
        return total

    def submodule_dim(self, k: int) -> int:
        """dim N_k = dim F_k - dim (F/N)_k."""
        return free_module_dim(self.shifts, self.nvars, k) - self(k)

    def is_cofinite(self) -> bool:
        """True iff F/N is finite dimensional: every position's lead set
        contains a pure power of every variable."""
        for pos in range(len(self.shifts)):
            pos_leads = self.leads.get(pos, ())
            for var in range(self.nvars):
                if not any(
                    m[var] > 0 and all(e == 0 for i, e in enumerate(m) if i != var)
                    for m in pos_leads
                ):
                    return False
        return True


def quotient_dim(leads: Sequence[tuple[int, Mono]], shifts: Sequence[int], nvars: int, k: int) -> int:
    return QuotientDims(leads, shifts, nvars)(k)


def smooth_reference_dims(d: int) -> list[int]:
    """Graded dimensions of the Jacobian algebra of a smooth degree-d curve:
    the Artinian complete intersection with three generators of degree d-1.
    Returns the full list for k = 0 .. 3(d-2); zero beyond."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    block = [1] * (d - 1)  # 1 + t + ... + t^(d-2)
    series = [1]
    for _ in range(3):
        out = [0] * (len(series) + len(block) - 1)
        for i, a in enumerate(series):
            for j, b in enumerate(block):
                out[i + j] += a * b
        series = out
    return series


def smooth_reference_dim(d: int, k: int) -> int:
    if k < 0:
        return 0
    series = smooth_reference_dims(d)
    return series[k] if k < len(series) else 0


# ---------------------------------------------------------------------------
# dense graded-slice oracle
# ---------------------------------------------------------------------------


def _int_rows_from_vecs(rows: list[dict], field) -> list[dict]:
    """Normalize sparse rows to primitive integer rows (Q) or residue rows."""
    if isinstance(field, PrimeField):
        return [dict(r) for r in rows]
    out = []
    for r in rows:
        denom = 1
        for c in r.values():
            denom = denom * c.denominator // gcd(denom, c.denominator)
        ints = {col: int(c * denom) for col, c in r.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if g > 1:
            ints = {col: v // g for col, v in ints.items()}
        out.append(ints)
    return out


def sparse_rank(rows: list[dict], field=QQ) -> int:
    """Exact rank of a sparse matrix given as dicts {column: value}.

    Over Q the elimination is fraction-free on integer rows with content
    stripping; over GF(p) it is plain modular elimination.
    """
    rows = _int_rows_from_vecs([r for r in rows if r], field)
    modular = isinstance(field, PrimeField)
    p = field.p if modular else None
    pivots: dict = {}  # pivot column -> row dict
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                pivots[col] = row
                rank += 1
                break
            a, b = pivot[col], row[col]
            if modular:
                factor = b * pow(a, p - 2, p) % p
                new = {}
                for c, v in row.items():
                    w = (v - factor * pivot.get(c, 0)) % p
                    if w:
                        new[c] = w
            else:
                new = {}
                for c in set(row) | set(pivot):
                    w = row.get(c, 0) * a - pivot.get(c, 0) * b
                    if w:
                        new[c] = w
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
            row = new
    return rank


def multiplication_rows(
    gens: Sequence[Vec], degrees: Sequence[int], shifts: Sequence[int],
    nvars: int, k: int,
) -> tuple[list[dict], dict]:
    """Rows of the slice map  (+)_i S_{k-deg_i} -> F_k,  (a_i) -> sum a_i g_i.

    Returns (rows, column index of each module term).
    """
    columns: dict = {}
    rows: list[dict] = []
    for gen, d in zip(gens, degrees):
        mdeg = k - d
        if mdeg < 0:
            continue
        for m in monomials_of_degree(nvars, mdeg):
            row: dict = {}
            for (pos, gm), c in gen.items():
                term = (pos, mono_mul(m, gm))
                col = columns.setdefault(term, len(columns))
                row[col] = c  # module terms of m*gen are pairwise distinct
            rows.append(row)
    return rows, columns


def rank_of_slice(
    gens: Sequence[Vec], degrees: Sequence[int], shifts: Sequence[int],
    nvars: int, k: int, field=QQ,
) -> int:
    rows, _ = multiplication_rows(gens, degrees, shifts, nvars, k)
    return sparse_rank(rows, field)


def quotient_dim_oracle(
    gens: Sequence[Vec], degrees: Sequence[int], shifts: Sequence[int],
    nvars: int, k: int, field=QQ,
) -> int:
    """dim (F/N)_k by dense linear algebra: F_k minus the rank of the
    multiplication matrix.  Independent of any Groebner data."""
    return free_module_dim(shifts, nvars, k) - rank_of_slice(
        gens, degrees, shifts, nvars, k, field
    )


def syzygy_dim_oracle(
    gens: Sequence[Vec], degrees: Sequence[int], shifts: Sequence[int],
    nvars: int, k: int, field=QQ,
) -> int:
    """dim of the degree-k syzygies of `gens` = kernel dimension of the
    slice map (+)_i S_{k-deg_i} -> F_k."""
    domain = sum(ring_dim(nvars, k - d) for d in degrees)
    return domain - rank_of_slice(gens, degrees, shifts, nvars, k, field)
