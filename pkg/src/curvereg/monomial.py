"""Monomials as interned exponent tuples, and the monomial orders.

A monomial in n variables is a tuple of n non-negative ints.  Tuples are
interned in a global table so equal monomials are usually the same object
(faster dict lookups in the kernel; values are immutable so sharing is
safe).

Orders expose a sort `key`: key(a) > key(b) iff a > b in the order.  Keys
are tuples of ints, so `negate_key` (componentwise negation) turns a
max-selection problem into a min-heap problem.

Orders implemented:

* grevlex — degree first, ties broken so that the monomial with the
  *smaller* exponent in the last variable wins.  A global well-order
  (1 is smallest).
* anti-graded local — degree comparison reversed (1 is largest), same
  tie-break; the order used by the tangent-cone normal form.

Both are total and multiplicative: a < b implies m*a < m*b.
"""

from __future__ import annotations

from typing import Iterator

Mono = tuple  # tuple[int, ...]

_INTERN: dict = {}


def intern_mono(m: Mono) -> Mono:
    return _INTERN.setdefault(m, m)


def mono_one(nvars: int) -> Mono:
    return intern_mono((0,) * nvars)


def mono_deg(m: Mono) -> int:
    return sum(m)


def mono_mul(a: Mono, b: Mono) -> Mono:
    return intern_mono(tuple(x + y for x, y in zip(a, b)))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True iff a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono | None:
    """a / b, or None when b does not divide a."""
    q = []
    for x, y in zip(a, b):
        if x < y:
            return None
        q.append(x - y)
    return intern_mono(tuple(q))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return intern_mono(tuple(max(x, y) for x, y in zip(a, b)))


def mono_coprime(a: Mono, b: Mono) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def monomials_of_degree(nvars: int, deg: int) -> Iterator[Mono]:
    """All monomials of the given total degree (lexicographic emission)."""
    if nvars == 1:
        yield intern_mono((deg,))
        return
    for first in range(deg, -1, -1):
        for rest in monomials_of_degree(nvars - 1, deg - first):
            yield intern_mono((first,) + rest)


class MonomialOrder:
    name: str = "?"
    is_local: bool = False

    def key(self, m: Mono):
        raise NotImplementedError

    def compare(self, a: Mono, b: Mono) -> int:
        """-1, 0, +1 as a <, =, > b.  Variable counts must agree."""
        if len(a) != len(b):
            raise ValueError("monomials live in different rings")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __repr__(self) -> str:
        return self.name


class GrevlexOrder(MonomialOrder):
    name = "grevlex"
    is_local = False

    @staticmethod
    def key(m: Mono):
        return (sum(m), tuple(-e for e in reversed(m)))


class AntiGradedLocalOrder(MonomialOrder):
    name = "antigraded-local"
    is_local = True

    @staticmethod
    def key(m: Mono):
        return (-sum(m), tuple(-e for e in reversed(m)))


GREVLEX = GrevlexOrder()
LOCAL_ORDER = AntiGradedLocalOrder()


def negate_key(k) -> tuple:
    """Componentwise negation; reverses comparisons of int-tuple keys."""
    return (-k[0], tuple(-e for e in k[1]))
