"""Independent brute-force oracles used to freeze derived test values.

Nothing here imports the package's linear algebra or ideal code.
"""

from fractions import Fraction
from itertools import product
from math import gcd
from functools import reduce


def semigroup_elements(gens, bound):
    """Elements of <gens> below bound by dynamic programming on reachability."""
    reach = [False] * bound
    reach[0] = True
    for n in range(1, bound):
        reach[n] = any(n >= g and reach[n - g] for g in gens)
    return {n for n in range(bound) if reach[n]}


def frobenius(gens):
    assert reduce(gcd, gens) == 1
    bound = max(gens) ** 2 + 1
    elems = semigroup_elements(gens, bound)
    gaps = [n for n in range(bound) if n not in elems]
    return gaps[-1] if gaps else -1, gaps


def symmetric(gens):
    F, gaps = frobenius(gens)
    elems = semigroup_elements(gens, F + 2)
    return all((z in elems) != (F - z in elems) for z in range(F + 1))


# -- monomial ideals of k[[t^S]] as sets of valuations -------------------------

class ValuationIdeal:
    """A monomial ideal of k[[t^S]] described by its set of valuations below N."""

    def __init__(self, gens, S, N):
        self.S, self.N = S, N
        self.vals = frozenset(v + s for v in gens for s in S if v + s < N)

    @classmethod
    def from_set(cls, vals, S, N):
        out = cls([], S, N)
        out.vals = frozenset(vals)
        return out

    def colength(self):
        return len([s for s in self.S if s not in self.vals])

    def __mul__(self, other):
        return ValuationIdeal.from_set({a + b for a in self.vals for b in other.vals
                                        if a + b < self.N}, self.S, self.N)

    def __add__(self, other):
        return ValuationIdeal.from_set(self.vals | other.vals, self.S, self.N)

    def intersect(self, other):
        return ValuationIdeal.from_set(self.vals & other.vals, self.S, self.N)

    def colon(self, other, safe):
        """{s in S : s + other ⊆ self}, tested only where s + b < safe."""
        keep = set()
        for s in self.S:
            if s >= safe:
                continue
            if all(s + b in self.vals for b in other.vals if s + b < self.N):
                keep.add(s)
        return keep


# -- dense exact linear algebra for non-monomial ideals ------------------------

def rank(rows):
    """Rank of a list of dict rows over the rationals (plain Gaussian elimination)."""
    rows = [dict(r) for r in rows if r]
    cols = sorted({c for r in rows for c in r})
    rk = 0
    for c in cols:
        piv = next((i for i in range(rk, len(rows)) if rows[i].get(c, 0) != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk]
        for i in range(len(rows)):
            if i != rk and rows[i].get(c, 0) != 0:
                f = Fraction(rows[i][c]) / p[c]
                rows[i] = {k: rows[i].get(k, 0) - f * p.get(k, 0) for k in set(rows[i]) | set(p)}
                rows[i] = {k: v for k, v in rows[i].items() if v != 0}
        rk += 1
    return rk


def dense_colength(polys, gens, N):
    """λ(R/I) for I generated by polys (dicts e -> c) computed at horizon N.

    I is spanned by f·t^s truncated below N; λ = |S ∩ [0,N)| - dim.  Valid as
    soon as N exceeds the tail of I (all of [tail, N) ∩ S lies in the span).
    """
    S = sorted(semigroup_elements(gens, N))
    rows = []
    for f in polys:
        for s in S:
            rows.append({e + s: Fraction(c) for e, c in f.items() if e + s < N})
    return len(S) - rank(rows)


# -- monomial quotient rings ---------------------------------------------------

def standard_monomials(gens, nvars, box):
    """Exponent vectors in [0, box)^n divisible by no generator."""
    def divides(a, b):
        return all(x <= y for x, y in zip(a, b))
    return [e for e in product(range(box), repeat=nvars)
            if not any(divides(g, e) for g in gens)]
