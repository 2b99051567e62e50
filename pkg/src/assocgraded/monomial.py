"""Monomial ideals in quotients k[x_1..x_n]/H with H a monomial ideal.

Everything is computed in the ambient polynomial ring on A + H and read
modulo H.  Lengths may be infinite (``math.inf``) because these rings
can have dimension one.
"""

import math
import re
from itertools import product as cartesian

from .errors import ParseError
from .series import QQ, format_coeff_term, join_terms


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimalize(exps):
    """Antichain of minimal exponent vectors under divisibility."""
    out = []
    for e in sorted(set(exps), key=lambda v: (sum(v), v)):
        if not any(_divides(g, e) for g in out):
            out.append(e)
    return frozenset(out)


class MonomialIdeal:
    """Minimal monomial generators as exponent tuples (immutable)."""

    def __init__(self, gens, nvars):
        self.nvars = nvars
        self.gens = minimalize(tuple(g) for g in gens)

    def contains_monomial(self, e):
        return any(_divides(g, e) for g in self.gens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return "MonomialIdeal(" + ", ".join(map(str, sorted(self.gens))) + ")"


def mono_sum(A, B):
    return MonomialIdeal(A.gens | B.gens, A.nvars)


def mono_product(A, B):
    return MonomialIdeal([tuple(x + y for x, y in zip(a, b)) for a in A.gens for b in B.gens],
                         A.nvars)


def mono_intersect(A, B):
    return MonomialIdeal([tuple(map(max, a, b)) for a in A.gens for b in B.gens], A.nvars)


def mono_colon(A, B):
    """A : B = intersection over b of (lcm(a, b) - b)."""
    result = None
    for b in B.gens:
        part = MonomialIdeal([tuple(max(x, y) - y for x, y in zip(a, b)) for a in A.gens], A.nvars)
        result = part if result is None else mono_intersect(result, part)
    if result is None:
        return MonomialIdeal([(0,) * A.nvars], A.nvars)
    return result


class Poly:
    """Sparse polynomial: exponent tuple -> nonzero coefficient."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms, nvars):
        self.nvars = nvars
        self.terms = {e: c for e, c in terms.items() if c != 0}

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out, self.nvars)

    def is_zero(self):
        return not self.terms


class MonomialQuotientRing:
    """k[x_1..x_n]/H localized at the homogeneous maximal ideal."""

    def __init__(self, variables, relations, field=QQ):
        self.variables = tuple(variables)
        self.nvars = len(self.variables)
        self.field = field
        self.H = MonomialIdeal(relations, self.nvars)
        self._maximal = None

    # -- element and ideal construction --------------------------------------
    def monomial(self, e):
        return Poly({tuple(e): self.field(1)}, self.nvars)

    element = monomial

    def one(self):
        return self.monomial((0,) * self.nvars)

    def mul(self, f, g):
        return f * g

    def from_coords(self, coords):
        return Poly({tuple(e): self.field(c) for e, c in coords.items()}, self.nvars)

    def parse_monomial(self, text):
        return parse_monomial(text, self.variables)

    def ideal(self, *gens):
        exps = []
        for g in gens:
            if isinstance(g, str):
                g = self.parse_monomial(g)
            elif isinstance(g, Poly):
                if len(g.terms) != 1:
                    raise ValueError("monomial ideals need monomial generators")
                g = next(iter(g.terms))
            exps.append(tuple(g))
        return QuotientMonomialIdeal(self, MonomialIdeal(exps, self.nvars))

    def unit_ideal(self):
        return self.ideal((0,) * self.nvars)

    def maximal_ideal(self):
        if self._maximal is None:
            self._maximal = self.ideal(*[tuple(int(i == j) for j in range(self.nvars))
                                         for i in range(self.nvars)])
        return self._maximal

    def same_ring(self, other):
        return (isinstance(other, MonomialQuotientRing) and other.variables == self.variables
                and other.H == self.H)

    # -- lengths ---------------------------------------------------------------
    def full(self, A):
        """A + H in the ambient polynomial ring."""
        return mono_sum(A, self.H)

    def standard_monomials(self, A):
        """Monomials outside A + H, or None when there are infinitely many."""
        full = self.full(A)
        bounds = []
        for i in range(self.nvars):
            pure = [g[i] for g in full.gens if all(g[j] == 0 for j in range(self.nvars) if j != i)]
            if not pure:
                return None
            bounds.append(min(pure))
        out = [e for e in cartesian(*[range(b) for b in bounds]) if not full.contains_monomial(e)]
        return sorted(out, key=lambda v: (sum(v), tuple(-x for x in v)))

    def colength(self, A):
        std = self.standard_monomials(A.mono)
        return math.inf if std is None else len(std)

    def min_generators(self, A):
        return mono_min_generators(A.mono, self)

    def quotient_basis(self, A):
        std = self.standard_monomials(A.mono)
        if std is None:
            raise ValueError("R/I is not Artinian: infinitely many standard monomials")
        return std

    def coords(self, f, A):
        full = self.full(A.mono)
        return {e: c for e, c in f.terms.items() if not full.contains_monomial(e)}

    def format_key(self, e):
        return format_monomial(e, self.variables)

    def format_element(self, f):
        pieces = [format_coeff_term(f.terms[e], format_monomial(e, self.variables))
                  for e in sorted(f.terms, key=lambda v: (sum(v), tuple(-x for x in v)))]
        return join_terms(pieces)

    def describe(self):
        rel = ", ".join(format_monomial(g, self.variables) for g in sorted(self.H.gens))
        return f"k[{','.join(self.variables)}]/({rel})"


class QuotientMonomialIdeal:
    """A monomial ideal of a MonomialQuotientRing, compared modulo H."""

    def __init__(self, ring, mono):
        self.ring = ring
        self.mono = ring.full(mono)

    @property
    def key(self):
        return tuple(sorted(self.mono.gens))

    def __eq__(self, other):
        if not isinstance(other, QuotientMonomialIdeal):
            return NotImplemented
        return self.ring.same_ring(other.ring) and self.mono == other.mono

    def __hash__(self):
        return hash(self.mono)

    def __add__(self, other):
        return QuotientMonomialIdeal(self.ring, mono_sum(self.mono, other.mono))

    def __mul__(self, other):
        return QuotientMonomialIdeal(self.ring, mono_product(self.mono, other.mono))

    def __pow__(self, n):
        res = self.ring.unit_ideal()
        for _ in range(max(n, 0)):
            res = res * self
        return res

    def colon(self, other):
        return QuotientMonomialIdeal(self.ring, mono_colon(self.mono, other.mono))

    def intersect(self, other):
        return QuotientMonomialIdeal(self.ring, mono_intersect(self.mono, other.mono))

    __and__ = intersect

    def issubset(self, other):
        return all(other.mono.contains_monomial(g) for g in self.mono.gens)

    __le__ = issubset

    def colength(self):
        return self.ring.colength(self)

    def is_unit(self):
        return self.mono.contains_monomial((0,) * self.ring.nvars)

    @property
    def generators(self):
        """Minimal generators of the image modulo H, as Poly monomials."""
        return tuple(self.ring.monomial(g) for g in sorted(self.mono.gens, reverse=True)
                     if not self.ring.H.contains_monomial(g))

    def summary(self):
        return {"generators": [self.ring.format_key(g) for g in sorted(self.mono.gens, reverse=True)
                               if not self.ring.H.contains_monomial(g)],
                "colength": _jsonable_length(self.colength())}

    def __repr__(self):
        return "(" + ", ".join(self.summary()["generators"]) + ")"


def _jsonable_length(n):
    return "infinite" if n == math.inf else n


def mono_combine(op, A, B, ring):
    """Sum, product, intersection or colon of A + H and B + H, minimalized mod H."""
    A, B = ring.full(A), ring.full(B)
    fn = {"sum": mono_sum, "product": mono_product, "intersect": mono_intersect,
          "colon": mono_colon}.get(op)
    if fn is None:
        raise ValueError(f"unknown monomial operation {op!r}")
    return ring.full(fn(A, B))


def mono_length(A, ring):
    std = ring.standard_monomials(A)
    return math.inf if std is None else len(std)


def mono_min_generators(A, ring):
    return sum(1 for g in ring.full(A).gens if not ring.H.contains_monomial(g))


def format_monomial(e, variables):
    parts = []
    for v, k in zip(variables, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"\s*([A-Za-z_]\w*)\s*(?:\^\s*(\d+))?\s*")


def parse_monomial(text, variables):
    """Parse ``x^2*y`` (factors separated by ``*``) into an exponent tuple."""
    exps = [0] * len(variables)
    src = text.strip()
    if src == "1":
        return tuple(exps)
    if not src:
        raise ParseError("empty monomial", column=1, expected=tuple(variables))
    pos = 0
    while True:
        m = _FACTOR.match(src, pos)
        if not m:
            raise ParseError(f"bad monomial {text!r}", column=pos + 1, expected=tuple(variables))
        name, k = m.group(1), m.group(2)
        if name not in variables:
            raise ParseError(f"unknown variable {name!r} in {text!r}", column=pos + 1,
                             expected=tuple(variables))
        exps[variables.index(name)] += int(k) if k else 1
        pos = m.end()
        if pos >= len(src):
            break
        if src[pos] != "*":
            raise ParseError(f"unexpected {src[pos]!r} in monomial {text!r}", column=pos + 1,
                             expected=("*",))
        pos += 1
    return tuple(exps)
