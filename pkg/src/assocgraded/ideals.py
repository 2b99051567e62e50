"""Ideal calculus in R = k[[t^S]] with certified truncation.

An m-primary ideal I is stored canonically as a pair (tail, basis): every
element of R of valuation >= tail lies in I, and ``basis`` is the reduced
echelon basis of I modulo those elements, one monic row per valuation of I
below the tail.  Two ideals are equal iff their canonical data agree, so
no comparison ever looks above a certified horizon.
"""

import threading
from functools import cached_property

from .errors import EmptyGenerators, NotContained, NotInRing, PrecisionExhausted
from .linalg import Echelon, intersect_spans, kernel
from .semigroup import NumericalSemigroup, build_semigroup
from .series import QQ, Series, format_series, parse_series

PRECISION_CAP = 2 ** 16


class SemigroupRing:
    """A session for R = k[[t^S]]: semigroup, field, adaptive precision.

    The working precision only ever increases; escalations are serialized.
    Products and powers are memoized per session.
    """

    def __init__(self, semigroup, field=QQ, precision=None, cap=PRECISION_CAP,
                 max_power=2, max_valuation=None):
        if not isinstance(semigroup, NumericalSemigroup):
            semigroup = build_semigroup(semigroup)
        self.S = semigroup
        self.field = field
        self.cap = cap
        c = semigroup.conductor
        vmax = max_valuation if max_valuation is not None else semigroup.max_generator
        default = max(4 * c, 2 * c + (max_power + 2) * vmax + 8)
        self._precision = max(precision or default, 2 * c, 1)
        self._lock = threading.Lock()
        self._products = {}
        self._powers = {}
        self._maximal = None

    # -- precision registry -------------------------------------------------
    @property
    def precision(self):
        return self._precision

    def escalate(self, at_least):
        with self._lock:
            if at_least > self.cap:
                raise PrecisionExhausted(
                    f"needed precision {at_least} exceeds cap {self.cap}")
            if at_least > self._precision:
                self._precision = at_least
            return self._precision

    def with_precision(self, precision):
        """A fresh session on the same ring with a different starting horizon."""
        return SemigroupRing(self.S, self.field, precision=precision, cap=self.cap)

    # -- elements -----------------------------------------------------------
    def t(self, e, coeff=1):
        return Series({e: coeff}, None, self.field)

    def element(self, key):
        return self.t(key)

    def one(self):
        return self.t(0)

    def from_coords(self, coords):
        """The polynomial sum of c * t^e over a {e: c} dict."""
        return Series(dict(coords), None, self.field)

    def mul(self, f, g):
        return f * g

    def parse(self, text):
        f = parse_series(text, self.field)
        self.check_in_ring(f)
        return f

    def check_in_ring(self, f):
        bad = [e for e in f.terms if e not in self.S]
        if bad:
            raise NotInRing(f"{format_series(f)} has support {bad} outside {self.S}")

    def same_ring(self, other):
        return isinstance(other, SemigroupRing) and other.S == self.S and other.field == self.field

    # -- ideal constructors -------------------------------------------------
    def ideal(self, *gens):
        elems = []
        for g in gens:
            if isinstance(g, str):
                g = self.parse(g)
            elif isinstance(g, int):
                g = self.t(g)
            else:
                self.check_in_ring(g)
            if g.precision is not None:
                raise NotInRing("ideal generators must be exact polynomials")
            elems.append(g)
        return echelonize(elems, self)

    def unit_ideal(self):
        return self._from_rows({}, 0)

    def maximal_ideal(self):
        if self._maximal is None:
            self._maximal = self.ideal(*[self.t(g) for g in self.S.generators])
        return self._maximal

    def monomial_ideal(self, exponents):
        return self.ideal(*[self.t(e) for e in exponents])

    # -- canonicalization ---------------------------------------------------
    def _certify(self, pivots, known_from=None, horizon=None):
        """Least tail >= conductor with [tail, tail + m) inside the valuations.

        ``known_from``: every integer >= it is a valuation.  ``horizon``:
        valuations are only known below it (None = unbounded knowledge).
        """
        m = self.S.multiplicity
        c = self.S.conductor
        limit = horizon if horizon is not None else max([c, known_from or 0] + list(pivots)) + m
        tau = c
        while tau + m <= limit:
            if all((v in pivots) or (known_from is not None and v >= known_from)
                   for v in range(tau, tau + m)):
                return tau
            tau += 1
        if known_from is not None:
            return max(c, known_from)
        return None

    def _from_rows(self, rows, known_from):
        """Canonical ideal from a reduced echelon dict valid modulo T_known_from."""
        pivots = set(rows)
        tau = self._certify(pivots, known_from=known_from)
        cut = min(known_from, tau)
        basis = []
        for p in sorted(pivots):
            if p >= cut:
                break
            basis.append((p, {e: v for e, v in rows[p].items() if e < cut}))
        basis += [(s, {s: 1}) for s in self.S.elements_below(tau) if s >= cut]
        return RingIdeal(self, tau, basis)

    def colength(self, I):
        return I.colength()

    def min_generators(self, I):
        return min_generators(I)

    def quotient_basis(self, I):
        return I.standard_exponents()

    def coords(self, f, I):
        """Coordinates of f modulo I on the standard basis of R/I."""
        return I.reduce(f)

    def format_element(self, f):
        return format_series(f)

    def format_key(self, key):
        return "1" if key == 0 else ("t" if key == 1 else f"t^{key}")

    def describe(self):
        return f"k[[t^s : s in {self.S}]] over {self.field!r}"


def _truncated_row(f, horizon):
    return {e: c for e, c in f.terms.items() if e < horizon}


def echelonize(generators, ring):
    """Canonical m-primary ideal generated by exact ring elements.

    Builds the span of g * t^s (s in S) below the working precision D,
    certifies a tail, and doubles D on failure until the cap.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        if generators:
            raise PrecisionExhausted("the zero ideal is not m-primary; no tail can be certified")
        raise EmptyGenerators("an ideal needs at least one generator")
    for g in gens:
        ring.check_in_ring(g)
    vmin = min(g.valuation() for g in gens)
    if vmin == 0:
        return ring.unit_ideal()
    D = ring.precision
    while True:
        ech = Echelon()
        for g in gens:
            v = g.valuation()
            for s in ring.S.elements_below(D - v):
                ech.add({e + s: c for e, c in g.terms.items() if e + s < D})
        tau = ring._certify(set(ech.rows), horizon=D)
        if tau is not None:
            basis = []
            for p, row in ech.sorted_rows():
                if p >= tau:
                    break
                basis.append((p, {e: c for e, c in row.items() if e < tau}))
            return RingIdeal(ring, tau, basis)
        if 2 * D > ring.cap:
            raise PrecisionExhausted(
                f"no tail certified below precision cap {ring.cap}; ideal likely not m-primary")
        D = ring.escalate(2 * D)


class RingIdeal:
    """Canonical m-primary ideal of a SemigroupRing (immutable)."""

    def __init__(self, ring, tail, basis):
        self.ring = ring
        self.tail = tail
        self.basis = tuple((p, dict(row)) for p, row in basis)

    # -- identity -----------------------------------------------------------
    @cached_property
    def key(self):
        return (self.tail, tuple((p, tuple(sorted(row.items()))) for p, row in self.basis))

    def __eq__(self, other):
        if not isinstance(other, RingIdeal):
            return NotImplemented
        return self.ring.same_ring(other.ring) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @cached_property
    def pivots(self):
        return frozenset(p for p, _ in self.basis)

    def valuations_below(self, bound):
        return sorted(v for v in self.ring.S.elements_below(bound)
                      if v in self.pivots or v >= self.tail)

    def standard_exponents(self):
        """Exponents s in S not attained as valuations of I (a k-basis of R/I)."""
        return [s for s in self.ring.S.elements_below(self.tail) if s not in self.pivots]

    def colength(self):
        return len(self.standard_exponents())

    def is_unit(self):
        return 0 in self.pivots or self.tail == 0

    def least_element(self):
        """An element of least valuation: the first basis row, else t^tail."""
        if self.basis:
            return Series(self.basis[0][1], None, self.ring.field)
        return self.ring.t(self.tail)

    def basis_elements(self):
        return [Series(row, None, self.ring.field) for _, row in self.basis]

    # -- membership ---------------------------------------------------------
    def reduce(self, f):
        """Residual of f modulo I, as a dict on standard exponents."""
        if f.precision is not None and f.precision < self.tail:
            raise PrecisionExhausted(
                f"element known below t^{f.precision}, ideal certified from t^{self.tail}")
        out = _truncated_row(f, self.tail)
        rows = dict(self.basis)
        for p in [e for e in out if e in rows]:
            coeff = out.get(p)
            if coeff is None:
                continue
            for e, v in rows[p].items():
                nv = out.get(e, 0) - coeff * v
                if nv == 0:
                    out.pop(e, None)
                else:
                    out[e] = nv
        return out

    def __contains__(self, f):
        return not self.reduce(f)

    def issubset(self, other):
        return (self + other) == other

    __le__ = issubset

    # -- generators ---------------------------------------------------------
    @cached_property
    def generators(self):
        """A small generating set (at most multiplicity-many elements)."""
        ring = self.ring
        if self.is_unit():
            return (ring.one(),)
        m = ring.S.multiplicity
        horizon = self.tail + m
        cands = self.basis_elements() + [ring.t(s) for s in range(self.tail, self.tail + m)]
        ech = Echelon()
        chosen = []
        elems = ring.S.elements_below(horizon)
        for f in cands:
            row = _truncated_row(f, horizon)
            if not ech.reduce(row):
                continue
            chosen.append(f)
            v = f.valuation()
            for s in elems:
                if s + v >= horizon:
                    break
                ech.add({e + s: c for e, c in f.terms.items() if e + s < horizon})
        return tuple(chosen)

    # -- arithmetic ---------------------------------------------------------
    def _same(self, other):
        if not isinstance(other, RingIdeal) or not self.ring.same_ring(other.ring):
            raise TypeError("ideals of different rings")

    def __add__(self, other):
        self._same(other)
        h = min(self.tail, other.tail)
        ech = Echelon()
        for _, row in self.basis + other.basis:
            ech.add({e: c for e, c in row.items() if e < h})
        return self.ring._from_rows(ech.rows, h)

    def __mul__(self, other):
        self._same(other)
        ring = self.ring
        k = (self.key, other.key) if self.key <= other.key else (other.key, self.key)
        hit = ring._products.get(k)
        if hit is not None:
            return hit
        if self.is_unit():
            res = other
        elif other.is_unit():
            res = self
        else:
            res = echelonize([a * b for a in self.generators for b in other.generators], ring)
        ring._products[k] = res
        return res

    def __pow__(self, n):
        if n <= 0:
            return self.ring.unit_ideal()
        cache = self.ring._powers
        res = cache.get((self.key, n))
        if res is None:
            res = self if n == 1 else (self ** (n - 1)) * self
            cache[(self.key, n)] = res
        return res

    def colon(self, other):
        """{x in R : x * other ⊆ self}."""
        self._same(other)
        ring = self.ring
        tau = self.tail
        if other.is_unit() or self.is_unit():
            return self
        bgens = other.generators
        need = tau + max(max(g.terms) for g in bgens)
        if need > ring.cap:
            raise PrecisionExhausted(f"colon needs horizon {need} beyond cap {ring.cap}")
        tags = ring.S.elements_below(tau)
        images = []
        for s in tags:
            img = {}
            for j, b in enumerate(bgens):
                prod = Series({e + s: c for e, c in b.terms.items() if e + s < tau}, None, ring.field)
                for e, c in self.reduce(prod).items():
                    img[(j, e)] = c
            images.append(img)
        rows = {p: row for p, row in kernel(images, tags)}
        return ring._from_rows(rows, tau)

    def intersect(self, other):
        self._same(other)
        ring = self.ring
        h = max(self.tail, other.tail)

        def span(I):
            vecs = [dict(row) for _, row in I.basis]
            vecs += [{s: 1} for s in ring.S.elements_below(h) if s >= I.tail]
            return vecs

        ech = intersect_spans(span(self), span(other))
        return ring._from_rows(ech.rows, h)

    __and__ = intersect

    def length_over(self, other):
        """λ(other / self) for self ⊆ other."""
        if not self.issubset(other):
            raise NotContained("length(A, B) needs A ⊆ B")
        return self.colength() - other.colength()

    # -- display ------------------------------------------------------------
    def summary(self):
        """Compact echelon summary used in witnesses."""
        return {
            "tail": self.tail,
            "colength": self.colength(),
            "valuations": self.valuations_below(self.tail),
            "basis": [format_series(Series(row, None, self.ring.field)) for _, row in self.basis
                      if len(row) > 1],
            "generators": [format_series(g) for g in self.generators],
        }

    def __repr__(self):
        gens = ", ".join(format_series(g) for g in self.generators)
        return f"({gens})"


def length(A, B=None):
    """λ(B/A) for A ⊆ B; λ(R/A) when B is omitted."""
    if B is None:
        return A.ring.colength(A)
    if hasattr(A, "length_over"):
        return A.length_over(B)
    return A.ring.length_over(A, B)


def length_R_mod(A):
    return A.ring.colength(A)


def min_generators(A):
    """μ(A) = λ(A / mA)."""
    ring = A.ring
    m = ring.maximal_ideal()
    return ring.colength(m * A) - ring.colength(A)


def ideal_combine(op, A, B):
    if op == "sum":
        return A + B
    if op == "product":
        return A * B
    raise ValueError(f"unknown ideal operation {op!r}")


def ideal_power(A, n):
    return A ** n


def ideal_colon(A, B):
    return A.colon(B)


def ideal_intersect(A, B):
    return A.intersect(B)


class QuotientView:
    """R/J seen through ambient ideals containing J."""

    def __init__(self, modulus):
        if not modulus.tail and not modulus.is_unit():
            raise PrecisionExhausted("quotient modulus must be m-primary")
        self.ring = modulus.ring
        self.modulus = modulus

    def lift(self, I):
        """The ambient ideal representing the image of I in R/J."""
        return I + self.modulus

    def power(self, I, n):
        return (I ** n) + self.modulus

    def zero(self):
        return self.modulus

    def length(self, I=None):
        """λ of (R/J)/(image of I); the whole λ(R/J) if I is None."""
        if I is None:
            return self.modulus.colength()
        return self.lift(I).colength()

    def colon(self, A, B):
        """(Ā :_{R/J} B̄) as an ambient ideal; A, B already contain J."""
        return A.colon(B)

    def annihilator(self, A):
        return self.modulus.colon(A)

    def socle_length(self):
        """λ((J : m) / J), the socle dimension of R/J."""
        socle = self.modulus.colon(self.ring.maximal_ideal())
        return self.modulus.colength() - socle.colength()
