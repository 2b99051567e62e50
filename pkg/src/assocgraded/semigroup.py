"""Numerical semigroups: membership, gaps, Frobenius number, symmetry."""

from dataclasses import dataclass, field
from functools import reduce
from math import gcd

from .errors import EmptyGenerators, GcdNotOne


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple
    frobenius: int
    gaps: frozenset
    membership_table: tuple = field(repr=False)

    @property
    def conductor(self):
        return self.frobenius + 1

    @property
    def min_generator(self):
        return min(self.generators)

    @property
    def max_generator(self):
        return max(self.generators)

    @property
    def multiplicity(self):
        return self.min_generator

    def __contains__(self, n):
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return self.membership_table[n]

    def elements_below(self, bound):
        """Sorted members of S that are < bound."""
        c = self.conductor
        low = [s for s in range(min(bound, c)) if self.membership_table[s]]
        return low + list(range(c, bound))

    def __str__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"


def build_semigroup(generators):
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise EmptyGenerators("a numerical semigroup needs at least one generator")
    if gens[0] <= 0:
        raise ValueError("semigroup generators must be positive integers")
    if reduce(gcd, gens) != 1:
        raise GcdNotOne(f"gcd{tuple(gens)} != 1: not a numerical semigroup")
    # Minimalize: drop generators that are sums of smaller members.
    # Closure on [0, max_gen^2] runs past the conductor (Frobenius < max_gen^2).
    bound = max(gens) ** 2 + 1
    member = [False] * bound
    member[0] = True
    for n in range(1, bound):
        member[n] = any(n >= g and member[n - g] for g in gens)
    minimal = []
    for g in gens:
        table = [False] * (g + 1)
        table[0] = True
        for n in range(1, g + 1):
            table[n] = any(n >= h and table[n - h] for h in minimal)
        if not table[g]:
            minimal.append(g)
    frob = max((n for n in range(bound) if not member[n]), default=-1)
    gaps = frozenset(n for n in range(bound) if not member[n])
    table = tuple(member[: frob + 2])
    return NumericalSemigroup(tuple(minimal), frob, gaps, table)


def is_symmetric(S):
    """True iff exactly one of z, F - z lies in S for every integer z.

    Equivalent to k[[t^S]] being Gorenstein.
    """
    return 2 * len(S.gaps) == S.frobenius + 1
