"""Gorenstein and quasi-Gorenstein decision procedures for dimension one.

All criteria reduce to colon/intersection/length computations on canonical
ideals.  Whenever several criteria are theorems to agree, every one of
them is evaluated and a disagreement raises ``CriteriaDisagree``.
"""

from dataclasses import dataclass, field
from typing import Optional

from .errors import (ConductorMismatch, CriteriaDisagree, HypothesisFailure,
                     HypothesisNotDetected, StabilizationNotReached)
from .filtration import (Verdict, cm_check_G, index_of_nilpotency, quotient_hilbert_function,
                         ratliff_rush, reduction_number, rr_all_powers, socle_table, witness)
from .semigroup import is_symmetric


@dataclass
class CriterionReport:
    name: str
    conditions: dict
    verdict: bool
    type_of_G: Optional[int] = None
    details: dict = field(default_factory=dict)

    def first_failure(self):
        for name, v in self.conditions.items():
            if not v.holds and v.witness is not None:
                return name, v.witness
        return None


def _agree(name, conditions):
    values = {k: v.holds for k, v in conditions.items()}
    if len(set(values.values())) > 1:
        raise CriteriaDisagree(f"{name}: conditions disagree {values}")
    return next(iter(values.values()))


def _equalities(label, pairs):
    """Verdict for a list of (index, lhs, rhs); witness at the first mismatch."""
    for i, lhs, rhs in pairs:
        if lhs != rhs:
            return Verdict(False, witness(label, i, lhs, rhs))
    return Verdict(True)


def artinian_gorenstein(J):
    """True iff R/J has a one-dimensional socle, λ((J : m)/J) = 1."""
    ring = J.ring
    socle = J.colon(ring.maximal_ideal())
    return ring.colength(J) - ring.colength(socle) == 1


def _require_principal(J):
    if J.ring.min_generators(J) != 1:
        raise HypothesisFailure("J must be a principal reduction (μ(J) = dim R = 1)")


def quotient_gorenstein_check(J, I):
    """Gorenstein test for G(Ī) over the Artinian Gorenstein ring R/J.

    With r the top degree (Ī^r != 0 = Ī^(r+1)) and ambient ideals
    P_i = I^i + J representing Ī^i, evaluates: (1) socle dimension one,
    (2) S_i = 0 below r, (3)/(4) 0 : Ī^(r-i) = Ī^(i+1), (5) symmetric
    Hilbert function, (6) Ī^r : Ī^(r-i) = Ī^i and 0 : Ī = Ī^r,
    (7) the faithfulness form of (6).
    """
    if not artinian_gorenstein(J):
        raise HypothesisFailure("R/J is not a zero-dimensional Gorenstein ring")
    r = index_of_nilpotency(J, I)
    P = [J + I ** i for i in range(r + 2)]
    socle = socle_table(J, I, gorenstein=True)
    hilb = quotient_hilbert_function(J, I)
    half = (r - 1) // 2
    conds = {}
    conds["(1) socle dimension 1"] = Verdict(
        sum(socle) == 1, None if sum(socle) == 1 else {"condition": "dim Soc G = 1", "socle": socle})
    bad = [i for i in range(r) if socle[i] != 0]
    conds["(2) S_i = 0 for i < r"] = Verdict(
        not bad, None if not bad else {"condition": "S_i = 0", "index": bad[0], "socle": socle})
    annihilators = [None] + [J.colon(I ** k) for k in range(1, r + 1)]
    conds["(3) 0:I^(r-i) = I^(i+1)"] = _equalities(
        "0 :_R̄ Ī^(r-i) = Ī^(i+1)", [(i, annihilators[r - i], P[i + 1]) for i in range(r)])
    conds["(4) same, i <= (r-1)/2"] = _equalities(
        "0 :_R̄ Ī^(r-i) = Ī^(i+1)", [(i, annihilators[r - i], P[i + 1]) for i in range(half + 1)])
    asym = [i for i in range(half + 1) if hilb[i] != hilb[r - i]]
    conds["(5) λ(G_i) = λ(G_(r-i))"] = Verdict(
        not asym, None if not asym else {"condition": "λ(G_i) = λ(G_(r-i))", "index": asym[0],
                                         "hilbert": hilb})
    pairs = [(i, P[r].colon(I ** (r - i)), P[i]) for i in range(1, r)]
    pairs.append(("0:I", annihilators[1] if r else J, P[r]))
    conds["(6) I^r:I^(r-i) = I^i, 0:I = I^r"] = _equalities("Ī^r : Ī^(r-i) = Ī^i", pairs)
    conds["(7) faithfulness"] = _equalities("ann(Ī^(r-i)/Ī^r) = Ī^i", _faithfulness_pairs(J, I, P, r))
    if r == 0:
        # Ī = 0: G(Ī) = R̄ is Gorenstein and every range above is empty.
        conds = {k: Verdict(True, note="vacuous (Ī = 0)") if not k.startswith("(1)") else v
                 for k, v in conds.items()}
    verdict = _agree("quotient Gorenstein conditions", conds)
    return CriterionReport("G(Ī) Gorenstein over R/J", conds, verdict, type_of_G=sum(socle),
                           details={"r": r, "socle": socle, "hilbert": hilb})


def _faithfulness_pairs(J, I, P, r):
    """Annihilators of Ī^(r-i)/Ī^r computed element-wise over generators."""
    ring = I.ring
    pairs = []
    for i in range(1, r):
        ann = None
        for g in (I ** (r - i)).generators:
            part = P[r].colon(ring.ideal(g))
            ann = part if ann is None else ann.intersect(part)
        pairs.append((i, ann, P[i]))
    if r >= 1:
        ann = None
        for g in I.generators:
            part = J.colon(ring.ideal(g))
            ann = part if ann is None else ann.intersect(part)
        pairs.append(("ann(Ī)", ann, P[r]))
    return pairs


def colon_gorenstein_check(J, I):
    """G(I) Gorenstein iff J : I^(r-i) = J + I^(i+1) for 0 <= i <= r-1.

    R must be Gorenstein (symmetric semigroup) and J principal.
    """
    ring = I.ring
    if not is_symmetric(ring.S):
        raise HypothesisFailure(f"{ring.S} is not symmetric: R is not Gorenstein")
    _require_principal(J)
    r = reduction_number(J, I)
    half = (r - 1) // 2
    rows = [(i, J.colon(I ** (r - i)), J + I ** (i + 1)) for i in range(r)]
    conds = {
        "(2) J:I^(r-i) = J+I^(i+1), i < r": _equalities("J : I^(r-i) = J + I^(i+1)", rows),
        "(3) same, i <= (r-1)/2": _equalities("J : I^(r-i) = J + I^(i+1)", rows[:half + 1]),
    }
    details = {"r": r}
    if r == 2:
        cor = J.colon(I ** 2) == I
        conds["r = 2: J:I^2 = I"] = Verdict(cor)
    verdict = _agree("colon conditions", conds)
    if verdict and r > 0:
        cm = cm_check_G(I, J)
        if not cm.holds:
            raise CriteriaDisagree("colon conditions hold but G(I) is not Cohen-Macaulay")
        for i in range(1, r + 1):
            if (I ** r).colon(I ** (r - i)) != I ** i:
                raise CriteriaDisagree(f"claim I^r : I^(r-i) = I^i fails at i = {i}")
        details["G_CM"] = True
    return CriterionReport("G(I) Gorenstein", conds, verdict, details=details)


def lift_gorenstein_check(J, I):
    """If I^r ⊄ J and G(Ī) is Gorenstein then G(I) is Gorenstein."""
    r = reduction_number(J, I)
    hypothesis = not (I ** r <= J)
    out = {"r": r, "hypothesis I^r ⊄ J": hypothesis, "G(Ī) Gorenstein": None,
           "G(I) Gorenstein": None, "conclusion applies": False}
    quotient = quotient_gorenstein_check(J, I).verdict
    out["G(Ī) Gorenstein"] = quotient
    if hypothesis and quotient:
        out["conclusion applies"] = True
        full = colon_gorenstein_check(J, I).verdict
        out["G(I) Gorenstein"] = full
        if not full:
            raise CriteriaDisagree("I^r ⊄ J and G(Ī) Gorenstein, yet G(I) is not Gorenstein")
    return out


@dataclass
class CanonicalSlices:
    """Slices J^i : I^k of the canonical module, indexed by i (k = r)."""

    r: int
    k: int
    window: tuple
    slices: dict
    u: Optional[int]
    a: Optional[int]
    w: int
    s: int
    quasi_gorenstein: bool
    propagation_ok: bool
    conditions: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    label: str = "certified on window + propagation rule"


def _power_or_unit(I, n):
    return I ** n if n > 0 else I.ring.unit_ideal()


def max_power_containing(J, A, bound=64):
    """max { n : A ⊆ J^n }."""
    n = 0
    while n < bound and A <= J ** (n + 1):
        n += 1
    return n


def module_structure_check(J, I, n_max=4, i_max=4, r=None):
    """I^n (J^i : I^r) ⊆ J^(n+i) : I^r for 0 <= n, i <= the bounds."""
    if r is None:
        r = reduction_number(J, I)
    Ir = I ** r
    C = {i: (J ** i).colon(Ir) for i in range(i_max + n_max + 1)}
    for n in range(n_max + 1):
        for i in range(i_max + 1):
            if not (I ** n) * C[i] <= C[n + i]:
                return Verdict(False, witness("I^n (J^i:I^r) ⊆ J^(n+i):I^r", (n, i),
                                              (I ** n) * C[i], C[n + i]))
    return Verdict(True)


def quasi_gorenstein_check(J, I, window=None):
    """Quasi-Gorenstein test for R[It, 1/t] with height one and principal J.

    Searches u with J^i : I^r = I^(i-u) on -1 <= i <= window, then checks
    that J·(J^i : I^r) = J^(i+1) : I^r at the top of the window so the
    pattern propagates to every i.
    """
    ring = I.ring
    gorenstein_R = is_symmetric(ring.S)
    if not gorenstein_R:
        raise HypothesisFailure(f"{ring.S} is not symmetric: R is not Gorenstein")
    _require_principal(J)
    r = reduction_number(J, I)
    s = index_of_nilpotency(J, I)
    if window is None:
        window = r + 4
    if window < r + 3:
        raise StabilizationNotReached(f"window {window} < r + 3 = {r + 3}")
    Ir = I ** r
    idx = list(range(-1, window + 2))
    C = {i: _power_or_unit(J, i).colon(Ir) for i in idx}
    propagation = all(J * C[i] == C[i + 1] for i in range(window - 2, window + 1))
    if not propagation:
        raise StabilizationNotReached("J (J^i : I^r) != J^(i+1) : I^r at the window top")
    # I^n C_i ⊆ C_(n+i): the slices form a module over the Rees algebra.
    for n in range(0, 3):
        for i in range(0, window - n + 1):
            if not (I ** n) * C[i] <= C[n + i]:
                raise CriteriaDisagree(f"slice module structure fails at n={n}, i={i}")

    def matches(u, indices):
        for i in indices:
            if C[i] != _power_or_unit(I, i - u):
                return i
        return None

    win = list(range(-1, window + 1))
    u = next((cand for cand in range(0, r + 1) if matches(cand, win) is None), None)
    w = max_power_containing(J, Ir)
    conds = {}
    fail0 = matches(0, win)
    conds["(3) some u: J^i:I^r = I^(i-u)"] = Verdict(u is not None)
    conds["(4) J^i:I^r = I^i on window"] = Verdict(
        fail0 is None, None if fail0 is None else witness("J^i : I^r = I^i", fail0, C[fail0],
                                                          _power_or_unit(I, fail0)))
    fail5 = matches(0, range(1, r + 1))
    conds["(5) J^i:I^r = I^i, 1 <= i <= r"] = Verdict(
        fail5 is None, None if fail5 is None else witness("J^i : I^r = I^i", fail5, C[fail5],
                                                          I ** fail5))
    conds["(1) G(I) Gorenstein"] = Verdict(colon_gorenstein_check(J, I).verdict)
    verdict = _agree("canonical slice conditions", conds)
    a = None
    if u is not None:
        a = r - u
        if u != w:
            raise CriteriaDisagree(f"u = {u} but w = max{{n : I^r ⊆ J^n}} = {w}")
        if not (s <= a <= r):
            raise CriteriaDisagree(f"a-invariant {a} outside [s, r] = [{s}, {r}]")
    # equal powers: J^r : I^r = I^(r-u') forces u' = 0.
    u_prime = next((c for c in range(0, r + 1) if C[r] == _power_or_unit(I, r - c)), None)
    if u_prime not in (None, 0):
        raise CriteriaDisagree(f"J^r : I^r = I^(r-{u_prime}) with u' != 0")
    power_colon = {"u_prime": u_prime}
    if u_prime == 0:
        allp = rr_all_powers(I, max(r, 1), J)
        power_colon["all powers Ratliff-Rush"] = allp
        power_colon["conclusion G(I) Gorenstein"] = allp
        if allp and not verdict:
            raise CriteriaDisagree("equal-power colon concludes Gorenstein but the slice conditions do not")
    return CanonicalSlices(
        r=r, k=r, window=(-1, window), slices={i: C[i] for i in win}, u=u, a=a, w=w, s=s,
        quasi_gorenstein=u is not None, propagation_ok=propagation, conditions=conds,
        details={"gorenstein": verdict, "rees_gorenstein": verdict, "power_colon": power_colon,
                 "a_bounds": (s, r)})


def blowup_conductor(I, reductions):
    """Common conductor J^r : I^r over principal reductions J of I."""
    if not reductions:
        raise ValueError("need at least one principal reduction")
    rs = [reduction_number(J, I) for J in reductions]
    if len(set(rs)) != 1:
        raise CriteriaDisagree(f"reduction number depends on J: {rs}")
    r = rs[0]
    Ir = I ** r
    conductors = [_power_or_unit(J, r).colon(Ir) for J in reductions]
    if any(c != conductors[0] for c in conductors[1:]):
        raise ConductorMismatch("J^r : I^r differs between principal reductions")
    contained = [Ir <= J for J in reductions]
    if any(contained) and not all(contained):
        raise CriteriaDisagree("I^r ⊆ J for one principal reduction but not another")
    nilp = [index_of_nilpotency(J, I) for J in reductions]
    forced = None
    if conductors[0] == Ir:
        forced = (not any(contained)) and all(x == r for x in nilp)
        if not forced:
            raise CriteriaDisagree("J^r : I^r = I^r but I^r ⊆ J or s != r")
    return {"r": r, "conductor": conductors[0], "independent": True,
            "I^r ⊆ J": contained, "s": nilp, "conductor_is_I^r": conductors[0] == Ir,
            "conductor_forces_s_eq_r": forced}


def ratliff_rush_power(I, n, J=None, _cache=None):
    if n <= 0:
        return I.ring.unit_ideal()
    return ratliff_rush(I ** n, J=J ** n if J is not None else None).closure


def rr_slices_check(J, I, window=None):
    """Quasi-Gorenstein test for the Ratliff-Rush filtration's Rees algebra."""
    r = reduction_number(J, I)
    if window is None:
        window = r + 4
    top = 2 * window + 2
    RR = {n: ratliff_rush_power(I, n, J) for n in range(0, top + 1)}

    def rr(n):
        return RR[n] if n > 0 else I.ring.unit_ideal()

    k = None
    for cand in range(0, window + 1):
        if all(J * rr(cand + j) == rr(cand + j + 1) for j in range(0, top - cand)):
            k = cand
            break
    if k is None:
        raise HypothesisNotDetected("no k with J^j Ĩ^k = Ĩ^(j+k) on the window")
    D = {i: _power_or_unit(J, i).colon(rr(k)) for i in range(-1, window + 1)}
    b = None
    for cand in range(k, k - window - 1, -1):
        if all(D[i] == rr(i + cand - k) for i in D):
            b = cand
            break
    return {"k": k, "b": b, "u": None if b is None else k - b,
            "quasi_gorenstein": b is not None,
            "rr_powers": {n: RR[n] for n in range(1, window + 1)}}
