"""The I-adic filtration: reductions, Hilbert functions, freeness, closures.

Functions here only use the ideal protocol shared by both backends
(``+ * ** colon intersect == <=``, ``ring.colength``, ``ring.min_generators``),
so they run unchanged over semigroup rings and monomial quotients.
"""

from dataclasses import dataclass, field
from typing import Optional

from .errors import (CriteriaDisagree, NoReductionWithinBound, NotArtinian, NotContained,
                     StabilizationNotReached)

DEFAULT_BOUND = 32


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[dict] = None
    note: str = ""

    def __bool__(self):
        return self.holds

    def as_dict(self):
        d = {"holds": self.holds}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.note:
            d["note"] = self.note
        return d


def witness(label, index, lhs, rhs):
    return {"condition": label, "index": index, "lhs": lhs.summary(), "rhs": rhs.summary()}


def principal_reduction(I):
    """xR for an element x of I of least valuation (semigroup rings only).

    In k[[t^S]] such an x always generates a minimal reduction of I.
    """
    ring = I.ring
    if I.is_unit():
        return I
    return ring.ideal(I.least_element())


def reduction_analysis(J, I, bound=DEFAULT_BOUND):
    """(is_reduction, r): the least k <= bound with J I^k = I^(k+1)."""
    if not J <= I:
        raise NotContained("a reduction J must satisfy J ⊆ I")
    for k in range(bound + 1):
        if J * I ** k == I ** (k + 1):
            return True, k
    raise NoReductionWithinBound(f"J I^k != I^(k+1) for all k <= {bound}")


def reduction_number(J, I, bound=DEFAULT_BOUND):
    return reduction_analysis(J, I, bound)[1]


def index_of_nilpotency(J, I, bound=DEFAULT_BOUND):
    """s_J(I) = min { i : I^(i+1) ⊆ J }."""
    for i in range(bound + 1):
        if I ** (i + 1) <= J:
            return i
    raise NoReductionWithinBound(f"I^(i+1) ⊄ J for all i <= {bound}")


@dataclass
class HilbertData:
    hilb_G: list
    hilb_F: list
    e_I: int
    e_F: int
    quotient: Optional[list] = None


def _stable(values, what):
    if len(values) < 3 or len(set(values[-3:])) != 1:
        raise StabilizationNotReached(f"{what} not stable on the window: {values}")
    return values[-1]


def hilbert_functions(I, J=None, N=None):
    ring = I.ring
    if N is None:
        N = 6
    if J is not None:
        N = max(N, reduction_number(J, I) + 2)
    col = [ring.colength(I ** i) for i in range(N + 2)]
    hilb_G = [col[i + 1] - col[i] for i in range(N + 1)]
    hilb_F = [ring.min_generators(I ** i) for i in range(N + 1)]
    quotient = quotient_hilbert_function(J, I) if J is not None else None
    return HilbertData(hilb_G, hilb_F, _stable(hilb_G, "λ(I^i/I^(i+1))"),
                       _stable(hilb_F, "μ(I^i)"), quotient)


def quotient_hilbert_function(J, I, bound=DEFAULT_BOUND):
    """λ(Ī^i/Ī^(i+1)) in R/J, listed until Ī^i = 0."""
    ring = I.ring
    out = []
    prev = ring.colength(J + I ** 0)
    for i in range(bound + 1):
        cur = ring.colength(J + I ** (i + 1))
        if cur == prev:
            return out
        out.append(cur - prev)
        prev = cur
    raise NotArtinian("Ī is not nilpotent in R/J within the bound")


@dataclass
class Flatness:
    normally_flat: bool
    free_degrees: list
    ranks: list
    lengths: list
    total: bool


def normal_flatness(I, N=6, J=None):
    """Per-degree freeness of I^i/I^(i+1) over R/I via λ(M) = λ(R/I)·μ(M)."""
    ring = I.ring
    total = False
    if J is not None:
        N = max(N, reduction_number(J, I))
        total = True
    base = ring.colength(I)
    lengths, ranks, flags = [], [], []
    for i in range(N + 1):
        ln = ring.colength(I ** (i + 1)) - ring.colength(I ** i)
        mu = ring.min_generators(I ** i)
        lengths.append(ln)
        ranks.append(mu)
        flags.append(ln == base * mu)
    return Flatness(all(flags), flags, ranks, lengths, total)


@dataclass
class RatliffRush:
    closure: object
    certified: bool
    steps: int
    chain_colengths: list


def ratliff_rush(I, margin=2, J=None):
    """Ratliff-Rush closure as the stabilized chain (I^(n+1) : I^n).

    Stops at the first n >= r_J(I) after which the chain has been constant
    for ``margin`` steps.  With a principal regular reduction the chain is
    constant from n = r on, so the stop is exact; ``certified`` records
    W·I^n = I^(n+1) at the stopping depth.
    """
    if J is None:
        J = principal_reduction(I)
    r = reduction_number(J, I)
    chain = []
    n = 0
    while True:
        n += 1
        chain.append((I ** (n + 1)).colon(I ** n))
        if n >= r and len(chain) > margin and all(w == chain[-1] for w in chain[-margin - 1:]):
            break
        if n > DEFAULT_BOUND + r + margin:
            raise StabilizationNotReached("Ratliff-Rush chain did not pause")
    W = chain[-1]
    certified = W * I ** n == I ** (n + 1)
    return RatliffRush(W, certified, n, [w.colength() for w in chain])


def rr_all_powers(I, N, J=None):
    """True iff I^i is Ratliff-Rush for 1 <= i <= N."""
    return rr_first_failure(I, N, J) is None


def rr_first_failure(I, N, J=None):
    for i in range(1, N + 1):
        Ji = J ** i if J is not None else None
        closure = ratliff_rush(I ** i, J=Ji).closure
        if closure != I ** i:
            return i, closure
    return None


def cm_check_G(I, J):
    """Valabrega-Valla: G(I) is CM iff J ∩ I^i = J I^(i-1) for 1 <= i <= r.

    Cross-checked against the Ratliff-Rush characterization (all powers of
    I are Ratliff-Rush) which is exact in dimension one.
    """
    r = reduction_number(J, I)
    vv = Verdict(True, note=f"Valabrega-Valla on 1 <= i <= {r}")
    for i in range(1, r + 1):
        lhs = J.intersect(I ** i)
        rhs = J * I ** (i - 1)
        if lhs != rhs:
            vv = Verdict(False, witness("J ∩ I^i = J I^(i-1)", i, lhs, rhs))
            break
    fail = rr_first_failure(I, max(r, 1), J)
    if (fail is None) != vv.holds:
        raise CriteriaDisagree(
            f"Valabrega-Valla says {vv.holds}, Ratliff-Rush powers say {fail is None}")
    return vv


def fiber_cm_dim1(I, J, N=None):
    """F(I) is CM iff x* is F-regular: (m I^(i+1) : x) ∩ I^i = m I^i, 0 <= i <= N."""
    ring = I.ring
    r = reduction_number(J, I)
    N = max(N or 0, r + 1)
    m = ring.maximal_ideal()
    for i in range(N + 1):
        lhs = (m * I ** (i + 1)).colon(J).intersect(I ** i)
        rhs = m * I ** i
        if lhs != rhs:
            return Verdict(False, witness("(m I^(i+1) : x) ∩ I^i = m I^i", i, lhs, rhs))
    return Verdict(True, note=f"checked 0 <= i <= {N}")


def socle_table(J, I, gorenstein=None):
    """λ(S_i) for the socle of G(Ī) in the Artinian ring R/J, 0 <= i <= s."""
    ring = I.ring
    if J.is_unit():
        raise NotArtinian("R/J is the zero ring")
    s = index_of_nilpotency(J, I)
    m = ring.maximal_ideal()
    P = [J + I ** i for i in range(s + 3)]
    table = []
    for i in range(s + 1):
        num = P[i].intersect(P[i + 1].colon(m)).intersect(P[i + 2].colon(I))
        table.append(ring.colength(P[i + 1]) - ring.colength(num))
    if gorenstein and table[-1] != 1:
        raise CriteriaDisagree(f"top socle piece has length {table[-1]} over a Gorenstein R/J")
    return table


@dataclass
class FiltrationReport:
    reduction_valid: Optional[bool]
    r: Optional[int]
    s: Optional[int]
    hilb_G: list
    hilb_F: list
    e_I: int
    e_F: int
    free_degrees: list
    normally_flat: bool
    normal_flatness_total: bool
    G_CM: Optional[Verdict]
    F_CM_dim1: Optional[Verdict]
    rr_closure: object = None
    rr_certified: Optional[bool] = None
    rr_all_powers: Optional[bool] = None
    quotient_hilbert: Optional[list] = None
    colengths: dict = field(default_factory=dict)


def analyze_filtration(I, J=None, N=None, margin=2):
    ring = I.ring
    r = s = None
    valid = None
    if J is not None:
        valid, r = reduction_analysis(J, I)
        s = index_of_nilpotency(J, I)
    hd = hilbert_functions(I, J, N)
    nf = normal_flatness(I, max(N or 6, len(hd.hilb_G) - 1), J)
    G_CM = F_CM = closure = certified = allp = None
    if J is not None and hasattr(ring, "S"):
        G_CM = cm_check_G(I, J)
        F_CM = fiber_cm_dim1(I, J)
        rr = ratliff_rush(I, margin, J)
        closure, certified = rr.closure, rr.certified
        allp = rr_all_powers(I, max(r, 1), J)
    return FiltrationReport(
        reduction_valid=valid, r=r, s=s, hilb_G=hd.hilb_G, hilb_F=hd.hilb_F, e_I=hd.e_I,
        e_F=hd.e_F, free_degrees=nf.free_degrees, normally_flat=nf.normally_flat,
        normal_flatness_total=nf.total, G_CM=G_CM, F_CM_dim1=F_CM, rr_closure=closure,
        rr_certified=certified, rr_all_powers=allp, quotient_hilbert=hd.quotient,
        colengths={f"R/I^{i}": ring.colength(I ** i) for i in range(len(hd.hilb_G) + 1)})
