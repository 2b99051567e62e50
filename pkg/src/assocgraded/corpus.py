"""Built-in worked examples with their expected values.

Each case computes a flat dict of named values; ``run_corpus`` diffs them
against the expected table.  Keys in EXPECTED are the complete list of
checks; computed values that are not listed are reported but not diffed.
"""

import copy

from .errors import CorpusMismatch
from .filtration import (analyze_filtration, cm_check_G, fiber_cm_dim1, index_of_nilpotency,
                         normal_flatness, quotient_hilbert_function, ratliff_rush,
                         reduction_number, socle_table)
from .gorenstein import (artinian_gorenstein, blowup_conductor, lift_gorenstein_check,
                         quasi_gorenstein_check, rr_slices_check, quotient_gorenstein_check, colon_gorenstein_check)
from .ideals import SemigroupRing
from .monomial import MonomialQuotientRing
from .presentation import ci_assess, present_F, present_G, presentation_summary
from .semigroup import build_semigroup


def _ring(gens, scale=1):
    """A fresh session; ``scale`` multiplies the default starting precision."""
    R = SemigroupRing(build_semigroup(gens))
    return R if scale == 1 else R.with_precision(scale * R.precision)


def _ci(p, hilb):
    return ci_assess(p, 1, hilb[:p.degree_bound + 2])["verdict"].startswith("complete")


def case_4_9_10(scale=1, D=6):
    R = _ring([4, 9, 10], scale)
    I, J = R.ideal(8, 9, 10), R.ideal(8)
    rep = analyze_filtration(I, J, N=D + 1)
    G = present_G(I, D=D)
    return {
        "r": rep.r, "s": rep.s, "colength_I": R.colength(I), "mu_I": R.min_generators(I),
        "e_I": rep.e_I, "ranks_0_3": rep.hilb_F[:4], "normally_flat": rep.normally_flat,
        "G_CM": rep.G_CM.holds, "F_CM": rep.F_CM_dim1.holds,
        "L_degrees": G.generator_degrees,
        "L_representatives": presentation_summary(R, G)["representatives"],
        "L_CI": _ci(G, rep.hilb_G), "G_gorenstein": colon_gorenstein_check(J, I).verdict,
        "socle": socle_table(J, I), "lift_applies": lift_gorenstein_check(J, I)["conclusion applies"],
    }


def case_3_7_11(scale=1, D=6):
    R = _ring([3, 7, 11], scale)
    I = R.ideal(6, 7, 11)
    J = R.ideal(6)
    I2 = I ** 2
    nf = normal_flatness(I, N=6)
    rep = analyze_filtration(I, J, N=D + 1)
    G = present_G(I, D=D)
    return {
        "colength_I": R.colength(I), "colength_I2": R.colength(I2),
        "length_I_mod_I2": R.colength(I2) - R.colength(I),
        "I2_equals_t12_t13_t14": I2 == R.ideal(12, 13, 14), "mu_I2": R.min_generators(I2),
        "free_degrees_1_6": nf.free_degrees[1:7], "ranks_2_6": nf.ranks[2:7],
        "e_I": rep.e_I, "e_F": rep.e_F, "e_I_equals_colength_times_e_F":
            rep.e_I == R.colength(I) * rep.e_F,
        "G_CM": rep.G_CM.holds, "F_CM": rep.F_CM_dim1.holds,
        "J_cap_I2_equals_JI": J.intersect(I2) == J * I,
        "L_degrees": G.generator_degrees,
        "L_representatives": presentation_summary(R, G)["representatives"],
        "L_CI": _ci(G, rep.hilb_G),
    }


def case_3_4_5(scale=1, D=6):
    R = _ring([3, 4, 5], scale)
    I, J = R.ideal(3, 4), R.ideal(3)
    rep = analyze_filtration(I, J, N=D + 1)
    G, F = present_G(I, D=D), present_F(I, D=D)
    return {
        "r": rep.r, "colength_I": R.colength(I),
        "length_I_mod_I2": R.colength(I ** 2) - R.colength(I),
        "e_I": rep.e_I, "e_F": rep.e_F, "L_degrees": G.generator_degrees,
        "L_representatives": presentation_summary(R, G)["representatives"],
        "K_representatives": presentation_summary(R, F)["representatives"],
        "K_CI": _ci(F, rep.hilb_F), "L_CI": _ci(G, rep.hilb_G),
        "I_mod_I2_free": rep.free_degrees[1],
    }


def case_5_6_9(scale=1):
    R = _ring([5, 6, 9], scale)
    m, J = R.maximal_ideal(), R.ideal(5)
    return {
        "r": reduction_number(J, m), "quotient_hilbert": quotient_hilbert_function(J, m),
        "R_mod_J_gorenstein": artinian_gorenstein(J),
        "quotient_G_gorenstein": quotient_gorenstein_check(J, m).verdict,
        "G_gorenstein": colon_gorenstein_check(J, m).verdict, "G_CM": cm_check_G(m, J).holds,
    }


def case_4_5_6(scale=1):
    R = _ring([4, 5, 6], scale)
    I, J, J2 = R.ideal(4, 5), R.ideal(4), R.ideal("t^4 - t^5")
    cond = blowup_conductor(I, [J, J2])
    return {
        "r": reduction_number(J, I), "r_prime": reduction_number(J2, I),
        "s_J": index_of_nilpotency(J, I), "s_J_prime": index_of_nilpotency(J2, I),
        "colength_J": R.colength(J), "colength_J_prime": R.colength(J2),
        "quotient_gorenstein_J": quotient_gorenstein_check(J, I).verdict,
        "quotient_gorenstein_J_prime": quotient_gorenstein_check(J2, I).verdict,
        "quotient_hilbert_J_prime": quotient_hilbert_function(J2, I),
        "G_CM": cm_check_G(I, J).holds, "J_cap_I2_equals_JI": J.intersect(I ** 2) == J * I,
        "conductors_equal": cond["independent"],
        "lift_hypothesis": lift_gorenstein_check(J, I)["hypothesis I^r ⊄ J"],
    }


def case_5_6_7_8(scale=1):
    R = _ring([5, 6, 7, 8], scale)
    m, J = R.maximal_ideal(), R.ideal(5)
    I = R.ideal(5, 6, 7)
    qm = quasi_gorenstein_check(J, m)
    qi = quasi_gorenstein_check(J, I)
    cond = blowup_conductor(I, [J])
    return {
        "r": reduction_number(J, I), "J2_colon_I2_equals_I2": (J ** 2).colon(I ** 2) == I ** 2,
        "G_CM": cm_check_G(I, J).holds, "rr_closure_is_m": ratliff_rush(I, J=J).closure == m,
        "m_u": qm.u, "m_a": qm.a, "m_gorenstein": qm.details["gorenstein"],
        "I_u_prime": qi.details["power_colon"]["u_prime"],
        "I_all_powers_rr": qi.details["power_colon"]["all powers Ratliff-Rush"],
        "I_quasi_gorenstein": qi.quasi_gorenstein,
        "conductor_is_I2": cond["conductor_is_I^r"], "s": cond["s"][0],
        "I2_in_J": cond["I^r ⊆ J"][0], "rr_slices_b": rr_slices_check(J, I)["b"],
    }


def case_4_5_6_slices(scale=1):
    R = _ring([4, 5, 6], scale)
    m, J = R.maximal_ideal(), R.ideal(4)
    I = R.ideal(4, 5)
    rr = rr_slices_check(J, I)
    return {
        "rr_powers_are_m_powers": all(ratliff_rush(I ** i, J=J ** i).closure == m ** i
                                      for i in range(1, 6)),
        "I3_equals_m3": I ** 3 == m ** 3,
        "J_i_colon_I3_is_m_i_minus_1": all((J ** i).colon(I ** 3) == m ** (i - 1)
                                           for i in range(1, 7)),
        "J_i_colon_m2_is_m_i": all((J ** i).colon(m ** 2) == m ** i for i in range(1, 7)),
        "u": quasi_gorenstein_check(J, I).u, "rr_slices_b": rr["b"],
    }


def case_monomial_xy(scale=1, D=6):
    Q = MonomialQuotientRing(("x", "y"), [(2, 1), (0, 3)])
    I = Q.ideal("x")
    G, F = present_G(I, D=D), present_F(I, D=D)
    return {
        "lengths": [Q.colength(I), Q.colength(I ** 2)],
        "L_dims_0_2": G.kernel_dims[:3], "L_first_degree": min(G.new_generators),
        "L_representatives": presentation_summary(Q, G)["representatives"],
        "N_G_at_least": G.relation_type_lower_bound, "K_dims": F.kernel_dims,
        "N_F": F.relation_type_lower_bound,
    }


def case_monomial_xyz(scale=1, D=6):
    Q = MonomialQuotientRing(("x", "y", "z"), [(2, 0, 0), (0, 2, 0), (1, 1, 2)])
    I = Q.ideal("y", "z")
    G, F = present_G(I, D=D), present_F(I, D=D)
    c = [Q.colength(I ** i) for i in range(4)]
    return {
        "colength_I": c[1], "length_I_mod_I2": c[2] - c[1], "length_I2_mod_I3": c[3] - c[2],
        "K_representatives": presentation_summary(Q, F)["representatives"],
        "N_F": F.relation_type_lower_bound, "L_dims_1_2": G.kernel_dims[1:3],
        "L_degrees": G.generator_degrees,
        "L_representatives": presentation_summary(Q, G)["representatives"],
        "N_G_at_least": G.relation_type_lower_bound,
    }


CASES = {
    "2.9": case_4_9_10, "2.13": case_3_7_11, "2.10": case_3_4_5, "3.5": case_5_6_9,
    "3.11": case_4_5_6, "4.5": case_5_6_7_8, "4.51": case_4_5_6_slices,
    "inline-1": case_monomial_xy, "inline-2": case_monomial_xyz,
}

EXPECTED = {
    "2.9": {"r": 2, "s": 2, "colength_I": 2, "mu_I": 3, "e_I": 8, "ranks_0_3": [1, 3, 4, 4],
            "normally_flat": True, "G_CM": True, "F_CM": True, "L_degrees": [2, 2],
            "L_representatives": ["t^4*X^2 - Z^2", "X*Z - Y^2"], "L_CI": True,
            "G_gorenstein": True, "socle": [0, 0, 1], "lift_applies": True},
    "2.13": {"colength_I": 2, "colength_I2": 7, "length_I_mod_I2": 5,
             "I2_equals_t12_t13_t14": True, "mu_I2": 3,
             "free_degrees_1_6": [False, True, True, True, True, True],
             "ranks_2_6": [3, 3, 3, 3, 3], "e_I": 6, "e_F": 3,
             "e_I_equals_colength_times_e_F": True, "G_CM": True, "F_CM": False,
             "J_cap_I2_equals_JI": True, "L_degrees": [1, 2, 2, 2, 3],
             "L_representatives": ["t^3*Z", "X*Z - t^3*Y^2", "Y*Z", "Z^2", "t^3*X^3 - Y^3"],
             "L_CI": False},
    "2.10": {"r": 2, "colength_I": 2, "length_I_mod_I2": 2, "e_I": 3, "e_F": 3,
             "L_degrees": [1, 1, 3], "L_representatives": ["t^5*X", "t^5*Y", "Y^3"],
             "K_representatives": ["Y^3"], "K_CI": True, "L_CI": False,
             "I_mod_I2_free": False},
    "3.5": {"r": 3, "quotient_hilbert": [1, 2, 1, 1], "R_mod_J_gorenstein": True,
            "quotient_G_gorenstein": False, "G_gorenstein": False, "G_CM": True},
    "3.11": {"r": 3, "r_prime": 3, "s_J": 1, "s_J_prime": 2, "colength_J": 4,
             "colength_J_prime": 4, "quotient_gorenstein_J": True,
             "quotient_gorenstein_J_prime": False, "quotient_hilbert_J_prime": [2, 1, 1],
             "G_CM": False, "J_cap_I2_equals_JI": False, "conductors_equal": True,
             "lift_hypothesis": False},
    "4.5": {"r": 2, "J2_colon_I2_equals_I2": True, "G_CM": False, "rr_closure_is_m": True,
            "m_u": 0, "m_a": 2, "m_gorenstein": True, "I_u_prime": 0,
            "I_all_powers_rr": False, "I_quasi_gorenstein": False, "conductor_is_I2": True,
            "s": 2, "I2_in_J": False},
    "4.51": {"rr_powers_are_m_powers": True, "I3_equals_m3": True,
             "J_i_colon_I3_is_m_i_minus_1": True, "J_i_colon_m2_is_m_i": True, "u": None},
    "inline-1": {"lengths": [3, 6], "L_dims_0_2": [0, 0, 2], "L_first_degree": 2,
                 "L_representatives": ["y*X^2"], "N_G_at_least": 2,
                 "K_dims": [0, 0, 0, 0, 0, 0, 0], "N_F": 1},
    "inline-2": {"colength_I": 2, "length_I_mod_I2": 4, "length_I2_mod_I3": 4,
                 "K_representatives": ["Y^2"], "N_F": 2, "L_dims_1_2": [0, 2],
                 "L_degrees": [2, 3], "L_representatives": ["Y^2", "x*Y*Z^2"],
                 "N_G_at_least": 3},
}


def select(filter_text=None):
    if not filter_text:
        return list(CASES)
    wanted = [w.strip() for w in filter_text.split(",") if w.strip()]
    unknown = [w for w in wanted if w not in CASES]
    if unknown:
        raise KeyError(f"unknown corpus case(s): {', '.join(unknown)}")
    return [c for c in CASES if c in wanted]


def perturbed(expected, case):
    """A copy of ``expected`` with one value of ``case`` changed (self-test)."""
    out = copy.deepcopy(expected)
    key = sorted(out[case])[0]
    v = out[case][key]
    if isinstance(v, bool):
        out[case][key] = not v
    elif isinstance(v, int):
        out[case][key] = v + 1
    else:
        out[case][key] = ["perturbed", v]
    return out


def compute(filter_text=None, scale=1):
    return {case: CASES[case](scale=scale) for case in select(filter_text)}


def run_corpus(filter_text=None, expected=None, scale=1):
    """Run and diff the selected cases; raise CorpusMismatch on any difference."""
    expected = EXPECTED if expected is None else expected
    computed = compute(filter_text, scale)
    mismatches = []
    summary = []
    for case, got in computed.items():
        want = expected[case]
        bad = [k for k in want if got.get(k) != want[k]]
        mismatches += [{"case": case, "field": k, "expected": want[k], "got": got.get(k)}
                       for k in bad]
        summary.append({"case": case, "checks": len(want), "failed": len(bad)})
    report = {"cases": summary, "mismatches": mismatches,
              "passed": not mismatches, "computed": computed}
    if mismatches:
        err = CorpusMismatch(mismatches)
        err.report = report
        raise err
    return report


def corpus_result(filter_text=None, self_test=False):
    """(report, exit code) for the script runner and the command line."""
    expected = EXPECTED
    if self_test:
        expected = perturbed(EXPECTED, select(filter_text)[0])
    try:
        report = run_corpus(filter_text, expected)
        code = 0
    except CorpusMismatch as e:
        report, code = e.report, 1
    report = dict(report, command="corpus", filter=filter_text, self_test=self_test)
    return report, code
