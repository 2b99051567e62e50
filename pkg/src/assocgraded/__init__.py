"""Associated graded rings, fiber cones and Gorenstein criteria in dimension one.

Rings: ``SemigroupRing`` (k[[t^S]] with certified truncation) and
``MonomialQuotientRing`` (k[x_1..x_n]/H for a monomial ideal H).
"""

from .errors import *  # noqa: F401,F403
from .filtration import (analyze_filtration, cm_check_G, fiber_cm_dim1, hilbert_functions,
                         index_of_nilpotency, normal_flatness, principal_reduction,
                         quotient_hilbert_function, ratliff_rush, reduction_analysis,
                         reduction_number, rr_all_powers, socle_table)
from .gorenstein import (artinian_gorenstein, blowup_conductor, lift_gorenstein_check,
                         module_structure_check, quasi_gorenstein_check, rr_slices_check,
                         quotient_gorenstein_check, colon_gorenstein_check)
from .ideals import SemigroupRing, length, min_generators
from .monomial import MonomialQuotientRing
from .presentation import ci_assess, present_F, present_G
from .semigroup import NumericalSemigroup, build_semigroup, is_symmetric
from .series import QQ, PrimeField, Series, parse_field

__version__ = "0.1.0"
