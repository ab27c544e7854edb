"""Square patterns in polynomial orbits over finite fields of odd
characteristic: field and polynomial arithmetic, orbit sign sequences,
ordinariness classification, the exceptional families, and exact
character-sum bound checks."""

from .bounds import (
    EnvelopeCheck,
    OrbitBoundReport,
    RunBoundReport,
    WeilCheck,
    char_sum,
    choose_L,
    compute_B,
    envelope_check,
    orbit_bound_check,
    run_bound_check,
    t_set_size,
    weil_check,
)
from .chebyshev import IntPoly, chebyshev, cyclotomic, psi, tilde_chebyshev
from .classify import (
    NOT_ORDINARY,
    NOT_TWO_ORDINARY,
    ORDINARY,
    TWO_ORDINARY,
    ClassificationReport,
    ConjugacyWitness,
    FamilyParams,
    FormMatch,
    HnSequence,
    OracleResult,
    are_conjugate,
    chebyshev_conjugacy,
    classify_2_ordinary,
    classify_ordinary,
    generate_family,
    hn_sequence,
    iterate_factor_levels,
    oracle_2_ordinary,
    oracle_ordinary,
)
from .dynamics import (
    OrbitSummary,
    PreimageLevel,
    RunReport,
    SignSequence,
    TreeRepeat,
    embed,
    embed_poly,
    forward_orbit,
    longest_run,
    preimages,
    roots_in_field,
    sign_sequence,
    tree_is_repeating,
)
from .errors import OrbitSquaresError
from .field import FieldElement, FieldSpec, make_field
from .fpoly import (
    DEFAULT_DEGREE_BUDGET,
    Factorization,
    Poly,
    SquareDecomposition,
    constant_times_square,
    factor,
    gcd,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "ConjugacyWitness",
    "DEFAULT_DEGREE_BUDGET",
    "EnvelopeCheck",
    "Factorization",
    "FamilyParams",
    "FieldElement",
    "FieldSpec",
    "FormMatch",
    "HnSequence",
    "IntPoly",
    "NOT_ORDINARY",
    "NOT_TWO_ORDINARY",
    "ORDINARY",
    "OracleResult",
    "OrbitBoundReport",
    "OrbitSquaresError",
    "OrbitSummary",
    "Poly",
    "PreimageLevel",
    "RunBoundReport",
    "RunReport",
    "SignSequence",
    "SquareDecomposition",
    "TWO_ORDINARY",
    "TreeRepeat",
    "WeilCheck",
    "are_conjugate",
    "char_sum",
    "chebyshev",
    "chebyshev_conjugacy",
    "choose_L",
    "classify_2_ordinary",
    "classify_ordinary",
    "compute_B",
    "constant_times_square",
    "cyclotomic",
    "embed",
    "embed_poly",
    "envelope_check",
    "factor",
    "forward_orbit",
    "gcd",
    "generate_family",
    "hn_sequence",
    "iterate_factor_levels",
    "longest_run",
    "make_field",
    "oracle_2_ordinary",
    "oracle_ordinary",
    "orbit_bound_check",
    "preimages",
    "psi",
    "roots_in_field",
    "run_bound_check",
    "sign_sequence",
    "t_set_size",
    "tilde_chebyshev",
    "tree_is_repeating",
    "weil_check",
]
