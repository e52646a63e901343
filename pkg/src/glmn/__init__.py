"""Exact symbolic toolkit for induced modules of the general linear
supergroup GL(m|n): the supercommutative coordinate algebra with its
localization at the even-block determinant, right superderivations,
highest vectors, hook Schur characters, and irreducibility decisions."""

from .superalg import (
    LocalizedElement,
    RingContext,
    SuperPolynomial,
    det_c11,
    det_c11_power,
    loc_eq,
    mono_mul,
    validate_characteristic,
)
from .derivations import (
    adjugate_entry,
    derive_loc,
    derive_poly,
    det_minus,
    det_plus,
    dminus_product,
    entry_replace_derive,
    full_lowering_chain,
    highest_vector,
    minor,
    phi_entry,
    row_derivation_chain,
    y_entry,
    y_product,
    y_row,
)
from .weights import (
    HookPartition,
    TypicalityReport,
    Weight,
    berezin_normalize,
    conjugate,
    hook_to_weight,
    is_typical,
    kappa_weight,
    omega,
    omega_matrix,
    omega_row_product,
    weight_to_hook,
)
from .characters import (
    LaurentSymPoly,
    char_induced,
    dim_even,
    dim_induced,
    factorization_check,
    hook_schur,
    schur,
    schur_count,
)
from .theorems import (
    ClosureResult,
    IrreducibilityVerdict,
    VERIFY_TARGETS,
    VerificationReport,
    closure_oracle,
    corollary_verdicts,
    decide_irreducible,
    verify_jacobi,
    verify_laplace9,
    verify_lemma1,
    verify_lemma2,
    verify_lemma3,
    verify_lemma3_4,
    verify_lemma4,
    verify_lemma5,
    verify_lemma6,
    verify_lemma10,
    verify_lemma11,
    verify_lemma13,
    verify_prop7,
    verify_prop12,
)

__version__ = "0.1.0"
