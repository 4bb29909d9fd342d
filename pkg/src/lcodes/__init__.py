"""Additive codes over the Klein four group.

Words are packed two bits per coordinate; codes are additive (F2-linear)
subgroups identified by a reduced echelon basis.  The package covers weight
enumerators and the dual transform, the invariant ring of self-dual
enumerators, structure maps between the two flavors and binary codes,
canonical forms and automorphism groups under coordinate permutations with
local symbol actions, and the classification of self-dual codes by length
with mass-formula verification.
"""

from .klein import (
    LcodeError,
    SignedPermutation,
    add,
    ewt,
    format_word,
    group_generators,
    group_order,
    hwt,
    identity_perm,
    inner,
    parse_word,
    quad,
)
from .codes import (
    LinearCode,
    SplitStructure,
    even_odd_transfer,
    self_dual_extensions,
)
from .enumerators import (
    Polynomial,
    cwe,
    euclid_we,
    hamming_we,
    macwilliams_hamming,
    macwilliams_swe,
    macwilliams_swe_inverse,
    swe,
)
from .invariants import (
    decompose_even,
    decompose_general,
    decompose_hamming,
    expand_even,
    expand_general,
    expand_hamming,
    is_selfdual_invariant,
    jacobian_det,
    molien_series,
    verify_ew_relation,
)
from .maps import (
    BinaryCode,
    MarkingClass,
    beta,
    beta_word,
    marking_classes,
    mu_marking,
    phi,
    phi_inv,
    phi_inv_marked,
    psi,
    sigma,
)
from .symmetry import (
    AutGroup,
    CanonicalResult,
    are_equivalent,
    aut_group,
    canonical_form,
    kleinian_aut_group,
)
from .catalog import named, named_catalog
from .classify import (
    ClassRecord,
    MassReport,
    census_by_min_weight,
    classify_self_dual,
    distinct_self_dual_count,
    even_odd_census,
    expected_mass,
    extremal_bound,
    find_extremal,
    indecomposable_count,
    mass_check,
    sharpened_extremal_bound,
)

__version__ = "0.1.0"
