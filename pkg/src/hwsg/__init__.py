"""Combinatorial Huneke-Wiegand checks for numerical semigroups."""

from .errors import DomainError
from .semigroup import (
    AperySet,
    NumericalSemigroup,
    delta_set,
    stable_delta_intersection,
)
from .ideals import RelativeIdeal, enumerate_ideals_up_to_shift
from .hw import (
    HWReport,
    Verdict,
    check_all_ideals,
    check_all_two_generated,
    check_two_generated,
    is_huneke_wiegand,
    lemma_nmid_check,
)
from .sequences import (
    ArithmeticSequence,
    factorizations_two_step,
    find_irreducible_two_step,
    in_sequence_semigroup,
    is_irreducible,
    shift_apery_witness,
)
from .gluing import (
    DecompositionTree,
    Gluing,
    apery_product,
    detect_complete_intersection,
    detect_free,
    extend_ideal,
    glue,
    propglue_witness,
    verify_gluing_identities,
)
from .enumeration import (
    CorpusSpec,
    VerificationReport,
    genus_tree,
    gluing_closure,
    symmetric_below,
    verify_hw_corpus,
)

__all__ = [
    "AperySet",
    "ArithmeticSequence",
    "CorpusSpec",
    "DecompositionTree",
    "DomainError",
    "Gluing",
    "HWReport",
    "NumericalSemigroup",
    "RelativeIdeal",
    "Verdict",
    "VerificationReport",
    "apery_product",
    "check_all_ideals",
    "check_all_two_generated",
    "check_two_generated",
    "delta_set",
    "detect_complete_intersection",
    "detect_free",
    "enumerate_ideals_up_to_shift",
    "extend_ideal",
    "factorizations_two_step",
    "find_irreducible_two_step",
    "genus_tree",
    "glue",
    "gluing_closure",
    "in_sequence_semigroup",
    "is_huneke_wiegand",
    "is_irreducible",
    "lemma_nmid_check",
    "propglue_witness",
    "shift_apery_witness",
    "stable_delta_intersection",
    "symmetric_below",
    "verify_gluing_identities",
    "verify_hw_corpus",
]
