"""Finite commutative rings and modules: GV ideals and w-closures by brute force."""

from .catalog import default_catalog_path, load_catalog, run_catalog, run_ring, test_modules
from .lab import (
    CheckResult,
    GVSet,
    HomReport,
    Thm25Report,
    WCGVerdict,
    check_closure_operator,
    check_gv_multiplicative,
    check_lemma_2_1,
    check_m_bracket,
    check_star_axioms,
    gv_set,
    gv_torsion,
    hom_to_ring,
    ideal_label,
    is_gv_ideal,
    is_w_cofinitely_generated,
    is_w_ideal,
    is_w_module,
    m_bracket_p,
    prime_ideals,
    theorem_2_5_consistency,
    w_closed_submodules,
    w_closure_in,
)
from .structures import (
    FinIdeal,
    FinModule,
    FinRing,
    RingSizeError,
    build_ring,
    direct_sum,
    quotient_module,
    zero_module,
)


def enumerate_ideals(R: FinRing) -> list[FinIdeal]:
    return R.ideals()
