"""Witness terms for the set-theoretic axioms and the checks built on them."""

from topo_forcing.witnesses.checks import (
    WitnessReport,
    check_demo,
    check_exponentiation,
    check_generic_settling,
    check_infinity,
    check_left_cut,
    check_not_ground,
    check_pairing,
    check_powerset,
    check_separation,
    check_union,
    cut_nodes,
    refine_grid,
)
from topo_forcing.witnesses.constructors import (
    exp_candidate,
    function_formula,
    ground_functions,
    kpair,
    omega_term,
    pair_term,
    powerset_failure_demo,
    powerset_term,
    sep_term,
    settled_instances,
    subset_choices,
    union_term,
    witness_context,
)

__all__ = [
    "WitnessReport",
    "check_demo",
    "check_exponentiation",
    "check_generic_settling",
    "check_infinity",
    "check_left_cut",
    "check_not_ground",
    "check_pairing",
    "check_powerset",
    "check_separation",
    "check_union",
    "cut_nodes",
    "exp_candidate",
    "function_formula",
    "ground_functions",
    "kpair",
    "omega_term",
    "pair_term",
    "powerset_failure_demo",
    "powerset_term",
    "refine_grid",
    "sep_term",
    "settled_instances",
    "subset_choices",
    "union_term",
    "witness_context",
]
