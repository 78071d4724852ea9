"""Finite monoids: Green's structure, Schützenberger groups, congruences and separation.

Infinite example monoids with windowed verification live in ``rfmonoid.effective``.
"""
from .congruence import (
    Congruence,
    FiniteAction,
    action_from_congruence,
    congruence_from_action,
    enumerate_congruences,
    is_congruence,
    kernel_of_action,
    largest_contained,
    principal_congruence,
    q_fingerprint_partition,
    q_set,
    rf_compatible_check,
    verify_congruence,
)
from .constructions import (
    ReesSpec,
    cor9_matrix,
    golubov_profile,
    matrix_rank,
    mgn,
    mgn_quotient,
    rees_matrix,
)
from .green import GreenStructure, green_structure, maximal_subgroups
from .io import dump_monoid, export_eggbox_dot, load_monoid_file, parse_monoid, parse_rees
from .monoid import (
    FiniteMonoid,
    FiniteSemigroup,
    Homomorphism,
    adjoin,
    are_isomorphic,
    build_monoid,
    build_semigroup,
    check_homomorphism,
    direct_product,
    opposite,
    quotient_by,
    rees_quotient,
    regularity_report,
)
from .partition import Partition, Side
from .schutzen import PermGroup, SchutzGroup, normal_subgroups, schutzenberger_group, stabilizer
from .separation import l_preimage_congruence, right_letter_congruence, separate

__all__ = [name for name in dir() if not name.startswith("_")]
