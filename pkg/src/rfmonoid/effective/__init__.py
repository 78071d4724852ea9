from .ab import ab_l_relation, ab_monoid, l_related, left_divides, t_n, theta_n
from .base import (
    CompatReport,
    DecidableRelation,
    EffectiveHom,
    EffectiveMonoid,
    associativity_check,
    e_mul,
    verify_compat,
    window,
)
from .cm import (
    case2_without_shift,
    cm_monoid,
    escape_m,
    green_class,
    paper_congruence,
    tau,
    tau_array,
    tau_lemma_check,
)
from .derivations import DerivationReport, derivation_check
from .ex13 import ex13_monoid

__all__ = [
    "CompatReport",
    "DecidableRelation",
    "DerivationReport",
    "EffectiveHom",
    "EffectiveMonoid",
    "ab_l_relation",
    "ab_monoid",
    "associativity_check",
    "case2_without_shift",
    "cm_monoid",
    "derivation_check",
    "e_mul",
    "escape_m",
    "ex13_monoid",
    "green_class",
    "l_related",
    "left_divides",
    "paper_congruence",
    "t_n",
    "tau",
    "tau_array",
    "tau_lemma_check",
    "theta_n",
    "verify_compat",
    "window",
]
