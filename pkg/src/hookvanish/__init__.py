"""Exact combinatorics of hook Schur functors and their vanishing criteria."""

from .audit import AuditParams, AuditReport, e1_terms, enumerate_B, flag_geometry, full_audit, induction_scalars, ns_table
from .errors import HookVanishError
from .partitions import Dominance, HookIndex, Partition, conjugate, delta, dominates, hook_partition, make_partition, staircase_partition
from .schur import SchurVector, branch_direct_sum, dimension, lemma24_spot_check, lr_product, one_dim_multiplicity, oracle_product_monomial, tensor_power
from .vanishing import VanishingQuery, VanishingReport, evaluate, thm21_threshold, thm22_conditions, thm22_threshold

__all__ = [
    "AuditParams", "AuditReport", "Dominance", "HookIndex", "HookVanishError", "Partition", "SchurVector",
    "VanishingQuery", "VanishingReport", "branch_direct_sum", "conjugate", "delta", "dimension", "dominates",
    "e1_terms", "enumerate_B", "evaluate", "flag_geometry", "full_audit", "hook_partition", "induction_scalars",
    "lemma24_spot_check", "lr_product", "make_partition", "ns_table", "one_dim_multiplicity",
    "oracle_product_monomial", "staircase_partition", "tensor_power", "thm21_threshold", "thm22_conditions",
    "thm22_threshold",
]
