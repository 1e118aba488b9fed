"""Exact joint-cumulant combinatorics.

Set partitions and their refinement order, cyclically arranged partitions,
nested cycle objects, exact finite distributions and formal moment
polynomials, joint cumulants, and machine-checked proofs of the classical
cumulant identities via sign-reversing involutions.
"""

from .cyclic import (
    CyclicPartition,
    GObject,
    NestedObject,
    cyclic_count,
    cyclic_sign,
    enumerate_cyclic,
    enumerate_g,
    enumerate_nested,
    enumerate_nested_finer,
    enumerate_nested_indecomposable,
    g_count,
    g_sign,
    nested_count,
    nested_sign,
)
from .die import (
    DieInstance,
    DieReport,
    blockwise_merge_split,
    build_instance,
    check_die,
    crossing_merge_split,
    cycle_merge_split,
    grid_split_pair,
    merge_or_split,
    middle_merge_split,
    min_merge_split,
    rowwise_merge_split,
)
from .distributions import (
    ConditionalOracle,
    FiniteDistribution,
    parse_rational,
    product_distribution,
)
from .engine import (
    IDENTITY_NAMES,
    VerificationReport,
    conditional_kappa,
    kappa,
    kappa_of_partition,
    kappa_over,
    kappa_via_cyclic,
    kappa_via_cyclic_over,
    render_value,
    total_cumulance_sum,
    verify_coefficient_sum,
    verify_independent_split,
    verify_moment_expansion,
    verify_near_independence,
    verify_refinement,
    verify_row_products,
    verify_total_cumulance,
)
from .errors import DistributionParseError, DomainError
from .oracles import (
    FactoringOracle,
    RowProductOracle,
    SelectionOracle,
    SymbolicOracle,
    factoring_expectation,
    weight_V,
)
from .partitions import (
    Block,
    Element,
    GridShape,
    Partition,
    bell_number,
    enumerate_finer,
    enumerate_partitions,
    induced_partition,
    is_indecomposable,
    is_indecomposable_by_definition,
    is_row_connected,
    refines,
)
from .polynomials import MomentPolynomial

__version__ = "0.1.0"
