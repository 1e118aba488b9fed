"""Joint cumulants and the seven identities as executable exact checks.

The joint cumulant of a ground set S under an expectation oracle E is the
alternating sum over set partitions

    kappa(S) = sum over tau of (-1)^(|tau|-1) (|tau|-1)! prod_B E(prod B),

equivalently a signed sum over cyclically arranged partitions (each partition
counted once per arrangement, which absorbs the factorial).  Both routes are
implemented and must agree for every input.

Each identity verifier returns a VerificationReport holding both sides as
exact values (Fraction or MomentPolynomial); nothing is ever compared with a
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .cyclic import cyclic_sign, enumerate_cyclic
from .distributions import ConditionalOracle, FiniteDistribution, product_distribution
from .errors import DomainError
from .oracles import (
    ExpectationOracle,
    FactoringOracle,
    RowProductOracle,
    SelectionOracle,
    SymbolicOracle,
    Value,
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
    is_indecomposable,
)
from .polynomials import MomentPolynomial

IDENTITY_NAMES = {
    1: "coefficient-sum",
    2: "near-independence",
    3: "independent-split",
    4: "moment-expansion",
    5: "refinement",
    6: "row-products",
    7: "total-cumulance",
}


def render_value(value) -> str:
    if isinstance(value, MomentPolynomial):
        return value.render()
    return str(value)


def kappa_over(ground: Iterable[Element], oracle: ExpectationOracle) -> Value:
    """The defining alternating sum over partitions of the ground set."""
    total = None
    for tau in enumerate_partitions(ground):
        k = len(tau.blocks)
        coeff = (-1) ** (k - 1) * factorial(k - 1)
        term = coeff * weight_V(tau, oracle)
        total = term if total is None else total + term
    return total


def kappa_via_cyclic_over(ground: Iterable[Element], oracle: ExpectationOracle) -> Value:
    """The same cumulant as a signed sum over cyclic arrangements."""
    total = None
    for sigma in enumerate_cyclic(ground):
        term = cyclic_sign(sigma) * weight_V(sigma, oracle)
        total = term if total is None else total + term
    return total


def selection_oracle(dist: FiniteDistribution, names: Sequence[str]) -> SelectionOracle:
    return SelectionOracle(dist, tuple(names))


def _selection_ground(names: Sequence[str]) -> tuple[int, ...]:
    if not names:
        raise DomainError("a selection needs at least one variable")
    return tuple(range(1, len(names) + 1))


def kappa(dist: FiniteDistribution, names: Sequence[str]) -> Fraction:
    """kappa of the named columns (repeats allowed), exact."""
    return kappa_over(_selection_ground(names), selection_oracle(dist, names))


def kappa_via_cyclic(dist: FiniteDistribution, names: Sequence[str]) -> Fraction:
    return kappa_via_cyclic_over(_selection_ground(names), selection_oracle(dist, names))


def kappa_of_partition(tau: Partition, oracle: ExpectationOracle) -> Value:
    """Product over the blocks of tau of each block's own cumulant."""
    out = None
    for b in tau.blocks:
        k = kappa_over(b.elements, oracle)
        out = k if out is None else out * k
    return out


def conditional_kappa(
    cond: ConditionalOracle, names: Sequence[str], y
) -> Fraction:
    """The cumulant of the named columns under the distribution given Y=y."""
    return kappa(cond.given(y), names)


@dataclass
class VerificationReport:
    identity: str
    params: dict
    left: Value
    right: Value
    objects_visited: int

    @property
    def equal(self) -> bool:
        return self.left == self.right

    def to_json(self):
        return {
            "identity": self.identity,
            "params": self.params,
            "left": render_value(self.left),
            "right": render_value(self.right),
            "equal": self.equal,
            "objects_visited": self.objects_visited,
        }


def verify_coefficient_sum(n: int) -> VerificationReport:
    """Identity 1: the signed count of cyclic arrangements vanishes for n >= 2."""
    if n < 2:
        raise DomainError("the coefficient-sum identity needs n >= 2")
    total = 0
    count = 0
    for sigma in enumerate_cyclic(range(1, n + 1)):
        total += cyclic_sign(sigma)
        count += 1
    return VerificationReport(
        IDENTITY_NAMES[1], {"n": n}, Fraction(total), Fraction(0), count
    )


def verify_near_independence(n: int) -> VerificationReport:
    """Identity 2: with every proper subset independent,
    kappa = m{S} - prod of first-order moments."""
    if n < 2:
        raise DomainError("the near-independence identity needs n >= 2")
    ground = tuple(range(1, n + 1))
    left = kappa_over(ground, FactoringOracle(Block(ground)))
    right = MomentPolynomial.symbol(ground)
    prod = MomentPolynomial.constant(1)
    for i in ground:
        prod = prod * MomentPolynomial.symbol((i,))
    right = right - prod
    return VerificationReport(
        IDENTITY_NAMES[2], {"n": n}, left, right, bell_number(n)
    )


def verify_independent_split(
    dist_m: FiniteDistribution,
    dist_n: FiniteDistribution,
    names: Sequence[str] | None = None,
) -> VerificationReport:
    """Identity 3: kappa vanishes when the selection spans two independently
    coupled variable groups (and touches both)."""
    prod = product_distribution(dist_m, dist_n)
    if names is None:
        names = prod.variables
    names = tuple(names)
    touched_m = any(nm in dist_m.variables for nm in names)
    touched_n = any(nm in dist_n.variables for nm in names)
    if not (touched_m and touched_n):
        raise DomainError("the selection must draw from both independent groups")
    left = kappa(prod, names)
    return VerificationReport(
        IDENTITY_NAMES[3],
        {"vars": list(names)},
        left,
        Fraction(0),
        bell_number(len(names)),
    )


def verify_moment_expansion(n: int) -> VerificationReport:
    """Identity 4: m{S} equals the sum over partitions of block-cumulant products."""
    if n < 1:
        raise DomainError("the moment-expansion identity needs n >= 1")
    ground = tuple(range(1, n + 1))
    sym = SymbolicOracle()
    total = None
    count = 0
    for tau in enumerate_partitions(ground):
        term = kappa_of_partition(tau, sym)
        total = term if total is None else total + term
        count += 1
    return VerificationReport(
        IDENTITY_NAMES[4],
        {"n": n},
        total,
        MomentPolynomial.symbol(ground),
        count,
    )


def verify_refinement(tau: Partition) -> VerificationReport:
    """Identity 5: the product of tau's block moments equals the sum of
    cumulant products over all partitions finer than tau."""
    sym = SymbolicOracle()
    total = None
    count = 0
    for pi in enumerate_finer(tau):
        term = kappa_of_partition(pi, sym)
        total = term if total is None else total + term
        count += 1
    target = MomentPolynomial.constant(1)
    for b in tau.blocks:
        target = target * MomentPolynomial.symbol(b.elements)
    return VerificationReport(
        IDENTITY_NAMES[5],
        {"tau": tau.to_json()},
        total,
        target,
        count,
    )


def verify_row_products(shape: GridShape) -> VerificationReport:
    """Identity 6: the cumulant of the row products equals the sum of
    cumulant products over indecomposable grid partitions."""
    sym = SymbolicOracle()
    total = None
    count = 0
    for pi in enumerate_partitions(shape.elements()):
        if not is_indecomposable(pi, shape):
            continue
        term = kappa_of_partition(pi, sym)
        total = term if total is None else total + term
        count += 1
    rows = tuple(range(1, shape.row_count + 1))
    right = kappa_over(rows, RowProductOracle(shape))
    return VerificationReport(
        IDENTITY_NAMES[6],
        {"shape": list(shape.row_sizes)},
        total,
        right,
        count,
    )


def total_cumulance_sum(cond: ConditionalOracle, names: Sequence[str]) -> Fraction:
    """The partition-indexed sum of outer cumulants of conditional cumulants.

    For each partition of the selection, the blocks' conditional cumulants are
    random variables through Y; they are materialized as columns of a finite
    distribution over Y's support, and the outer cumulant is taken there.
    """
    names = tuple(names)
    ground = _selection_ground(names)
    support = cond.y_support()
    total = Fraction(0)
    for tau in enumerate_partitions(ground):
        cols = []
        for b in tau.blocks:
            block_names = [names[e - 1] for e in b]
            cols.append(
                tuple(conditional_kappa(cond, block_names, y) for y, _ in support)
            )
        outer_names = tuple(f"k{i + 1}" for i in range(len(cols)))
        outer = FiniteDistribution(
            outer_names,
            (
                (tuple(col[a] for col in cols), prob)
                for a, (_, prob) in enumerate(support)
            ),
        )
        total += kappa(outer, outer_names)
    return total


def verify_total_cumulance(
    cond: ConditionalOracle, names: Sequence[str]
) -> VerificationReport:
    """Identity 7: kappa(S) equals the sum over partitions of the outer
    cumulant of the blocks' conditional cumulants (tower generalization)."""
    names = tuple(names)
    for nm in names:
        if nm == cond.y_name:
            raise DomainError("the selection must not include the conditioner")
    left = kappa(cond.dist, names)
    right = total_cumulance_sum(cond, names)
    return VerificationReport(
        IDENTITY_NAMES[7],
        {"vars": list(names), "y": cond.y_name},
        left,
        right,
        bell_number(len(names)),
    )
