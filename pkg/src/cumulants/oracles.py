"""Expectation backends behind one duck-typed interface.

An oracle maps a Block of ground elements to a value: an exact Fraction for
distribution-backed oracles, a MomentPolynomial for the formal ones.  Oracles
are immutable after construction; the distribution-backed ones memoize per
block, which is semantically invisible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Protocol, Sequence, Union

from .distributions import FiniteDistribution
from .errors import DomainError
from .partitions import Block, Element, GridShape
from .polynomials import MomentPolynomial

Value = Union[Fraction, MomentPolynomial]


class ExpectationOracle(Protocol):
    def expectation(self, block: Block) -> Value: ...


class SymbolicOracle:
    """Maps a block to its own moment symbol m{block}."""

    def expectation(self, block: Block) -> MomentPolynomial:
        return MomentPolynomial.symbol(block.elements)


def factoring_expectation(block: Block, full_set: Block) -> MomentPolynomial:
    """Moment of a block when every proper subset of full_set is independent:
    the full set keeps its joint symbol, any proper subset factors into
    first-order symbols."""
    if not set(block.elements) <= set(full_set.elements):
        raise DomainError(f"{block.pretty()} is not a subset of {full_set.pretty()}")
    if block == full_set:
        return MomentPolynomial.symbol(block.elements)
    out = MomentPolynomial.constant(1)
    for e in block:
        out = out * MomentPolynomial.symbol((e,))
    return out


class FactoringOracle:
    """Symbolic oracle encoding independence of every proper subset."""

    def __init__(self, full_set: Block):
        self.full_set = full_set

    def expectation(self, block: Block) -> MomentPolynomial:
        return factoring_expectation(block, self.full_set)


class SelectionOracle:
    """Distribution-backed oracle: ground elements map to column names.

    ``names`` is either a mapping element -> column, or a sequence of columns
    assigning elements 1..k positionally; repeats let several elements share
    one column (e.g. a variance query).
    """

    def __init__(
        self,
        dist: FiniteDistribution,
        names: Mapping[Element, str] | Sequence[str],
    ):
        if isinstance(names, Mapping):
            mapping = dict(names)
        else:
            mapping = {i + 1: n for i, n in enumerate(names)}
        if not mapping:
            raise DomainError("a selection needs at least one element")
        for name in mapping.values():
            dist.column(name)  # unknown name raises
        self.dist = dist
        self.names = mapping
        self._cache: dict[tuple, Fraction] = {}

    def column_name(self, e: Element) -> str:
        try:
            return self.names[e]
        except KeyError:
            raise DomainError(f"element {e!r} is not in the selection") from None

    def expectation(self, block: Block) -> Fraction:
        key = block.elements
        if key not in self._cache:
            self._cache[key] = self.dist.expectation(
                [self.column_name(e) for e in block]
            )
        return self._cache[key]


class RowProductOracle:
    """Symbolic oracle on row indices: a block of rows maps to the moment
    symbol of all grid elements in those rows (the rows' full products)."""

    def __init__(self, shape: GridShape):
        self.shape = shape

    def expectation(self, block: Block) -> MomentPolynomial:
        for i in block:
            if not (isinstance(i, int) and 1 <= i <= self.shape.row_count):
                raise DomainError(f"row index {i!r} outside shape {self.shape.row_sizes}")
        return MomentPolynomial.symbol(
            tuple(e for i in block for e in self.shape.row(i))
        )


def weight_V(arrangement, oracle: ExpectationOracle) -> Value:
    """Product of per-block expectations; ignores any cyclic arrangement."""
    blocks = arrangement.blocks
    out = oracle.expectation(blocks[0])
    for b in blocks[1:]:
        out = out * oracle.expectation(b)
    return out
