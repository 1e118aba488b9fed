"""Cyclically arranged partitions and the nested cycle objects built on them.

Three families live here, each an immutable value with a canonical stored
form so that equality is equality of the underlying cyclic structure:

* CyclicPartition - a partition whose blocks sit on an oriented cycle; the
  block containing the global minimum element is stored first.  A partition
  with k blocks yields (k-1)! distinct arrangements.
* NestedObject - a set of cycles of pairwise-disjoint "inner" blocks; the
  union of each cycle's blocks is an "outer" block, and the outer blocks form
  a partition.  Each cycle is stored rotated to its minimum inner block and
  cycles are sorted by that minimum.
* GObject - an oriented cycle of "outer" slots, each slot a NestedObject on
  its own elements (so three nesting levels: outer blocks, middle cycles,
  inner blocks).

Sign functions are computed on demand, never cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product as _cartesian
from math import comb, factorial
from typing import Iterable, Iterator

from .errors import DomainError
from .partitions import (
    Block,
    Element,
    GridShape,
    Partition,
    enumerate_finer,
    enumerate_partitions,
    is_indecomposable,
)

Cycle = tuple[Block, ...]


def _rotate_to(seq: tuple, idx: int) -> tuple:
    return seq[idx:] + seq[:idx]


@dataclass(frozen=True)
class CyclicPartition:
    """A partition with its blocks read cyclically.

    Two arrangements are equal iff one is a rotation of the other; the stored
    representative starts at the block containing the ground minimum.
    """

    blocks: tuple[Block, ...]

    def __init__(self, blocks: Iterable[Block]):
        blks = tuple(blocks)
        if not blks:
            raise DomainError("a cyclic partition needs at least one block")
        Partition(blks)  # validates disjointness and kinds
        least = min(b.least for b in blks)
        anchor = next(i for i, b in enumerate(blks) if least in b)
        object.__setattr__(self, "blocks", _rotate_to(blks, anchor))

    @property
    def ground(self) -> tuple[Element, ...]:
        return tuple(sorted(e for b in self.blocks for e in b))

    @property
    def partition(self) -> Partition:
        return Partition(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def pretty(self) -> str:
        return "(" + " ".join(b.pretty() for b in self.blocks) + ")"

    def to_json(self):
        return [b.to_json() for b in self.blocks]


def cyclic_sign(sigma: CyclicPartition) -> int:
    """(-1)^(blocks - 1): +1 for an odd number of blocks, -1 for even."""
    return -1 if len(sigma.blocks) % 2 == 0 else 1


def enumerate_cyclic(ground: Iterable[Element]) -> Iterator[CyclicPartition]:
    """Every cyclic arrangement of every partition, (|tau|-1)! per partition."""
    for tau in enumerate_partitions(ground):
        first, *rest = tau.blocks
        for perm in permutations(rest):
            yield CyclicPartition((first, *perm))


@dataclass(frozen=True)
class NestedObject:
    """Cycles of inner blocks; the per-cycle unions are the outer partition."""

    cycles: tuple[Cycle, ...]

    def __init__(self, cycles: Iterable[Cycle]):
        canon: list[Cycle] = []
        for cyc in cycles:
            cyc = tuple(cyc)
            if not cyc:
                raise DomainError("a cycle needs at least one inner block")
            anchor = min(range(len(cyc)), key=lambda i: cyc[i].elements)
            canon.append(_rotate_to(cyc, anchor))
        if not canon:
            raise DomainError("a nested object needs at least one cycle")
        canon.sort(key=lambda c: c[0].elements)
        Partition(b for c in canon for b in c)  # inner blocks disjoint, one kind
        object.__setattr__(self, "cycles", tuple(canon))

    @property
    def inner_blocks(self) -> tuple[Block, ...]:
        """All inner blocks, ordered by their minimum element."""
        return tuple(sorted((b for c in self.cycles for b in c), key=lambda b: b.elements))

    @property
    def outer_partition(self) -> Partition:
        return Partition(Block(e for b in c for e in b) for c in self.cycles)

    @property
    def ground(self) -> tuple[Element, ...]:
        return tuple(sorted(e for c in self.cycles for b in c for e in b))

    def cycle_containing(self, block: Block) -> Cycle:
        for c in self.cycles:
            if block in c:
                return c
        raise DomainError(f"{block!r} is not an inner block of this object")

    def pretty(self) -> str:
        return "".join(
            "(" + " ".join(b.pretty() for b in c) + ")" for c in self.cycles
        )

    def to_json(self):
        return [[b.to_json() for b in c] for c in self.cycles]


def nested_sign(rho: NestedObject) -> int:
    """(-1)^(inner blocks - cycles)."""
    exponent = sum(len(c) for c in rho.cycles) - len(rho.cycles)
    return -1 if exponent % 2 else 1


def _cycles_of(block_elements: Iterable[Element]) -> list[Cycle]:
    return [sigma.blocks for sigma in enumerate_cyclic(block_elements)]


def enumerate_nested(ground: Iterable[Element]) -> Iterator[NestedObject]:
    """Every nested object: an outer partition plus a cyclic arrangement of an
    inner partition inside each outer block."""
    for tau in enumerate_partitions(ground):
        choices = [_cycles_of(b.elements) for b in tau.blocks]
        for combo in _cartesian(*choices):
            yield NestedObject(combo)


def enumerate_nested_finer(tau: Partition) -> Iterator[NestedObject]:
    """Nested objects whose outer partition refines tau."""
    for pi in enumerate_finer(tau):
        choices = [_cycles_of(b.elements) for b in pi.blocks]
        for combo in _cartesian(*choices):
            yield NestedObject(combo)


def enumerate_nested_indecomposable(shape: GridShape) -> Iterator[NestedObject]:
    """Nested objects over the grid whose outer partition is indecomposable."""
    for pi in enumerate_partitions(shape.elements()):
        if not is_indecomposable(pi, shape):
            continue
        choices = [_cycles_of(b.elements) for b in pi.blocks]
        for combo in _cartesian(*choices):
            yield NestedObject(combo)


@dataclass(frozen=True)
class GObject:
    """An oriented cycle of slots, each slot a NestedObject on its own elements.

    The slot unions are the outer blocks; each slot's cycles are the middle
    blocks and its blocks the inner blocks.  The slot containing the global
    minimum element is stored first.
    """

    slots: tuple[NestedObject, ...]

    def __init__(self, slots: Iterable[NestedObject]):
        sl = tuple(slots)
        if not sl:
            raise DomainError("a layered object needs at least one slot")
        Partition(Block(s.ground) for s in sl)  # outer blocks disjoint, one kind
        least = min(s.ground[0] for s in sl)
        anchor = next(i for i, s in enumerate(sl) if s.ground[0] == least)
        object.__setattr__(self, "slots", _rotate_to(sl, anchor))

    @property
    def outer_blocks(self) -> tuple[Block, ...]:
        """Outer blocks in cycle order."""
        return tuple(Block(s.ground) for s in self.slots)

    @property
    def outer_cycle(self) -> CyclicPartition:
        return CyclicPartition(self.outer_blocks)

    @property
    def ground(self) -> tuple[Element, ...]:
        return tuple(sorted(e for s in self.slots for e in s.ground))

    @property
    def inner_blocks(self) -> tuple[Block, ...]:
        return tuple(
            sorted((b for s in self.slots for b in s.inner_blocks), key=lambda b: b.elements)
        )

    def pretty(self) -> str:
        return "".join("[" + s.pretty() + "]" for s in self.slots)

    def to_json(self):
        return [s.to_json() for s in self.slots]


def g_sign(rho: GObject) -> int:
    """Outer-cycle sign times the product of the slots' nested signs."""
    exponent = len(rho.slots) - 1
    for s in rho.slots:
        exponent += sum(len(c) for c in s.cycles) - len(s.cycles)
    return -1 if exponent % 2 else 1


def enumerate_g(ground: Iterable[Element]) -> Iterator[GObject]:
    """Every layered object: a cyclic outer arrangement with a nested object
    chosen inside each outer block."""
    for sigma in enumerate_cyclic(ground):
        choices = [list(enumerate_nested(b.elements)) for b in sigma.blocks]
        for combo in _cartesian(*choices):
            yield GObject(combo)


# Counting formulas, independent of the direct generators above.

def cyclic_count(n: int) -> int:
    """|C| of an n-set: sum over partitions of (blocks - 1)!."""
    if n < 1:
        raise DomainError("cyclic_count needs n >= 1")
    # Stirling numbers of the second kind, built row by row.
    row = [1]  # S(0, 0)
    for _ in range(n):
        row = [0] + [
            k * (row[k] if k < len(row) else 0) + row[k - 1]
            for k in range(1, len(row) + 1)
        ]
    return sum(row[k] * factorial(k - 1) for k in range(1, n + 1))


def nested_count(n: int) -> int:
    """|D| of an n-set: the block containing the least element has size k."""
    if n < 1:
        raise DomainError("nested_count needs n >= 1")
    d = [1] + [0] * n
    for m in range(1, n + 1):
        d[m] = sum(
            comb(m - 1, k - 1) * cyclic_count(k) * d[m - k] for k in range(1, m + 1)
        )
    return d[n]


def g_count(n: int) -> int:
    """|G| of an n-set: anchor block of the outer cycle, then an ordered
    sequence of further outer blocks, each slot weighted by |D|."""
    if n < 1:
        raise DomainError("g_count needs n >= 1")
    dcount = [1] + [nested_count(m) for m in range(1, n + 1)]
    seq = [1] + [0] * n
    for m in range(1, n + 1):
        seq[m] = sum(comb(m, k) * dcount[k] * seq[m - k] for k in range(1, m + 1))
    return sum(
        comb(n - 1, k - 1) * dcount[k] * seq[n - k] for k in range(1, n + 1)
    )
