"""Ground sets, set partitions, refinement order, and partitions of index grids.

Ground elements are either positive integers (the subscript of a plain
variable) or (row, col) pairs naming a position on an index grid.  The total
order is the natural one: integers by value, pairs lexicographically.  The two
kinds are never mixed inside one ground set.

Everything here is an immutable value.  Partitions are kept in a canonical
form (block elements ascending, blocks sorted by their minimum element) so
that equality and hashing are structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterable, Iterator

from .errors import DomainError

Element = int | tuple[int, int]


def element_str(e: Element) -> str:
    """Render an element compactly: 3 -> "3", (1,2) -> "1.2"."""
    if isinstance(e, tuple):
        return f"{e[0]}.{e[1]}"
    return str(e)


def element_to_json(e: Element):
    return [e[0], e[1]] if isinstance(e, tuple) else e


def element_from_json(obj) -> Element:
    if isinstance(obj, bool):
        raise DomainError(f"not a ground element: {obj!r}")
    if isinstance(obj, int):
        if obj < 1:
            raise DomainError(f"element ids must be positive, got {obj}")
        return obj
    if (
        isinstance(obj, (list, tuple))
        and len(obj) == 2
        and all(isinstance(v, int) and not isinstance(v, bool) and v >= 1 for v in obj)
    ):
        return (obj[0], obj[1])
    raise DomainError(f"not a ground element: {obj!r}")


def _check_element(e) -> None:
    if isinstance(e, bool):
        raise DomainError(f"not a ground element: {e!r}")
    if isinstance(e, int):
        if e < 1:
            raise DomainError(f"element ids must be positive, got {e}")
        return
    if (
        isinstance(e, tuple)
        and len(e) == 2
        and all(isinstance(v, int) and not isinstance(v, bool) and v >= 1 for v in e)
    ):
        return
    raise DomainError(f"not a ground element: {e!r}")


def canonical_ground(ground: Iterable[Element]) -> tuple[Element, ...]:
    """Sort a ground set; reject empty sets, duplicates, and mixed kinds."""
    elems = list(ground)
    for e in elems:
        _check_element(e)
    if not elems:
        raise DomainError("ground set is empty")
    try:
        elems.sort()
    except TypeError:
        raise DomainError("ground set mixes plain and grid elements") from None
    for a, b in zip(elems, elems[1:]):
        if a == b:
            raise DomainError(f"duplicate ground element {a!r}")
    return tuple(elems)


@dataclass(frozen=True)
class Block:
    """A nonempty set of ground elements, stored strictly increasing."""

    elements: tuple[Element, ...]

    def __init__(self, elements: Iterable[Element]):
        object.__setattr__(self, "elements", canonical_ground(elements))

    @property
    def least(self) -> Element:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e) -> bool:
        return e in self.elements

    def pretty(self) -> str:
        return "{" + ",".join(element_str(e) for e in self.elements) + "}"

    def to_json(self):
        return [element_to_json(e) for e in self.elements]


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering a ground set, sorted by minimum."""

    blocks: tuple[Block, ...]

    def __init__(self, blocks: Iterable[Block]):
        try:
            blks = tuple(sorted(blocks, key=lambda b: b.elements))
        except TypeError:
            raise DomainError("partition mixes plain and grid elements") from None
        if not blks:
            raise DomainError("a partition needs at least one block")
        seen: set[Element] = set()
        for b in blks:
            for e in b:
                if e in seen:
                    raise DomainError(f"blocks overlap at element {e!r}")
                seen.add(e)
        object.__setattr__(self, "blocks", blks)

    @classmethod
    def of(cls, blocks: Iterable[Iterable[Element]]) -> "Partition":
        return cls(Block(b) for b in blocks)

    @property
    def ground(self) -> tuple[Element, ...]:
        return tuple(sorted(e for b in self.blocks for e in b))

    def block_containing(self, e: Element) -> Block:
        for b in self.blocks:
            if e in b:
                return b
        raise DomainError(f"element {e!r} not in partition")

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def pretty(self) -> str:
        return " ".join(b.pretty() for b in self.blocks)

    def to_json(self):
        return [b.to_json() for b in self.blocks]

    @classmethod
    def from_json(cls, obj) -> "Partition":
        if not isinstance(obj, list) or not obj:
            raise DomainError("a partition serializes as a nonempty array of arrays")
        blocks = []
        for raw in obj:
            if not isinstance(raw, list):
                raise DomainError("a partition serializes as a nonempty array of arrays")
            blocks.append(Block(element_from_json(e) for e in raw))
        return cls(blocks)


@dataclass(frozen=True)
class GridShape:
    """Row sizes (j_1, ..., j_n) of an index grid {(i, j) : i in [n], j in [j_i]}."""

    row_sizes: tuple[int, ...]

    def __init__(self, row_sizes: Iterable[int]):
        sizes = tuple(int(s) for s in row_sizes)
        if not sizes:
            raise DomainError("a grid needs at least one row")
        if any(s < 1 for s in sizes):
            raise DomainError(f"row sizes must be positive, got {sizes}")
        object.__setattr__(self, "row_sizes", sizes)

    @property
    def row_count(self) -> int:
        return len(self.row_sizes)

    def row(self, i: int) -> tuple[tuple[int, int], ...]:
        if not 1 <= i <= self.row_count:
            raise DomainError(f"row {i} outside shape {self.row_sizes}")
        return tuple((i, j) for j in range(1, self.row_sizes[i - 1] + 1))

    def elements(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for i in range(1, self.row_count + 1) for e in self.row(i))

    def size(self) -> int:
        return sum(self.row_sizes)


def enumerate_partitions(ground: Iterable[Element]) -> Iterator[Partition]:
    """Every partition of the ground set exactly once, in canonical form.

    Generation walks restricted-growth strings in lexicographic order, so the
    single-block partition comes first and the all-singletons partition last.
    The count is the Bell number of the ground size.
    """
    elems = canonical_ground(ground)
    n = len(elems)
    code = [0] * n

    def emit() -> Partition:
        width = max(code) + 1
        groups: list[list[Element]] = [[] for _ in range(width)]
        for e, c in zip(elems, code):
            groups[c].append(e)
        return Partition(Block(g) for g in groups)

    def rec(i: int, top: int) -> Iterator[Partition]:
        if i == n:
            yield emit()
            return
        for c in range(top + 2):
            code[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(1, 0)


def bell_number(n: int) -> int:
    """Number of partitions of an n-set, by the Bell-triangle recurrence."""
    if n < 0:
        raise DomainError("bell_number needs n >= 0")
    if n == 0:
        return 1
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[-1]


def refines(pi: Partition, tau: Partition) -> bool:
    """True iff every block of pi is contained in some block of tau."""
    if pi.ground != tau.ground:
        raise DomainError("refinement compares partitions of the same ground set")
    owner: dict[Element, int] = {}
    for i, b in enumerate(tau.blocks):
        for e in b:
            owner[e] = i
    for b in pi.blocks:
        it = iter(b)
        first = owner[next(it)]
        if any(owner[e] != first for e in it):
            return False
    return True


def enumerate_finer(tau: Partition) -> Iterator[Partition]:
    """All partitions pi with refines(pi, tau); count = prod Bell(|block|)."""
    per_block = [list(enumerate_partitions(b.elements)) for b in tau.blocks]
    for combo in _cartesian(*per_block):
        yield Partition(b for part in combo for b in part.blocks)


def induced_partition(tau: Partition, shape: GridShape) -> Partition:
    """Expand a partition of the row indices [n] to the full grid.

    Each block beta of tau becomes the block of all grid elements whose row
    lies in beta.
    """
    rows = tuple(range(1, shape.row_count + 1))
    if tau.ground != rows:
        raise DomainError(
            f"partition covers {tau.ground}, expected rows 1..{shape.row_count}"
        )
    return Partition(
        Block(e for i in b for e in shape.row(i)) for b in tau.blocks
    )


def _check_grid_cover(pi: Partition, shape: GridShape) -> None:
    if pi.ground != shape.elements():
        raise DomainError(f"partition does not cover the grid of shape {shape.row_sizes}")


def is_indecomposable_by_definition(pi: Partition, shape: GridShape) -> bool:
    """Definitional test: pi refines an induced partition tau* only for tau = {[n]}."""
    _check_grid_cover(pi, shape)
    rows = range(1, shape.row_count + 1)
    for tau in enumerate_partitions(rows):
        if len(tau) > 1 and refines(pi, induced_partition(tau, shape)):
            return False
    return True


def is_row_connected(pi: Partition, shape: GridShape) -> bool:
    """Connectivity test: rows i, i' are linked when a block of pi meets both;
    the partition is indecomposable iff the row graph is connected."""
    _check_grid_cover(pi, shape)
    n = shape.row_count
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in pi.blocks:
        rows = sorted({e[0] for e in b})
        for r in rows[1:]:
            parent[find(r)] = find(rows[0])
    return len({find(i) for i in range(1, n + 1)}) == 1


def is_indecomposable(pi: Partition, shape: GridShape) -> bool:
    """True iff pi refines no induced partition except the one-block one.

    Uses the definitional quantifier at desk sizes and row-graph connectivity
    beyond; the two agree (checked exhaustively in the test suite before the
    fast path is trusted).
    """
    _check_grid_cover(pi, shape)
    if shape.size() <= 5:
        return is_indecomposable_by_definition(pi, shape)
    return is_row_connected(pi, shape)
