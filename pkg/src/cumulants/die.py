"""Sign-reversing, weight-preserving involutions and a generic checker.

Every identity in the catalog can be proved by pairing off opposite-signed,
equal-weight combinatorial objects, leaving only a small set of exceptions.
This module implements each pairing map as an executable function and a
checker that verifies, object by object, that

    f(f(x)) = x,    sign(f(x)) = -sign(x),    weight(f(x)) = weight(x)

on the non-exceptions, and that the signed-weight sum over all objects equals
the sum over the exceptions alone.

Cycle surgery convention (shared by the nested-object involutions): writing
the cycle containing block a as (a A) and, when distinct, the one containing
b as (b B), a merge replaces both with (a A b B); a split of a common cycle
(a C1 b C2) cuts immediately before b, giving (a C1)(b C2).  The maps below
only ever choose a and b from the inner blocks, which the surgery never
changes, so the same pair is selected again on the image and the map is an
involution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .cyclic import (
    CyclicPartition,
    GObject,
    NestedObject,
    cyclic_sign,
    enumerate_cyclic,
    enumerate_g,
    enumerate_nested,
    enumerate_nested_finer,
    enumerate_nested_indecomposable,
    g_sign,
    nested_sign,
)
from .distributions import ConditionalOracle, FiniteDistribution, product_distribution
from .engine import (
    IDENTITY_NAMES,
    kappa_via_cyclic_over,
    render_value,
)
from .errors import DomainError
from .oracles import (
    ExpectationOracle,
    FactoringOracle,
    SelectionOracle,
    SymbolicOracle,
    Value,
    weight_V,
)
from .partitions import Block, Element, GridShape, Partition, refines


# ---------------------------------------------------------------------------
# Involutions on cyclically arranged partitions


def min_merge_split(sigma: CyclicPartition) -> CyclicPartition:
    """Toggle whether the minimum element sits alone: merge its singleton into
    the next block of the cycle, or pull it out in front of its own block.

    Total (no exceptions) for ground sets of size >= 2; changes the block
    count by one either way.
    """
    if len(sigma.ground) < 2:
        raise DomainError("the map needs a ground set of size >= 2")
    first = sigma.blocks[0]  # canonical rotation: contains the minimum
    if len(first) == 1:
        merged = Block(first.elements + sigma.blocks[1].elements)
        return CyclicPartition((merged,) + sigma.blocks[2:])
    least = first.least
    rest = Block(e for e in first if e != least)
    return CyclicPartition((Block([least]), rest) + sigma.blocks[1:])


def crossing_merge_split(
    sigma: CyclicPartition, left: Iterable[Element], right: Iterable[Element]
) -> CyclicPartition:
    """The pairing map for a ground set split into two groups.

    Walk the cycle from the block holding the left group's minimum and stop at
    the first block B meeting the right group.  If B also holds left-group
    elements C, pull C out in front of the remainder; otherwise the previous
    block is pure left-group and is merged into B.
    """
    left = frozenset(left)
    right = frozenset(right)
    ground = set(sigma.ground)
    if not left or not right or (left | right) != ground or left & right:
        raise DomainError("the two groups must partition the ground set")
    m1 = min(left)
    blocks = list(sigma.blocks)
    start = next(i for i, b in enumerate(blocks) if m1 in b)
    blocks = blocks[start:] + blocks[:start]
    idx = next(i for i, b in enumerate(blocks) if any(e in right for e in b))
    b = blocks[idx]
    c = [e for e in b if e in left]
    d = [e for e in b if e in right]
    if c:
        new = blocks[:idx] + [Block(c), Block(d)] + blocks[idx + 1 :]
    else:
        # idx >= 1: the walk started at a block holding m1, a left element.
        prev = blocks[idx - 1]
        new = blocks[: idx - 1] + [Block(prev.elements + b.elements)] + blocks[idx + 1 :]
    return CyclicPartition(new)


# ---------------------------------------------------------------------------
# Cycle surgery on nested objects


def merge_or_split(rho: NestedObject, a: Block, b: Block) -> NestedObject:
    """Merge the cycles holding a and b, or split their common cycle before b."""
    if a == b:
        raise DomainError("the two inner blocks must differ")
    ca = rho.cycle_containing(a)
    cb = rho.cycle_containing(b)
    others = [c for c in rho.cycles if c is not ca and c is not cb]
    rot_a = ca[ca.index(a) :] + ca[: ca.index(a)]
    if ca is cb:
        cut = rot_a.index(b)
        return NestedObject(others + [rot_a[:cut], rot_a[cut:]])
    rot_b = cb[cb.index(b) :] + cb[: cb.index(b)]
    return NestedObject(others + [rot_a + rot_b])


def cycle_merge_split(rho: NestedObject) -> Optional[NestedObject]:
    """Pairing map behind the moment expansion: act on the two inner blocks of
    smallest minimum.  Undefined (None) when only one inner block exists."""
    inner = rho.inner_blocks
    if len(inner) < 2:
        return None
    return merge_or_split(rho, inner[0], inner[1])


def blockwise_merge_split(rho: NestedObject, tau: Partition) -> Optional[NestedObject]:
    """Pairing map behind the refinement identity: within the first block of
    tau holding two or more inner blocks, act on the smallest two.  Undefined
    when the inner blocks are exactly the blocks of tau."""
    if not refines(rho.outer_partition, tau):
        raise DomainError("the outer partition must refine tau")
    inner = rho.inner_blocks
    for alpha in tau.blocks:
        members = [g for g in inner if set(g.elements) <= set(alpha.elements)]
        if len(members) >= 2:
            return merge_or_split(rho, members[0], members[1])
    return None


def grid_split_pair(rho: NestedObject, shape: GridShape) -> Optional[tuple[Block, Block]]:
    """The deterministic split pair: smallest row i with two same-row elements
    in different inner blocks, then smallest such column j, then smallest
    differing column k.  None when every row sits inside one inner block."""
    if rho.ground != shape.elements():
        raise DomainError(f"object does not cover the grid of shape {shape.row_sizes}")
    owner: dict[Element, Block] = {}
    for blk in rho.inner_blocks:
        for e in blk:
            owner[e] = blk
    for i in range(1, shape.row_count + 1):
        row = shape.row(i)
        for j, ej in enumerate(row):
            bj = owner[ej]
            for ek in row[j + 1 :]:
                if owner[ek] != bj:
                    return bj, owner[ek]
    return None


def rowwise_merge_split(rho: NestedObject, shape: GridShape) -> Optional[NestedObject]:
    """Pairing map behind the row-products identity: merge/split on the
    deterministic split pair.  Preserves indecomposability of the outer
    partition; undefined when no split pair exists."""
    pair = grid_split_pair(rho, shape)
    if pair is None:
        return None
    return merge_or_split(rho, *pair)


def middle_merge_split(rho: GObject) -> Optional[GObject]:
    """Pairing map behind the total-cumulance identity: in the outer block of
    smallest minimum holding two or more inner blocks, merge or split that
    slot's middle cycles on its two smallest inner blocks.  Undefined when
    every outer block holds exactly one inner block."""
    order = sorted(range(len(rho.slots)), key=lambda i: rho.slots[i].ground)
    for i in order:
        slot = rho.slots[i]
        inner = slot.inner_blocks
        if len(inner) >= 2:
            new_slot = merge_or_split(slot, inner[0], inner[1])
            slots = list(rho.slots)
            slots[i] = new_slot
            return GObject(slots)
    return None


# ---------------------------------------------------------------------------
# Generic checker


@dataclass
class DieInstance:
    """One identity wired for mechanical checking: the objects, their sign and
    weight functions, the pairing map (None on exceptions), and the exception
    predicate.  ``expected_exception_sum`` is the closed form the exceptions
    should total to, when the identity states one."""

    name: str
    params: dict
    objects: tuple
    sign: Callable[[object], int]
    weight: Callable[[object], Value]
    involution: Callable[[object], Optional[object]]
    is_exception: Callable[[object], bool]
    expected_exception_sum: Optional[Value] = None
    serialize: Callable[[object], object] = field(default=lambda obj: obj.to_json())


@dataclass
class DieReport:
    name: str
    params: dict
    objects: int
    exceptions: int
    involution_ok: bool
    sign_ok: bool
    weight_ok: bool
    residual: Value
    exception_sum: Value
    exception_sum_ok: bool
    first_failure: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return (
            self.involution_ok
            and self.sign_ok
            and self.weight_ok
            and self.residual == 0
            and self.exception_sum_ok
        )

    def to_json(self):
        return {
            "identity": self.name,
            "params": self.params,
            "objects": self.objects,
            "exceptions": self.exceptions,
            "involution_ok": self.involution_ok,
            "sign_ok": self.sign_ok,
            "weight_ok": self.weight_ok,
            "residual": render_value(self.residual),
            "exception_sum": render_value(self.exception_sum),
            "exception_sum_ok": self.exception_sum_ok,
            "passed": self.passed,
            "first_failure": self.first_failure,
        }


def check_die(instance: DieInstance) -> DieReport:
    """Verify the pairing laws pointwise and both sums exactly."""
    objects = instance.objects
    if not objects:
        raise DomainError("a DIE instance needs at least one object")
    object_set = set(objects)
    involution_ok = sign_ok = weight_ok = True
    first_failure: Optional[dict] = None
    total: Optional[Value] = None
    exception_total: Optional[Value] = None
    exception_count = 0

    def fail(kind: str, obj) -> None:
        nonlocal first_failure
        if first_failure is None:
            first_failure = {"reason": kind, "object": instance.serialize(obj)}

    for x in objects:
        s = instance.sign(x)
        w = instance.weight(x)
        term = s * w
        total = term if total is None else total + term
        if instance.is_exception(x):
            exception_count += 1
            exception_total = term if exception_total is None else exception_total + term
            continue
        y = instance.involution(x)
        if y is None or y not in object_set or instance.is_exception(y):
            involution_ok = False
            fail("involution-left-domain", x)
            continue
        if instance.involution(y) != x:
            involution_ok = False
            fail("not-involutive", x)
        if instance.sign(y) != -s:
            sign_ok = False
            fail("sign-not-reversed", x)
        if instance.weight(y) != w:
            weight_ok = False
            fail("weight-not-preserved", x)

    zero = total - total
    exception_sum = exception_total if exception_total is not None else zero
    residual = total - exception_sum
    expected = instance.expected_exception_sum
    exception_sum_ok = expected is None or exception_sum == expected
    return DieReport(
        name=instance.name,
        params=instance.params,
        objects=len(objects),
        exceptions=exception_count,
        involution_ok=involution_ok,
        sign_ok=sign_ok,
        weight_ok=weight_ok,
        residual=residual,
        exception_sum=exception_sum,
        exception_sum_ok=exception_sum_ok,
        first_failure=first_failure,
    )


# ---------------------------------------------------------------------------
# Wiring the catalog


def _never(_obj) -> bool:
    return False


def _inner_weight(oracle: ExpectationOracle):
    def weight(rho: NestedObject) -> Value:
        out = None
        for g in rho.inner_blocks:
            e = oracle.expectation(g)
            out = e if out is None else out * e
        return out

    return weight


def _layered_conditional_weight(cond: ConditionalOracle, names: tuple[str, ...]):
    support = cond.y_support()

    def weight(rho: GObject) -> Fraction:
        out = Fraction(1)
        for slot in rho.slots:
            acc = Fraction(0)
            for y, prob in support:
                term = prob
                for g in slot.inner_blocks:
                    term *= cond.conditional_expectation(
                        [names[e - 1] for e in g], y
                    )
                acc += term
            out *= acc
        return out

    return weight


def build_instance(
    identity: int,
    *,
    n: Optional[int] = None,
    tau: Optional[Partition] = None,
    shape: Optional[GridShape] = None,
    dist_m: Optional[FiniteDistribution] = None,
    dist_n: Optional[FiniteDistribution] = None,
    cond: Optional[ConditionalOracle] = None,
    names: Optional[tuple[str, ...]] = None,
) -> DieInstance:
    """Wire the objects, sign, weight, pairing map, and exceptions for one
    identity of the catalog (1..7)."""
    if identity == 1:
        if n is None or n < 2:
            raise DomainError("identity 1 needs n >= 2")
        ground = tuple(range(1, n + 1))
        return DieInstance(
            name=IDENTITY_NAMES[1],
            params={"n": n},
            objects=tuple(enumerate_cyclic(ground)),
            sign=cyclic_sign,
            weight=lambda _sigma: Fraction(1),
            involution=min_merge_split,
            is_exception=_never,
            expected_exception_sum=Fraction(0),
        )

    if identity == 2:
        if n is None or n < 2:
            raise DomainError("identity 2 needs n >= 2")
        ground = tuple(range(1, n + 1))
        full = Block(ground)
        oracle = FactoringOracle(full)
        whole = CyclicPartition((full,))
        split_pair = CyclicPartition((Block([1]), Block(range(2, n + 1))))
        exceptions = {whole, split_pair}
        expected = weight_V(whole, oracle) - weight_V(split_pair, oracle)
        return DieInstance(
            name=IDENTITY_NAMES[2],
            params={"n": n},
            objects=tuple(enumerate_cyclic(ground)),
            sign=cyclic_sign,
            weight=lambda sigma: weight_V(sigma, oracle),
            involution=min_merge_split,
            is_exception=lambda sigma: sigma in exceptions,
            expected_exception_sum=expected,
        )

    if identity == 3:
        if dist_m is None or dist_n is None:
            raise DomainError("identity 3 needs the two independent distributions")
        prod = product_distribution(dist_m, dist_n)
        if names is None:
            names = prod.variables
        names = tuple(names)
        left = frozenset(
            i + 1 for i, nm in enumerate(names) if nm in dist_m.variables
        )
        right = frozenset(
            i + 1 for i, nm in enumerate(names) if nm in dist_n.variables
        )
        if not left or not right:
            raise DomainError("the selection must draw from both independent groups")
        ground = tuple(range(1, len(names) + 1))
        oracle = SelectionOracle(prod, names)
        return DieInstance(
            name=IDENTITY_NAMES[3],
            params={"vars": list(names)},
            objects=tuple(enumerate_cyclic(ground)),
            sign=cyclic_sign,
            weight=lambda sigma: weight_V(sigma, oracle),
            involution=lambda sigma: crossing_merge_split(sigma, left, right),
            is_exception=_never,
            expected_exception_sum=Fraction(0),
        )

    if identity == 4:
        if n is None or n < 1:
            raise DomainError("identity 4 needs n >= 1")
        ground = tuple(range(1, n + 1))
        sym = SymbolicOracle()
        return DieInstance(
            name=IDENTITY_NAMES[4],
            params={"n": n},
            objects=tuple(enumerate_nested(ground)),
            sign=nested_sign,
            weight=_inner_weight(sym),
            involution=cycle_merge_split,
            is_exception=lambda rho: len(rho.inner_blocks) == 1,
            expected_exception_sum=sym.expectation(Block(ground)),
        )

    if identity == 5:
        if tau is None:
            raise DomainError("identity 5 needs the partition tau")
        sym = SymbolicOracle()
        expected = None
        for b in tau.blocks:
            e = sym.expectation(b)
            expected = e if expected is None else expected * e
        tau_blocks = tau.blocks
        return DieInstance(
            name=IDENTITY_NAMES[5],
            params={"tau": tau.to_json()},
            objects=tuple(enumerate_nested_finer(tau)),
            sign=nested_sign,
            weight=_inner_weight(sym),
            involution=lambda rho: blockwise_merge_split(rho, tau),
            is_exception=lambda rho: rho.inner_blocks == tau_blocks,
            expected_exception_sum=expected,
        )

    if identity == 6:
        if shape is None:
            raise DomainError("identity 6 needs the grid shape")
        from .oracles import RowProductOracle

        sym = SymbolicOracle()
        rows = tuple(range(1, shape.row_count + 1))
        expected = kappa_via_cyclic_over(rows, RowProductOracle(shape))
        return DieInstance(
            name=IDENTITY_NAMES[6],
            params={"shape": list(shape.row_sizes)},
            objects=tuple(enumerate_nested_indecomposable(shape)),
            sign=nested_sign,
            weight=_inner_weight(sym),
            involution=lambda rho: rowwise_merge_split(rho, shape),
            is_exception=lambda rho: grid_split_pair(rho, shape) is None,
            expected_exception_sum=expected,
        )

    if identity == 7:
        if cond is None:
            raise DomainError("identity 7 needs a conditional oracle")
        if names is None:
            names = tuple(nm for nm in cond.dist.variables if nm != cond.y_name)
        names = tuple(names)
        if any(nm == cond.y_name for nm in names):
            raise DomainError("the selection must not include the conditioner")
        ground = tuple(range(1, len(names) + 1))
        expected = kappa_via_cyclic_over(ground, SelectionOracle(cond.dist, names))
        return DieInstance(
            name=IDENTITY_NAMES[7],
            params={"vars": list(names), "y": cond.y_name},
            objects=tuple(enumerate_g(ground)),
            sign=g_sign,
            weight=_layered_conditional_weight(cond, names),
            involution=middle_merge_split,
            is_exception=lambda rho: all(
                len(s.inner_blocks) == 1 for s in rho.slots
            ),
            expected_exception_sum=expected,
        )

    raise DomainError(f"unknown identity {identity!r}; expected 1..7")
