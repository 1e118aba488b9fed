from fractions import Fraction
from itertools import combinations
from random import Random

import pytest

from cumulants import (
    Block,
    ConditionalOracle,
    CyclicPartition,
    DieInstance,
    DomainError,
    FiniteDistribution,
    GObject,
    GridShape,
    NestedObject,
    Partition,
    build_instance,
    check_die,
    crossing_merge_split,
    cycle_merge_split,
    cyclic_sign,
    enumerate_cyclic,
    enumerate_g,
    enumerate_nested,
    enumerate_nested_finer,
    enumerate_nested_indecomposable,
    grid_split_pair,
    is_indecomposable,
    merge_or_split,
    middle_merge_split,
    min_merge_split,
    nested_sign,
    rowwise_merge_split,
)
from cumulants.die import blockwise_merge_split
from helpers import random_distribution


def cyc(*blocks):
    return CyclicPartition(Block(b) for b in blocks)


def nested(*cycles):
    return NestedObject(tuple(Block(b) for b in c) for c in cycles)


# --- involution on cyclic partitions (identities 1 and 2) ------------------


def test_min_merge_split_base_cases():
    assert min_merge_split(cyc([1], [2])) == cyc([1, 2])
    assert min_merge_split(cyc([1, 2])) == cyc([1], [2])
    # minimum alone merges into the next block of the cycle
    assert min_merge_split(cyc([2, 3], [1])) == min_merge_split(cyc([1], [2, 3]))
    assert min_merge_split(cyc([1], [2, 3])) == cyc([1, 2, 3])
    with pytest.raises(DomainError):
        min_merge_split(cyc([1]))


def test_min_merge_split_is_a_total_involution():
    for n in range(2, 6):
        for sigma in enumerate_cyclic(range(1, n + 1)):
            image = min_merge_split(sigma)
            assert image != sigma
            assert abs(len(image.blocks) - len(sigma.blocks)) == 1
            assert min_merge_split(image) == sigma
            assert cyclic_sign(image) == -cyclic_sign(sigma)


# --- involution under a bipartition (identity 3) ----------------------------


def test_crossing_merge_split_spec_traces():
    # n=2 both directions
    assert crossing_merge_split(cyc([1, 2]), [1], [2]) == cyc([1], [2])
    assert crossing_merge_split(cyc([1], [2]), [1], [2]) == cyc([1, 2])
    # block holding the left minimum also holds a right element: pull it out
    assert crossing_merge_split(cyc([1, 2], [3]), [1, 3], [2]) == cyc([1], [2], [3])
    # first right block is pure: the previous (pure-left) block merges in
    assert crossing_merge_split(cyc([1], [2], [3]), [1, 2], [3]) == cyc([1], [2, 3])


def test_crossing_merge_split_validation():
    with pytest.raises(DomainError):
        crossing_merge_split(cyc([1, 2]), [1], [3])
    with pytest.raises(DomainError):
        crossing_merge_split(cyc([1, 2]), [1, 2], [])


def all_bipartitions(n):
    ground = list(range(1, n + 1))
    for k in range(1, n):
        for left in combinations(ground, k):
            right = tuple(e for e in ground if e not in left)
            yield left, right


def test_crossing_merge_split_is_a_total_involution():
    for n in range(2, 5):
        for left, right in all_bipartitions(n):
            for sigma in enumerate_cyclic(range(1, n + 1)):
                image = crossing_merge_split(sigma, left, right)
                assert abs(len(image.blocks) - len(sigma.blocks)) == 1
                assert crossing_merge_split(image, left, right) == sigma


# --- cycle surgery on nested objects (identities 4..6) ----------------------


def test_merge_or_split_examples():
    assert merge_or_split(nested([[1]], [[2]]), Block([1]), Block([2])) == nested(
        [[1], [2]]
    )
    assert merge_or_split(nested([[1], [2]]), Block([1]), Block([2])) == nested(
        [[1]], [[2]]
    )
    # (g1 g3 g2) splits immediately before g2
    three = nested([[1], [3], [2]])
    assert merge_or_split(three, Block([1]), Block([2])) == nested([[1], [3]], [[2]])


def test_cycle_merge_split_matches_spec_exception():
    assert cycle_merge_split(nested([[1, 2, 3]])) is None
    for n in range(1, 5):
        for rho in enumerate_nested(range(1, n + 1)):
            image = cycle_merge_split(rho)
            if len(rho.inner_blocks) == 1:
                assert image is None
                continue
            assert image is not None
            assert image.inner_blocks == rho.inner_blocks
            assert abs(len(image.cycles) - len(rho.cycles)) == 1
            assert cycle_merge_split(image) == rho
            assert nested_sign(image) == -nested_sign(rho)


def test_blockwise_merge_split():
    whole = Partition.of([[1, 2, 3]])
    for rho in enumerate_nested_finer(whole):
        assert blockwise_merge_split(rho, whole) == cycle_merge_split(rho)

    singles = Partition.of([[1], [2], [3]])
    for rho in enumerate_nested_finer(singles):
        assert blockwise_merge_split(rho, singles) is None

    tau = Partition.of([[1, 2], [3]])
    for rho in enumerate_nested_finer(tau):
        image = blockwise_merge_split(rho, tau)
        if rho.inner_blocks == tau.blocks:
            assert image is None
        else:
            assert image is not None
            assert blockwise_merge_split(image, tau) == rho

    with pytest.raises(DomainError):
        blockwise_merge_split(nested([[1, 2, 3]]), tau)


def test_grid_split_pair_rule():
    shape = GridShape((3, 1))
    rho = nested([[(1, 1), (1, 2)], [(1, 3), (2, 1)]])
    a, b = grid_split_pair(rho, shape)
    # smallest row with a split is 1; smallest j is 1 (block of (1,1)),
    # smallest differing k is 3
    assert (1, 1) in a and (1, 3) in b
    assert grid_split_pair(nested([[(1, 1), (1, 2), (1, 3), (2, 1)]]), shape) is None


def test_rowwise_merge_split_preserves_indecomposability():
    for sizes in [(1, 1), (2, 1), (1, 1, 1), (2, 2), (2, 1, 1), (3, 1)]:
        shape = GridShape(sizes)
        for rho in enumerate_nested_indecomposable(shape):
            image = rowwise_merge_split(rho, shape)
            if image is None:
                continue
            assert is_indecomposable(image.outer_partition, shape)
            assert rowwise_merge_split(image, shape) == rho
            # the deterministic split pair is stable under the map
            assert grid_split_pair(image, shape) == grid_split_pair(rho, shape)


def test_rowwise_exceptions_match_cyclic_row_expansion():
    for sizes in [(1, 1), (2, 1), (1, 1, 1), (2, 2)]:
        shape = GridShape(sizes)
        exceptions = {
            rho
            for rho in enumerate_nested_indecomposable(shape)
            if grid_split_pair(rho, shape) is None
        }
        expected = set()
        for sigma in enumerate_cyclic(range(1, shape.row_count + 1)):
            cycle = tuple(
                Block(e for i in b for e in shape.row(i)) for b in sigma.blocks
            )
            expected.add(NestedObject((cycle,)))
        assert exceptions == expected


def test_middle_merge_split():
    for n in (2, 3):
        for rho in enumerate_g(range(1, n + 1)):
            image = middle_merge_split(rho)
            if all(len(s.inner_blocks) == 1 for s in rho.slots):
                assert image is None
                continue
            assert image is not None
            assert image.outer_blocks == rho.outer_blocks
            assert image.inner_blocks == rho.inner_blocks
            assert middle_merge_split(image) == rho


def test_g_exceptions_are_cyclic_arrangements():
    for n in (2, 3):
        exceptions = {
            rho
            for rho in enumerate_g(range(1, n + 1))
            if middle_merge_split(rho) is None
        }
        expected = {
            GObject(NestedObject(((b,),)) for b in sigma.blocks)
            for sigma in enumerate_cyclic(range(1, n + 1))
        }
        assert exceptions == expected


# --- the generic checker -----------------------------------------------------


def test_check_die_trivial_all_exceptions():
    objs = (cyc([1, 2]), cyc([1], [2]))
    instance = DieInstance(
        name="trivial",
        params={},
        objects=objs,
        sign=cyclic_sign,
        weight=lambda _o: Fraction(1),
        involution=lambda _o: None,
        is_exception=lambda _o: True,
    )
    rep = check_die(instance)
    assert rep.passed
    assert rep.exceptions == 2
    assert rep.residual == 0


def test_check_die_flags_bad_instances():
    objs = tuple(enumerate_cyclic((1, 2, 3)))
    broken = DieInstance(
        name="broken",
        params={},
        objects=objs,
        sign=cyclic_sign,
        weight=lambda _o: Fraction(1),
        involution=lambda o: o,  # identity map: not sign-reversing
        is_exception=lambda _o: False,
    )
    rep = check_die(broken)
    assert not rep.sign_ok
    assert not rep.passed
    assert rep.first_failure is not None


def test_instance_coefficient_sum():
    rep = check_die(build_instance(1, n=3))
    assert rep.passed and rep.objects == 6 and rep.exceptions == 0
    assert rep.residual == 0
    with pytest.raises(DomainError):
        build_instance(1, n=1)


def test_instance_near_independence_exceptions():
    inst = build_instance(2, n=4)
    exceptions = [o for o in inst.objects if inst.is_exception(o)]
    assert set(exceptions) == {
        cyc([1, 2, 3, 4]),
        cyc([1], [2, 3, 4]),
    }
    rep = check_die(inst)
    assert rep.passed and rep.exceptions == 2
    # at n=2 every object is an exception
    rep2 = check_die(build_instance(2, n=2))
    assert rep2.passed and rep2.exceptions == 2 and rep2.objects == 2


def test_instance_independent_split():
    rng = Random(17)
    dm = random_distribution(rng, ("A", "B"))
    dn = random_distribution(rng, ("C",))
    rep = check_die(build_instance(3, dist_m=dm, dist_n=dn))
    assert rep.passed and rep.exceptions == 0
    # repeated selection drawing from both sides
    rep = check_die(
        build_instance(3, dist_m=dm, dist_n=dn, names=("A", "C", "A"))
    )
    assert rep.passed
    with pytest.raises(DomainError):
        build_instance(3, dist_m=dm, dist_n=dn, names=("A", "B"))


def test_instance_moment_expansion():
    rep = check_die(build_instance(4, n=3))
    assert rep.passed and rep.objects == 13 and rep.exceptions == 1
    inst = build_instance(4, n=3)
    the_exception = [o for o in inst.objects if inst.is_exception(o)]
    assert the_exception == [nested([[1, 2, 3]])]


def test_instance_refinement():
    tau = Partition.of([[1, 2], [3]])
    inst = build_instance(5, tau=tau)
    rep = check_die(inst)
    assert rep.passed and rep.exceptions == 1
    the_exception = [o for o in inst.objects if inst.is_exception(o)]
    assert the_exception == [nested([[1, 2]], [[3]])]


def test_instance_row_products():
    rep = check_die(build_instance(6, shape=GridShape((2, 1))))
    assert rep.passed and rep.exceptions == 2


def test_instance_total_cumulance():
    joint = FiniteDistribution.of(
        ("X1", "X2", "Y"),
        [
            ((0, 0, 0), "1/8"),
            ((0, 1, 0), "1/8"),
            ((1, 0, 0), "1/8"),
            ((1, 1, 0), "1/8"),
            ((0, 0, 1), "1/4"),
            ((1, 1, 1), "1/4"),
        ],
    )
    cond = ConditionalOracle(joint, "Y")
    rep = check_die(build_instance(7, cond=cond, names=("X1", "X2")))
    assert rep.passed and rep.objects == 4 and rep.exceptions == 2


def test_build_instance_rejects_unknown_identity():
    with pytest.raises(DomainError):
        build_instance(8, n=3)


def test_die_report_serialization():
    js = check_die(build_instance(4, n=2)).to_json()
    assert js["passed"] is True
    assert js["residual"] == "0"
    assert js["exception_sum"] == "m{1,2}"
    assert js["first_failure"] is None
