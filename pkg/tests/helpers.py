"""Shared test utilities: independent oracles and random rational inputs."""

from fractions import Fraction
from random import Random

from cumulants import Block, FiniteDistribution, Partition


def brute_partitions(elems):
    """Independent partition enumeration: insert each element into every
    existing block or a new one (no restricted-growth strings)."""
    elems = list(elems)
    if not elems:
        return
    first, rest = elems[0], elems[1:]
    if not rest:
        yield [[first]]
        return
    for smaller in brute_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1 :]
        yield [[first]] + smaller


def as_partition_set(parts):
    return {Partition(Block(b) for b in p) for p in parts}


def random_distribution(rng: Random, names, max_atoms=4) -> FiniteDistribution:
    """A small joint distribution with random rational values and exact
    probabilities (integer weights, normalized exactly)."""
    names = tuple(names)
    n_atoms = rng.randint(2, max_atoms)
    weights = [rng.randint(1, 5) for _ in range(n_atoms)]
    total = sum(weights)
    rows = []
    for w in weights:
        values = tuple(
            Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in names
        )
        rows.append((values, Fraction(w, total)))
    return FiniteDistribution.of(names, rows)


def fair_coin(name: str) -> FiniteDistribution:
    return FiniteDistribution.of((name,), [((0,), Fraction(1, 2)), ((1,), Fraction(1, 2))])
