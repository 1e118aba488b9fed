"""Exact finite discrete joint distributions, with conditioning.

A distribution is a list of named columns plus weighted atoms (value vectors
with positive rational probabilities summing to exactly 1).  Nothing here is
ever rounded or normalized silently: malformed input fails loudly.

The JSON form, also used by the CLI:

    {"variables": ["X", "Y"],
     "atoms": [{"values": ["0", "1/2"], "prob": "1/4"}, ...]}

with rationals written as "p/q" or integer strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DistributionParseError, DomainError

Atom = tuple[tuple[Fraction, ...], Fraction]


def parse_rational(value) -> Fraction:
    """Accept int or exact string forms; refuse floats (no silent rounding)."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class FiniteDistribution:
    variables: tuple[str, ...]
    atoms: tuple[Atom, ...]

    def __init__(self, variables: Iterable[str], atoms: Iterable[Atom]):
        names = tuple(variables)
        if not names:
            raise DomainError("a distribution needs at least one variable")
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate variable names: {names}")
        if any(not isinstance(v, str) or not v for v in names):
            raise DomainError("variable names must be nonempty strings")
        merged: dict[tuple[Fraction, ...], Fraction] = {}
        for values, prob in atoms:
            vals = tuple(Fraction(v) for v in values)
            if len(vals) != len(names):
                raise DomainError(
                    f"atom {vals} has {len(vals)} values, expected {len(names)}"
                )
            p = Fraction(prob)
            if p <= 0:
                raise DomainError(f"atom probabilities must be positive, got {p}")
            merged[vals] = merged.get(vals, Fraction(0)) + p
        if not merged:
            raise DomainError("a distribution needs at least one atom")
        total = sum(merged.values())
        if total != 1:
            raise DomainError(f"atom probabilities sum to {total}, expected 1")
        object.__setattr__(self, "variables", names)
        object.__setattr__(
            self, "atoms", tuple(sorted(merged.items()))
        )

    @classmethod
    def of(cls, variables: Iterable[str], rows: Iterable[tuple]) -> "FiniteDistribution":
        """Convenience constructor coercing values: rows are (values, prob)."""
        return cls(
            variables,
            (
                (tuple(Fraction(v) for v in values), Fraction(prob))
                for values, prob in rows
            ),
        )

    def column(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise DomainError(f"unknown variable {name!r}") from None

    def expectation(self, names: Sequence[str]) -> Fraction:
        """E of the product of the named columns; repeats give powers."""
        cols = [self.column(n) for n in names]
        total = Fraction(0)
        for values, prob in self.atoms:
            term = prob
            for c in cols:
                term *= values[c]
            total += term
        return total

    def support(self, name: str) -> tuple[Fraction, ...]:
        c = self.column(name)
        return tuple(sorted({values[c] for values, _ in self.atoms}))

    def marginal_probability(self, name: str, value: Fraction) -> Fraction:
        c = self.column(name)
        return sum(
            (prob for values, prob in self.atoms if values[c] == value),
            Fraction(0),
        )

    def restrict(self, name: str, value) -> "FiniteDistribution":
        """Condition on name == value, renormalizing exactly."""
        c = self.column(name)
        value = Fraction(value)
        mass = self.marginal_probability(name, value)
        if mass == 0:
            raise DomainError(f"conditioning on zero-probability value {name}={value}")
        return FiniteDistribution(
            self.variables,
            (
                (values, prob / mass)
                for values, prob in self.atoms
                if values[c] == value
            ),
        )

    def with_column(
        self, name: str, fn: Callable[[tuple[Fraction, ...]], Fraction]
    ) -> "FiniteDistribution":
        """Append a derived column computed from each atom's values."""
        if name in self.variables:
            raise DomainError(f"variable {name!r} already exists")
        return FiniteDistribution(
            self.variables + (name,),
            (
                (values + (Fraction(fn(values)),), prob)
                for values, prob in self.atoms
            ),
        )

    def to_json(self):
        return {
            "variables": list(self.variables),
            "atoms": [
                {"values": [str(v) for v in values], "prob": str(prob)}
                for values, prob in self.atoms
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "FiniteDistribution":
        if not isinstance(obj, dict):
            raise DistributionParseError("distribution must be a JSON object")
        names = obj.get("variables")
        if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
            raise DistributionParseError('"variables" must be an array of strings')
        raw_atoms = obj.get("atoms")
        if not isinstance(raw_atoms, list):
            raise DistributionParseError('"atoms" must be an array')
        atoms: list[Atom] = []
        for idx, raw in enumerate(raw_atoms):
            if not isinstance(raw, dict):
                raise DistributionParseError(f"atom {idx}: must be an object")
            values = raw.get("values")
            if not isinstance(values, list):
                raise DistributionParseError(f'atom {idx}: "values" must be an array')
            try:
                vals = tuple(parse_rational(v) for v in values)
                prob = parse_rational(raw.get("prob"))
            except (ValueError, ZeroDivisionError, TypeError) as exc:
                raise DistributionParseError(f"atom {idx}: {exc}") from None
            atoms.append((vals, prob))
        try:
            return cls(names, atoms)
        except DomainError as exc:
            raise DistributionParseError(str(exc)) from None


def product_distribution(
    d1: FiniteDistribution, d2: FiniteDistribution
) -> FiniteDistribution:
    """Independent coupling: all value pairs, probabilities multiplied."""
    clash = set(d1.variables) & set(d2.variables)
    if clash:
        raise DomainError(f"variable names collide: {sorted(clash)}")
    return FiniteDistribution(
        d1.variables + d2.variables,
        (
            (v1 + v2, p1 * p2)
            for v1, p1 in d1.atoms
            for v2, p2 in d2.atoms
        ),
    )


@dataclass(frozen=True)
class ConditionalOracle:
    """A joint distribution with one column designated as the conditioner Y."""

    dist: FiniteDistribution
    y_name: str

    def __init__(self, dist: FiniteDistribution, y_name: str):
        dist.column(y_name)  # unknown name raises
        object.__setattr__(self, "dist", dist)
        object.__setattr__(self, "y_name", y_name)
        object.__setattr__(self, "_slices", {})

    def y_support(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """(value, marginal probability) pairs, sorted by value."""
        return tuple(
            (y, self.dist.marginal_probability(self.y_name, y))
            for y in self.dist.support(self.y_name)
        )

    def given(self, y) -> FiniteDistribution:
        y = Fraction(y)
        cache = self._slices
        if y not in cache:
            cache[y] = self.dist.restrict(self.y_name, y)
        return cache[y]

    def conditional_expectation(self, names: Sequence[str], y) -> Fraction:
        return self.given(y).expectation(names)
