"""Exact sparse polynomials in formal moment symbols.

A symbol m{B} stands for the expectation of the product of the variables
indexed by the set B.  A monomial is a multiset of symbols, a polynomial a
map from monomials to rational coefficients.  Zero coefficients are never
stored, so two polynomials are equal iff their term dicts are equal and the
zero polynomial has no terms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import DomainError
from .partitions import Element, element_str

SymbolKey = tuple  # sorted tuple of elements: the index set of one symbol
Monomial = tuple   # sorted tuple of SymbolKey: a multiset of symbols

Scalar = (int, Fraction)


class MomentPolynomial:
    """A polynomial over moment symbols with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    clean[tuple(sorted(tuple(k) for k in mono))] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "MomentPolynomial":
        return cls()

    @classmethod
    def constant(cls, value) -> "MomentPolynomial":
        return cls({(): Fraction(value)})

    @classmethod
    def symbol(cls, indices: Iterable[Element]) -> "MomentPolynomial":
        key = tuple(sorted(indices))
        if not key:
            raise DomainError("a moment symbol needs a nonempty index set")
        if any(a == b for a, b in zip(key, key[1:])):
            raise DomainError(f"duplicate index in moment symbol: {key}")
        return cls({(key,): Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _coerced(self, other):
        if isinstance(other, MomentPolynomial):
            return other
        if isinstance(other, Scalar):
            return MomentPolynomial.constant(other)
        return None

    def __add__(self, other):
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in rhs.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return MomentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return MomentPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            c = Fraction(other)
            return MomentPolynomial({m: c * v for m, v in self.terms.items()})
        if not isinstance(other, MomentPolynomial):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return MomentPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return self.terms == rhs.terms

    def render(self) -> str:
        """Canonical string: monomials sorted, symbols as m{1,3}."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            body = "*".join(
                "m{" + ",".join(element_str(e) for e in key) + "}" for key in mono
            )
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not parts:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append(("- " if c < 0 else "+ ") + text)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MomentPolynomial({self.render()})"
