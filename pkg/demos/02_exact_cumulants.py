"""Joint cumulants of exact finite distributions.

Cumulants measure departure from independence: the first is the mean, the
second the covariance, and a cumulant across independently coupled groups
vanishes.  Everything below is computed with exact rational arithmetic; no
value is ever rounded.
"""

from fractions import Fraction

from cumulants import FiniteDistribution, kappa, kappa_via_cyclic, product_distribution

coin = FiniteDistribution.of(("X",), [((0,), "1/2"), ((1,), "1/2")])
print("a fair coin X:")
print("  E(X)      = kappa(X)   =", kappa(coin, ("X",)))
print("  Var(X)    = kappa(X,X) =", kappa(coin, ("X", "X")))
print("  kappa(X,X,X) =", kappa(coin, ("X", "X", "X")), " (third central moment)")

biased = FiniteDistribution.of(("Y",), [((0,), "2/3"), ((3,), "1/3")])
pair = product_distribution(coin, biased)
print()
print("independent coupling of X with a biased Y:")
print("  E(XY) =", pair.expectation(["X", "Y"]))
print("  E(X)E(Y) =", pair.expectation(["X"]) * pair.expectation(["Y"]))
print("  kappa(X,Y) =", kappa(pair, ("X", "Y")), " (zero: the groups are independent)")

correlated = FiniteDistribution.of(
    ("U", "V"),
    [((0, 0), "1/3"), ((1, 1), "1/3"), ((1, 0), "1/3")],
)
print()
print("a correlated pair:")
print("  kappa(U,V) =", kappa(correlated, ("U", "V")))
print("  kappa(U,V,V) =", kappa(correlated, ("U", "V", "V")))

print()
print("the defining partition sum and the cyclic-arrangement sum always agree:")
for names in [("U",), ("U", "V"), ("U", "V", "U")]:
    a = kappa(correlated, names)
    b = kappa_via_cyclic(correlated, names)
    print(f"  kappa{names} = {a}  (cyclic route: {b}, equal: {a == b})")

print()
print("mixing weights need to be exact; a quarter is Fraction(1, 4):")
print("  Fraction('1/4') ==", Fraction("1/4"))
