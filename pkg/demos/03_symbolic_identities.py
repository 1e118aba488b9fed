"""Distribution-free identities, verified as exact polynomial equalities.

Where an identity holds for every distribution, both sides are expanded in a
formal moment ring: a symbol m{B} stands for the expectation of the product
of the variables indexed by B.  Equality of the two sides is then literal
equality of canonical polynomials.
"""

from cumulants import (
    GridShape,
    Partition,
    SymbolicOracle,
    kappa_over,
    verify_moment_expansion,
    verify_near_independence,
    verify_refinement,
    verify_row_products,
)

print("the cumulant itself, expanded symbolically:")
for n in (1, 2, 3):
    print(f"  kappa over {n} variables = {kappa_over(range(1, n + 1), SymbolicOracle())}")

print()
print("moment expansion: m{S} is the sum over partitions of cumulant products")
for n in (2, 3, 4):
    rep = verify_moment_expansion(n)
    print(f"  n={n}: {rep.objects_visited} partitions, both sides {rep.left}, equal={rep.equal}")

print()
print("refinement: the product of a partition's block moments equals the sum")
print("of cumulant products over all finer partitions")
tau = Partition.of([[1, 2], [3]])
rep = verify_refinement(tau)
print(f"  tau = {tau.pretty()}: both sides {rep.left}, equal={rep.equal}")

print()
print("near-independence: if every proper subset is independent, the cumulant")
print("collapses to the full moment minus the product of first moments")
rep = verify_near_independence(4)
print(f"  n=4: kappa = {rep.left}")

print()
print("row products: the cumulant of per-row products expands over exactly")
print("the indecomposable partitions of the grid")
for sizes in [(1, 1), (2, 1), (2, 2)]:
    rep = verify_row_products(GridShape(sizes))
    print(
        f"  shape {sizes}: {rep.objects_visited} indecomposable partitions, "
        f"equal={rep.equal}"
    )
rep = verify_row_products(GridShape((2, 1)))
print("  shape (2,1) value:", rep.left)
