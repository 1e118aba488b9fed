"""Tour of the combinatorial families.

Four families of objects, each enumerated exactly once in a canonical form:
set partitions, cyclically arranged partitions, nested objects (cycles of
inner blocks), and layered objects (an outer cycle whose blocks carry cycles
of inner blocks).  Counts follow closed formulas that the enumerators must
reproduce.
"""

from cumulants import (
    GridShape,
    bell_number,
    cyclic_count,
    enumerate_cyclic,
    enumerate_g,
    enumerate_nested,
    enumerate_partitions,
    g_count,
    nested_count,
)

print("partitions of {1,2,3} (restricted-growth order):")
for tau in enumerate_partitions([1, 2, 3]):
    print("   ", tau.pretty())
print("count:", bell_number(3), "(Bell number)")

print()
print("cyclic arrangements of {1,2,3}: each partition with k blocks")
print("appears (k-1)! times, the anchor block holding the minimum:")
for sigma in enumerate_cyclic([1, 2, 3]):
    print("   ", sigma.pretty())
print("count:", cyclic_count(3))

print()
print("nested objects over {1,2}: cycles of inner blocks")
for rho in enumerate_nested([1, 2]):
    print("   ", rho.pretty(), "  outer partition:", rho.outer_partition.pretty())
print("count:", nested_count(2))

print()
print("layered objects over {1,2}: slots on an outer cycle")
for g in enumerate_g([1, 2]):
    print("   ", g.pretty())
print("count:", g_count(2))

print()
print("grids: the shape (2,1) names elements (1,1), (1,2), (2,1)")
shape = GridShape((2, 1))
print("grid elements:", [f"{i}.{j}" for i, j in shape.elements()])
print("partitions of the grid:", sum(1 for _ in enumerate_partitions(shape.elements())))

print()
print("counts for n = 1..6:")
print("n   partitions   cyclic   nested   layered")
for n in range(1, 7):
    nested_c = nested_count(n) if n <= 6 else "-"
    print(f"{n}   {bell_number(n):>10}   {cyclic_count(n):>6}   {nested_c:>6}   {g_count(n):>7}")
