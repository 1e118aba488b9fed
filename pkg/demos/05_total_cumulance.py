"""The law of total cumulance, exactly.

Conditioning on Y turns each block cumulant into a random variable through Y;
summing the outer cumulant of those over all partitions recovers the plain
cumulant.  At n=1 this is the tower formula, at n=2 the law of total
covariance.
"""

from fractions import Fraction

from cumulants import (
    ConditionalOracle,
    FiniteDistribution,
    conditional_kappa,
    kappa,
    total_cumulance_sum,
    verify_total_cumulance,
)

# Y in {0,1}: given 0, two independent fair coins; given 1, a comonotone pair.
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

print("conditional covariances and means per value of Y:")
for y, prob in cond.y_support():
    cov = conditional_kappa(cond, ("X1", "X2"), y)
    m1 = cond.conditional_expectation(["X1"], y)
    m2 = cond.conditional_expectation(["X2"], y)
    print(f"  Y={y} (prob {prob}):  Cov={cov}   E(X1|Y)={m1}   E(X2|Y)={m2}")

expected_cov = sum(
    (p * conditional_kappa(cond, ("X1", "X2"), y) for y, p in cond.y_support()),
    Fraction(0),
)
means1 = {y: cond.conditional_expectation(["X1"], y) for y, _ in cond.y_support()}
means2 = {y: cond.conditional_expectation(["X2"], y) for y, _ in cond.y_support()}
cov_of_means = sum(
    (p * means1[y] * means2[y] for y, p in cond.y_support()), Fraction(0)
) - sum((p * means1[y] for y, p in cond.y_support()), Fraction(0)) * sum(
    (p * means2[y] for y, p in cond.y_support()), Fraction(0)
)

print()
print("law of total covariance:")
print("  E(Cov(X1,X2|Y))        =", expected_cov)
print("  Cov(E(X1|Y), E(X2|Y))  =", cov_of_means)
print("  sum                    =", expected_cov + cov_of_means)
print("  Cov(X1,X2) directly    =", kappa(joint, ("X1", "X2")))

print()
print("the same via the partition-indexed sum of outer cumulants:")
print("  total_cumulance_sum =", total_cumulance_sum(cond, ("X1", "X2")))

rep = verify_total_cumulance(cond, ("X1", "X2"))
print()
print("verification report:", rep.to_json())
