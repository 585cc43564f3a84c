"""
Hurwitz numbers two ways
========================

A Hurwitz number counts transitive factorizations of a permutation of
cycle type alpha into r simple transpositions, with r fixed by
Riemann-Hurwitz.  The solver gets them from the join-cut recursion; the
oracle counts factorizations directly.  On small cases they agree.
"""
from fractions import Fraction

from hurwitzhodge import HurwitzCache, hurwitz_oracle, hurwitz_solve, solve_closure
from hurwitzhodge.exact import enumerate_partitions, format_rational, transposition_count

# A single value.  H is F / prod(alpha), F being the count for a fixed permutation.
value = hurwitz_solve(0, (2, 1), HurwitzCache())
print(f"H^0_(2,1) = {format_rational(value.H)} with r = {value.r}")

# Solve everything with d <= 5, g <= 1 at once and compare with brute force.
cache = solve_closure(5, 1, HurwitzCache())
print("\n g  alpha        r  solver   oracle")
for d in range(1, 5):
    for alpha in enumerate_partitions(d):
        if sum(alpha) != d:
            continue
        for g in (0, 1):
            r = transposition_count(g, alpha)
            if r < 0:
                continue
            solved = cache.H(g, alpha)
            counted = hurwitz_oracle(g, alpha).H
            flag = "" if solved == counted else "  <-- differ"
            print(f" {g}  {str(alpha):11s} {r:2d}  {format_rational(solved):>7s}  "
                  f"{format_rational(counted):>7s}{flag}")

# Genus zero with one part: a fixed d-cycle has d^(d-2) minimal factorizations,
# so H^0_(d) = d^(d-3).
print()
for d in range(1, 7):
    H = hurwitz_solve(0, (d,), cache).H
    print(f"H^0_({d}) = {format_rational(H)}   d^(d-3) = {format_rational(Fraction(d) ** (d - 3))}")
