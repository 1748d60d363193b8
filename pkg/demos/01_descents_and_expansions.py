"""Walk through the two ways of computing the Redei-Berge function.

A digraph D assigns each listing w of its vertices a descent set: the
positions where consecutive vertices form an arc.  Summing a fundamental
quasisymmetric function over all listings gives a symmetric function U_D,
and the package can also produce it directly in the power-sum basis from a
signed sum over permutations.  This script shows both routes agreeing on
the 3-vertex running example.
"""

import itertools

from redei_berge import (
    Digraph,
    descent_distribution,
    descent_set,
    redei_berge_by_definition,
    redei_berge_powersum,
)

# vertices 0, 1, 2; one real arc 0 -> 1 plus loops at 1 and 2
d = Digraph(3, [(0, 1), (1, 1), (2, 2)])

print("descent sets of all six listings:")
for w in itertools.permutations(range(3)):
    print(f"  {w} -> {sorted(descent_set(d, w).members)}")

dist = descent_distribution(d)
print("\nfundamental-basis coefficients (descent set -> multiplicity):")
for key, coeff in sorted(dist.terms.items(), key=lambda kv: sorted(kv[0].members)):
    print(f"  {sorted(key.members)} -> {coeff}")

f = redei_berge_powersum(d)
print("\npower-sum form:", f.to_text())
print("JSON form:     ", f.to_json())

m = 3  # three variables are faithful for a degree-3 symmetric function
assert f.expand(m) == redei_berge_by_definition(d, m)
print(f"\nboth routes expand to the same polynomial in {m} variables.")

mono = f.expand(m)
print("a few monomial coefficients:")
for expo in [(1, 1, 1), (2, 1, 0), (3, 0, 0)]:
    print(f"  x^{expo}: {mono.coefficient(expo)}")
