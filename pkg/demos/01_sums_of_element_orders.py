"""Three independent routes to the sum of element orders.

psi(G) adds up the order of every element of a finite group G.  For cyclic
groups the package knows a closed form, a divisor-sum oracle, and the
definition itself (walk the multiplication table); this script shows all
three agreeing, then looks at how psi drops on non-cyclic groups.
"""

from fractions import Fraction

from ordersum import (
    Cyclic,
    GeneralizedQuaternion,
    build_group,
    f_ratio,
    psi_cyclic,
    psi_cyclic_oracle,
)

print("psi(C_n) three ways (closed form / divisor oracle / table walk):")
for n in (1, 6, 8, 12, 30, 100):
    closed = psi_cyclic(n)
    oracle = psi_cyclic_oracle(n)
    brute = build_group(Cyclic(n)).psi()
    assert closed == oracle == brute
    print(f"  n={n:<4} psi={closed}")

print()
print("The closed form is multiplicative: psi(C_12) = psi(C_4) psi(C_3) =",
      psi_cyclic(4), "*", psi_cyclic(3), "=", psi_cyclic(12))

print()
q8 = build_group(GeneralizedQuaternion(8))
print("A non-cyclic group falls well short of the cyclic value:")
print(f"  psi(Q8) = {q8.psi()}  vs  psi(C_8) = {psi_cyclic(8)}")
print(f"  order profile of Q8: {q8.order_profile()}")

print()
print("The exact drop factor for the best non-cyclic group is f(q), where q")
print("is the least prime divisor of the order:")
for q in (2, 3, 5, 7):
    print(f"  f({q}) = {f_ratio(q)}")
print("Q8 stays strictly below it:",
      Fraction(q8.psi()), "<", f_ratio(2) * psi_cyclic(8), "=",
      f"(7/11) * 43")
