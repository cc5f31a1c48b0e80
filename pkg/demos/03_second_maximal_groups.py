"""The second-maximal classification, machine-checked.

Among groups of order n the cyclic group uniquely maximizes psi.  The best
a non-cyclic group can do is f(q) * psi(C_n), with q the least prime
divisor of n, and the groups attaining that ceiling are exactly
(C_q x C_q) x C_k for n = q^2 k with every prime factor of k above q.
This script runs those checks exhaustively at small orders and across the
construction family at larger ones.
"""

from ordersum import (
    mqr_formula_check,
    thm4_family_check,
    verify_equality_classification,
    verify_max_cyclic,
)
from ordersum.theorems import reports_to_text

print("Cyclic maximality over the exhaustive catalog (orders 2..12):")
for n in range(2, 13):
    report = verify_max_cyclic(n)
    gap = min((c.rhs - c.lhs for c in report.cases), default=None)
    extra = f", smallest gap {gap}" if gap is not None else " (vacuous)"
    print(f"  n={n:>2}: {report.verdict}{extra}")

print()
print("Equality classification at n = 12 (exhaustive):")
print(reports_to_text([verify_equality_classification(12)]))

print("The same equality at family scale, q = 2, odd k (orders up to 396):")
report = thm4_family_check(2, 99)
equalities = [c for c in report.cases if c.expected == "equality"]
print(f"  {report.verdict}: {len(equalities)} exact equalities, e.g. "
      f"{equalities[-1].params} with both sides {equalities[-1].lhs}")

print()
print("Among non-cyclic groups of prime-power order q^r the ceiling is shared")
print("by the modular group and C_q x C_{q^(r-1)}, still below f(q) psi(C_n):")
for q, r in ((2, 4), (3, 3), (5, 3)):
    rep = mqr_formula_check(q, r)
    print(f"  q={q}, r={r}: {rep.verdict}, shared value {rep.params['closed_form']}")
