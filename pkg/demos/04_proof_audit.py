"""Auditing the numeric backbone of the bounding arguments.

The proofs of the two bounding propositions lean on a handful of standalone
rational inequalities.  Because everything here is exact arithmetic, each
one can be replayed and its margins inspected; the audit also pins down the
famous boundary behavior: the key inequality genuinely fails at q = 2
(cross-multiplied form 341 < 336) and barely survives at q = 3 (4087 < 4375).
"""

from ordersum import lemma5_check, lemma6_check, proof_inequality_audit

report = proof_inequality_audit(q_max=97, p_max=199, s_max=6)
print(f"audit verdict: {report.verdict}  ({len(report.cases)} recorded cases)")
print()

for case in report.cases:
    if case.params.get("item") == "c" and case.params["q"] in (2, 3):
        q = case.params["q"]
        print(f"item (c) at q={q}: {case.lhs} < {case.rhs} is {case.verdict!r}")
        print(f"  cross-multiplied: {case.params['cross_lhs']} < {case.params['cross_rhs']}")
print()

print("Semidirect product bounds over every admissible (m, k, a) with mk <= 200:")
r5 = lemma5_check(200)
print(f"  split bound psi(G) <= psi(C_m) psi(C_k): {r5.verdict} "
      f"({r5.params['groups_checked']} groups, {r5.params['equalities']} central equalities)")
tight = r5.cases[-1]
print(f"  tightest strict instance: SD{tuple(tight.params.values())} "
      f"with {tight.lhs} < {tight.rhs}")

r6 = lemma6_check(200)
print(f"  kernel-weighted strict bound: {r6.verdict} "
      f"({r6.params['groups_checked']} non-central groups)")
tight6 = r6.cases[-1]
print(f"  tightest instance: m={tight6.params['m']}, k={tight6.params['k']}, "
      f"a={tight6.params['a']}: {tight6.lhs} < {tight6.rhs}")
