"""The inverse problem: is the generated family orthogonal again?

Given a MOPS (P_n) with functional u and an irreducible 2-3 relation, the
generated family (Q_n) need not be orthogonal. Two independent checkers
decide it: one verifies the full ladder of coefficient equations, the
other verifies that three derived sequences are constant. When both say
yes, the second functional v satisfies lambda (x - c) u = (x^2 + ax + b) v
with constants read off from the data.
"""

from mopsrel import (
    Relation23,
    chebyshev_case,
    check_by_constants,
    check_by_equations,
    relation_constants,
    v_moments_from_relation,
    moments_from_recurrence,
    verify_functional_relation,
)

# a known-good instance: recurrence and relation from the built-in
# point-mass worked case
case = chebyshev_case(8)
rec, rel = case.u_rec, case.rel

eq = check_by_equations(rec, rel, 8)
ct = check_by_constants(rec, rel, 8)
print(f"equation checker:  is_mops = {eq.is_mops}")
print(f"constancy checker: is_mops = {ct.is_mops}, triple = {ct.constants}")
assert eq.is_mops and ct.is_mops
assert eq.induced == ct.induced

fr = relation_constants(rec, rel)
print(f"functional identity: {fr.lam} (x - {fr.c}) u = (x^2 + {fr.a} x + {fr.b}) v")
assert (fr.a, fr.b, fr.c) == ct.constants

# the identity holds moment by moment
u = moments_from_recurrence(rec, 12)
v = v_moments_from_relation(u, fr, eq.induced.beta[0])
ok, bad = verify_functional_relation(u, v, fr, 10)
assert ok and bad is None
print("moment identity verified through degree 10")

# now break one coefficient: both checkers must reject, with named reasons
t = list(rel.t)
t[5] += 1
broken = Relation23(rel.r, rel.s, t)
eq_bad = check_by_equations(rec, broken, 8)
ct_bad = check_by_constants(rec, broken, 8)
assert not eq_bad.is_mops and not ct_bad.is_mops
print("after perturbing t_5:")
for f in eq_bad.failures[:3]:
    print(f"  equation checker failure: {f.condition} at n = {f.n}")
for f in ct_bad.failures[:3]:
    print(f"  constancy checker failure: {f.condition} at n = {f.n}")

print("ok: inverse problem demo passed")
