"""Classifying 2-3 linear structure relations.

A relation Q_n + r_n Q_{n-1} = P_n + s_n P_{n-1} + t_n P_{n-2} between two
monic families can hide a shorter one. The classifier looks at the first
seven free coefficients and names the genuinely irreducible shape; for the
degenerate shapes it also reports the reduced coefficients.
"""

from fractions import Fraction

from mopsrel import Relation23, classify


def rel(r1, r2, r3, s1, s2, t2, t3):
    return Relation23([0, r1, r2, r3], [0, s1, s2, 0], [0, 0, t2, t3])


samples = [
    ("identical families", rel(0, 0, 0, 0, 0, 0, 0)),
    ("one-term against two", rel(0, 2, 0, 1, 0, 2, 0)),
    ("one-term against three", rel(0, 0, 0, 0, 3, 1, 0)),
    ("two-term against one", rel(0, 1, 5, 1, 2, 2, 0)),
    ("two-term against two", rel(0, 0, 1, 1, 0, 1, 0)),
    ("irreducible 2-3", rel(0, 0, 1, 0, 0, 1, 1)),
]

print(f"{'description':<24} {'tag':<16} reduced coefficients")
for label, relation in samples:
    case = classify(relation)
    extra = ""
    if case.reduced:
        parts = []
        for key, seq in sorted(case.reduced.items()):
            shown = [str(v) for v in seq if v is not None]
            parts.append(f"{key} = {shown}")
        extra = "; ".join(parts)
    print(f"{label:<24} {case.tag.value:<16} {extra}")

# spot checks on the reductions the table above prints
assert classify(rel(0, 2, 0, 1, 0, 2, 0)).tag.value == "Type12"
assert classify(rel(0, 0, 0, 0, 3, 1, 0)).reduced["b"][2] == Fraction(1)
assert classify(rel(0, 0, 1, 1, 0, 1, 0)).reduced["c"][2] == Fraction(-1)
assert classify(rel(0, 0, 1, 0, 0, 1, 1)).tag.value == "NonDegenerate23"

# the convention r_0 = s_0 = t_0 = t_1 = 0 is enforced up front
try:
    Relation23([0], [0], [0, 5])
except Exception as exc:
    print(f"rejected malformed input: {exc}")

print("ok: classification demo passed")
