"""Monic polynomials with exact rational coefficients.

Builds a small orthogonal family from its three-term recurrence and shows
that every operation stays inside the rationals: no floats anywhere.
"""

from fractions import Fraction

from mopsrel import Polynomial, RecurrencePair, mops_from_recurrence

# second-kind Chebyshev data: beta_n = 0, gamma_n = 1/4
rec = RecurrencePair([0] * 6, [Fraction(1, 4)] * 6)
family = mops_from_recurrence(rec, 6)

print("P_{n+1} = (x - beta_n) P_n - gamma_n P_{n-1} with beta = 0, gamma = 1/4")
for n, p in enumerate(family):
    print(f"  P_{n} = {p}")

# each member is monic of the right degree
for n, p in enumerate(family):
    assert p.degree == n and p.is_monic

# the recurrence can be replayed by hand with plain arithmetic
x = Polynomial.x()
for n in range(1, 5):
    lhs = family[n + 1]
    rhs = (x - rec.beta[n]) * family[n] - rec.gamma[n - 1] * family[n - 1]
    assert lhs == rhs
print("recurrence replay: exact match for n = 1..4")

# evaluation is Horner on Fractions, so values are exact too
val = family[4](Fraction(1, 3))
print(f"P_4(1/3) = {val}")
assert val == Fraction(1, 81) - Fraction(3, 4) * Fraction(1, 9) + Fraction(1, 16)

print("ok: exact polynomial arithmetic demo passed")
