"""Moment functionals and the two directions of the Hankel dictionary.

A regular linear functional is determined by its moment list. From a
recurrence we can tabulate moments; from moments we can recover the
recurrence and read off regularity from the principal Hankel minors.
"""

from mopsrel import (
    JacobiParams,
    MomentFunctional,
    Polynomial,
    jacobi_recurrence,
    moments_from_recurrence,
    mops_from_recurrence,
    norm_squared,
    recurrence_from_moments,
)

params = JacobiParams("1/2", "1/2")
rec = jacobi_recurrence(params, 8)
u = moments_from_recurrence(rec, 12)
print(f"first moments of the ({params.alpha}, {params.beta}) weight:")
print(" ", ", ".join(str(m) for m in u.moments[:7]))

# the moments determine the recurrence right back
report = recurrence_from_moments(u)
assert report.first_vanishing is None
assert report.rec.beta[:5] == rec.beta[:5]
assert report.rec.gamma[:5] == rec.gamma[:5]
print("moments -> recurrence round trip: beta and gamma recovered exactly")

# orthogonality in action: <u, P_n P_m> vanishes off the diagonal and the
# diagonal entries are the gamma products
family = mops_from_recurrence(rec, 6)
for n in range(6):
    for m in range(6):
        value = u.apply(family[n] * family[m])
        if n != m:
            assert value == 0
        else:
            assert value == norm_squared(rec, n)
print("orthogonality table (6 x 6): diagonal norms, zero elsewhere")

# functionals form a module over polynomials: left multiplication shifts
# moments, division by a linear factor is its one-parameter inverse
shifted = u.left_multiply(Polynomial([1, 1]))  # (1 + x) u
back = shifted.divide_by_linear(-1, 1)
assert back.moments[: u.depth + 1] == u.moments[: u.depth + 1]
print("(1+x)u then division by (x+1) with the right free moment returns u")

# a functional that is not regular: a pure point mass
delta = MomentFunctional([1] * 9)
dreport = recurrence_from_moments(delta)
print(f"point mass at 1: regular through {dreport.regular_through}, "
      f"first vanishing Hankel minor at {dreport.first_vanishing}")
assert dreport.regular_through == 0
assert dreport.first_vanishing == 1

print("ok: moment functional demo passed")
