"""Independent reference computations used to pin expected test values.

These deliberately use different algorithms from the library: determinants
by exact Gaussian elimination, moments by explicit enumeration of weighted
lattice paths, and orthogonal polynomials by the Hankel determinant
formula. Slow but trustworthy; keep the sizes small.
"""

from fractions import Fraction
from itertools import product

from mopsrel import Polynomial


def det(rows) -> Fraction:
    m = [[Fraction(v) for v in row] for row in rows]
    n = len(m)
    sign = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        for i in range(col + 1, n):
            f = m[i][col] / m[col][col]
            for j in range(col, n):
                m[i][j] -= f * m[col][j]
    out = Fraction(sign)
    for i in range(n):
        out *= m[i][i]
    return out


def hankel_det(moments, k: int) -> Fraction:
    """Delta_k: determinant of the (k+1)x(k+1) moment matrix (mu_{i+j})."""
    return det([[moments[i + j] for j in range(k + 1)] for i in range(k + 1)])


def path_moments(beta, gamma, depth: int) -> list:
    """mu_n by brute-force enumeration of lattice paths of length n from
    level 0 to level 0: an up step weighs 1, a flat step at level l weighs
    beta_l, a down step from level l weighs gamma_l. Exponential in depth."""
    out = [Fraction(1)]
    for n in range(1, depth + 1):
        total = Fraction(0)
        for steps in product((-1, 0, 1), repeat=n):
            lvl = 0
            weight = Fraction(1)
            dead = False
            for i, st in enumerate(steps):
                if st == 1:
                    lvl += 1
                    # a path above the number of remaining steps can
                    # never return to level 0
                    if lvl > n - i - 1:
                        dead = True
                        break
                elif st == 0:
                    weight *= beta[lvl]
                else:
                    if lvl == 0:
                        dead = True
                        break
                    weight *= gamma[lvl - 1]
                    lvl -= 1
            if not dead and lvl == 0:
                total += weight
        out.append(total)
    return out


def op_via_determinants(moments, k: int) -> Polynomial:
    """Monic orthogonal P_k from the determinant formula: the moment
    block rows mu_{i+j} (i < k) bordered by the row [1, x, ..., x^k],
    divided by Delta_{k-1}."""
    if k == 0:
        return Polynomial.one()
    dkm1 = hankel_det(moments, k - 1)
    if dkm1 == 0:
        raise ZeroDivisionError("functional not regular at k-1")
    coeffs = []
    for j in range(k + 1):
        rows = [
            [moments[i + jj] for jj in range(k + 1) if jj != j] for i in range(k)
        ]
        coeffs.append((-1) ** (k + j) * det(rows) / dkm1)
    return Polynomial(coeffs)


def apply_raw(moments, p: Polynomial) -> Fraction:
    return sum((c * moments[k] for k, c in enumerate(p.coeffs)), Fraction(0))
