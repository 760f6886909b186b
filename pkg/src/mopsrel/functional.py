"""Moment linear functionals and three-term recurrences, all in exact
rational arithmetic.

A functional is represented by its truncated moment sequence
(mu_0, ..., mu_N); N is the depth. A monic orthogonal polynomial sequence
(MOPS) is represented by its recurrence coefficients

    P_{n+1} = (x - beta_n) P_n - gamma_n P_{n-1},   P_0 = 1, P_{-1} = 0,

stored as beta_0..beta_m and gamma_1..gamma_k. Orthogonality of the family
w.r.t. a functional with mu_0 = 1 gives <u, P_n^2> = gamma_1 ... gamma_n.

Two directions are provided. moments_from_recurrence walks weighted lattice
paths on the coefficient array, so moments up to depth N need only the
coefficients up to index N//2. recurrence_from_moments runs the classical
quotient-difference style forward recursion on the mixed products
sigma_{k,l} = <u, P_k x^l>; it stops at the first vanishing leading
principal Hankel determinant and reports how far regularity was certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import DepthError, DomainError, FormatError
from .poly import Polynomial
from .rational import as_scalar, format_rational


class MomentFunctional:
    """Linear functional known through moments mu_0..mu_depth."""

    __slots__ = ("moments",)

    def __init__(self, moments: Iterable):
        self.moments = tuple(as_scalar(m) for m in moments)
        if not self.moments:
            raise FormatError("a moment functional needs at least mu_0")

    @property
    def depth(self) -> int:
        return len(self.moments) - 1

    @property
    def is_normalized(self) -> bool:
        return self.moments[0] == 1

    def apply(self, p: Polynomial) -> Fraction:
        """<u, p>. Requires deg p <= depth."""
        if p.degree > self.depth:
            raise DepthError(
                f"apply needs moments through {p.degree}, have depth {self.depth}"
            )
        return sum((c * self.moments[k] for k, c in enumerate(p.coeffs)), Fraction(0))

    def scale(self, factor) -> "MomentFunctional":
        k = as_scalar(factor)
        return MomentFunctional([k * m for m in self.moments])

    def normalized(self) -> "MomentFunctional":
        if self.moments[0] == 0:
            raise DomainError("cannot normalize: mu_0 = 0")
        return self.scale(1 / self.moments[0])

    def left_multiply(self, phi: Polynomial) -> "MomentFunctional":
        """The functional phi*u defined by <phi u, p> = <u, phi p>.

        The result is known through depth - deg(phi).
        """
        if phi.is_zero:
            raise DomainError("left_multiply by the zero polynomial is degenerate")
        d = phi.degree
        if d > self.depth:
            raise DepthError(
                f"left_multiply by degree {d} needs depth >= {d}, have {self.depth}"
            )
        out = []
        for n in range(self.depth - d + 1):
            out.append(
                sum(
                    (c * self.moments[n + k] for k, c in enumerate(phi.coeffs)),
                    Fraction(0),
                )
            )
        return MomentFunctional(out)

    def add_point_mass(self, xi, mass) -> "MomentFunctional":
        """u + mass * delta_xi, where <delta_xi, p> = p(xi)."""
        x0 = as_scalar(xi)
        m = as_scalar(mass)
        out = []
        power = Fraction(1)
        for mu in self.moments:
            out.append(mu + m * power)
            power *= x0
        return MomentFunctional(out)

    def divide_by_linear(self, c, free_first_moment) -> "MomentFunctional":
        """A functional sigma with (x - c) sigma = u.

        The division has a one-parameter family of solutions; the free
        parameter is sigma's first moment. nu_{n+1} = c nu_n + mu_n, so the
        result is known one level deeper than u.
        """
        c0 = as_scalar(c)
        out = [as_scalar(free_first_moment)]
        for mu in self.moments:
            out.append(c0 * out[-1] + mu)
        return MomentFunctional(out)

    def truncated(self, depth: int) -> "MomentFunctional":
        if depth < 0 or depth > self.depth:
            raise DepthError(f"cannot truncate depth {self.depth} to {depth}")
        return MomentFunctional(self.moments[: depth + 1])

    def __eq__(self, other) -> bool:
        return isinstance(other, MomentFunctional) and self.moments == other.moments

    def to_json(self) -> dict:
        return {"moments": [format_rational(m) for m in self.moments]}

    @classmethod
    def from_json(cls, data) -> "MomentFunctional":
        if not isinstance(data, dict) or "moments" not in data:
            raise FormatError('moment functional JSON must be {"moments": [...]}')
        return cls(data["moments"])

    def __repr__(self) -> str:
        return f"MomentFunctional(depth={self.depth})"


class RecurrencePair:
    """Recurrence coefficient arrays beta_0.. and gamma_1.. .

    gamma is indexed from 1, so gamma_n lives at gamma[n-1]. The container
    itself does not insist on gamma_n != 0; operations that assume a regular
    functional check the range they use.
    """

    __slots__ = ("beta", "gamma")

    def __init__(self, beta: Iterable, gamma: Iterable):
        self.beta = tuple(as_scalar(b) for b in beta)
        self.gamma = tuple(as_scalar(g) for g in gamma)

    def beta_at(self, n: int) -> Fraction:
        if n < 0 or n >= len(self.beta):
            raise DepthError(f"beta_{n} not available (have beta_0..beta_{len(self.beta) - 1})")
        return self.beta[n]

    def gamma_at(self, n: int) -> Fraction:
        if n < 1 or n > len(self.gamma):
            raise DepthError(f"gamma_{n} not available (have gamma_1..gamma_{len(self.gamma)})")
        return self.gamma[n - 1]

    def require(self, beta_through: int, gamma_through: int) -> None:
        if len(self.beta) <= beta_through:
            raise DepthError(
                f"need beta through index {beta_through}, have {len(self.beta) - 1}"
            )
        if len(self.gamma) < gamma_through:
            raise DepthError(
                f"need gamma through index {gamma_through}, have {len(self.gamma)}"
            )

    def first_zero_gamma(self) -> Optional[int]:
        for i, g in enumerate(self.gamma):
            if g == 0:
                return i + 1
        return None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RecurrencePair)
            and self.beta == other.beta
            and self.gamma == other.gamma
        )

    def to_json(self) -> dict:
        return {
            "beta": [format_rational(b) for b in self.beta],
            "gamma": [format_rational(g) for g in self.gamma],
        }

    @classmethod
    def from_json(cls, data) -> "RecurrencePair":
        if not isinstance(data, dict) or "beta" not in data or "gamma" not in data:
            raise FormatError('recurrence JSON must be {"beta": [...], "gamma": [...]}')
        return cls(data["beta"], data["gamma"])

    def __repr__(self) -> str:
        return f"RecurrencePair(beta[{len(self.beta)}], gamma[{len(self.gamma)}])"


def mops_from_recurrence(rec: RecurrencePair, count: int) -> list[Polynomial]:
    """The first ``count`` polynomials P_0..P_{count-1} of the recurrence."""
    if count < 1:
        raise DepthError("count must be >= 1")
    if count >= 2:
        rec.require(count - 2, max(count - 2, 0))
    polys = [Polynomial.one()]
    prev = Polynomial.zero()
    x = Polynomial.x()
    for n in range(count - 1):
        shift = x - Polynomial.constant(rec.beta[n])
        nxt = shift * polys[-1]
        if n >= 1:
            nxt = nxt - rec.gamma[n - 1] * prev
        prev = polys[-1]
        polys.append(nxt)
    return polys


def check_simple_set(polys: list[Polynomial]) -> None:
    """Validate that polys[n] is monic of degree n for every n."""
    for n, p in enumerate(polys):
        if p.degree != n or not p.is_monic:
            raise DomainError(f"entry {n} is not monic of degree {n}")


def moments_from_recurrence(rec: RecurrencePair, depth: int) -> MomentFunctional:
    """Moments mu_0..mu_depth of the normalized functional (mu_0 = 1) whose
    MOPS has the given recurrence.

    Uses the weighted lattice-path recursion: if x^n = sum_k c_k P_k then
    c'_j = c_{j-1} + beta_j c_j + gamma_{j+1} c_{j+1} gives the expansion of
    x^{n+1}, and mu_n is the P_0 component. Components above level depth//2
    can never return to level 0 in time, so only beta_0..beta_{depth//2} and
    gamma_1..gamma_{depth//2} are consumed.
    """
    if depth < 0:
        raise DepthError("depth must be >= 0")
    cap = depth // 2
    rec.require(cap, cap)
    for n in range(1, cap + 1):
        if rec.gamma[n - 1] == 0:
            raise DomainError(f"gamma_{n} = 0: recurrence not regular through {cap}")
    comp = [Fraction(0)] * (cap + 2)
    comp[0] = Fraction(1)
    moments = [Fraction(1)]
    for _ in range(depth):
        nxt = [Fraction(0)] * (cap + 2)
        for j in range(cap + 1):
            val = rec.beta[j] * comp[j] if j < len(rec.beta) else Fraction(0)
            if j >= 1:
                val += comp[j - 1]
            if j + 1 <= cap:
                val += rec.gamma[j] * comp[j + 1]
            nxt[j] = val
        comp = nxt
        moments.append(comp[0])
    return MomentFunctional(moments)


@dataclass(frozen=True)
class RecurrenceReport:
    """Result of recovering a recurrence from moments.

    regular_through: largest k with Delta_0..Delta_k all nonzero, where
    Delta_k is the (k+1)x(k+1) leading principal Hankel determinant; -1 when
    already Delta_0 = mu_0 = 0. first_vanishing is the index of the first
    zero determinant if one was met, None otherwise. checked_through is how
    far the determinants could be examined given the depth.
    """

    rec: RecurrencePair
    regular_through: int
    first_vanishing: Optional[int]
    checked_through: int


def recurrence_from_moments(f: MomentFunctional) -> RecurrenceReport:
    """Recover beta/gamma from moments by the forward sigma recursion.

    sigma_{k,l} = <u, P_k x^l> obeys
        sigma_{k,l} = sigma_{k-1,l+1} - beta_{k-1} sigma_{k-1,l}
                      - gamma_{k-1} sigma_{k-2,l},
    and sigma_{k,k} = Delta_k / Delta_{k-1}, which the recursion watches for
    zeros instead of evaluating determinants.
    """
    mu = f.moments
    n_max = f.depth
    k_max = n_max // 2
    beta: list[Fraction] = []
    gamma: list[Fraction] = []
    if mu[0] == 0:
        return RecurrenceReport(
            rec=RecurrencePair((), ()),
            regular_through=-1,
            first_vanishing=0,
            checked_through=0,
        )
    # row[i] holds sigma_{k, k+i}
    row_prev: list[Fraction] = []
    row = list(mu)
    if n_max >= 1:
        beta.append(mu[1] / mu[0])
    for k in range(1, k_max + 1):
        width = n_max - 2 * k
        nxt = []
        for j in range(width + 1):
            val = row[j + 2] - beta[k - 1] * row[j + 1]
            if k >= 2:
                val -= gamma[k - 2] * row_prev[j + 2]
            nxt.append(val)
        if nxt[0] == 0:
            return RecurrenceReport(
                rec=RecurrencePair(beta[:k], gamma),
                regular_through=k - 1,
                first_vanishing=k,
                checked_through=k,
            )
        gamma.append(nxt[0] / row[0])
        if width >= 1:
            beta.append(nxt[1] / nxt[0] - row[1] / row[0])
        row_prev, row = row, nxt
    return RecurrenceReport(
        rec=RecurrencePair(beta, gamma),
        regular_through=k_max,
        first_vanishing=None,
        checked_through=k_max,
    )


def norm_squared(rec: RecurrencePair, n: int, mu0=1) -> Fraction:
    """<u, P_n^2> = mu_0 * gamma_1 ... gamma_n for the recurrence's family."""
    if n < 0:
        raise DepthError("n must be >= 0")
    if n > 0:
        rec.require(0, n)
    acc = as_scalar(mu0)
    for k in range(1, n + 1):
        acc *= rec.gamma[k - 1]
    return acc
