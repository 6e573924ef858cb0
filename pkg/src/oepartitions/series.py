"""Exact truncated formal power series in q over arbitrary-precision integers.

A PowerSeries of order N stores coefficients c_0..c_N and represents the
series exactly modulo q^(N+1).  All ring operations are exact; binary
operations truncate to the smaller operand order.  This module is the
backbone of every identity check in the package: two series agree iff
their coefficient tuples agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpf, mpc, workprec

GUARD_BITS = 32


class SeriesError(ValueError):
    pass


class PowerSeries:
    """Truncated power series sum_{k=0}^{order} coeffs[k] q^k (exact mod q^(order+1))."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if not coeffs:
            raise SeriesError("a PowerSeries needs at least the constant term")
        self.coeffs = coeffs

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order):
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order):
        return cls((1,) + (0,) * order)

    @classmethod
    def monomial(cls, exponent, order, coefficient=1):
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coefficient
        return cls(c)

    def coefficient(self, n):
        if not 0 <= n <= self.order:
            raise SeriesError(f"coefficient {n} not determined at order {self.order}")
        return self.coeffs[n]

    def truncate(self, order):
        if order >= self.order:
            return self
        return PowerSeries(self.coeffs[: order + 1])

    def shift(self, k):
        """Multiply by q^k, keeping the same order."""
        if k == 0:
            return self
        n = self.order
        return PowerSeries((0,) * min(k, n + 1) + self.coeffs[: n + 1 - k])

    def __eq__(self, other):
        return isinstance(other, PowerSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = min(self.order, other.order)
        return PowerSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other):
        n = min(self.order, other.order)
        return PowerSeries([self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return PowerSeries([other * c for c in self.coeffs])
        # Schoolbook Cauchy product; O(N^2) is fine at the orders used here.
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return PowerSeries(out)

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse mod q^(order+1); constant term must be +-1."""
        a = self.coeffs
        if a[0] not in (1, -1):
            raise SeriesError("series is not invertible: constant term must be +1 or -1")
        n = self.order
        u = a[0]
        b = [0] * (n + 1)
        b[0] = u
        for k in range(1, n + 1):
            s = sum(a[j] * b[k - j] for j in range(1, k + 1) if a[j])
            b[k] = -u * s
        return PowerSeries(b)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"PowerSeries([{head}{tail}], order={self.order})"


@dataclass(frozen=True)
class EvalResult:
    """Value of a truncated series at a point plus a rigorous tail bound."""

    value: mpc
    tail_bound: mpf


def qpochhammer(start_exp, step, m, order):
    """(q^start_exp; q^step)_m = prod_{j=1}^m (1 - q^(start_exp+(j-1)step)), mod q^(order+1).

    m may be None (or math.inf) for the infinite product, which terminates
    once factors are congruent to 1 mod q^(order+1).
    """
    if start_exp < 1:
        raise SeriesError("start_exp must be >= 1 (factor exponents must be positive)")
    if step < 1:
        raise SeriesError("step must be >= 1")
    c = [0] * (order + 1)
    c[0] = 1
    j = 0
    e = start_exp
    # Factors with exponent > order are = 1 mod q^(order+1) and can be skipped.
    while e <= order and (m is None or m == float("inf") or j < m):
        _mul_one_minus_qk(c, e)
        j += 1
        e += step
    return PowerSeries(c)


def neg_pochhammer(start_exp, m, order):
    """(-q^start_exp; q)_m = prod_{j=1}^m (1 + q^(start_exp+j-1)), mod q^(order+1).

    start_exp = 0 gives (-1; q)_m, whose leading factor is (1 + 1) = 2.
    """
    if start_exp < 0:
        raise SeriesError("start_exp must be >= 0")
    c = [0] * (order + 1)
    c[0] = 1
    j = 0
    e = start_exp
    while m is None or m == float("inf") or j < m:
        if e == 0:
            for k in range(order + 1):
                c[k] *= 2
        elif e <= order:
            _mul_one_plus_qk(c, e)
        else:
            if m is None or m == float("inf"):
                break
            # factor = 1 mod q^(order+1); skip the rest in one go
            break
        j += 1
        e += 1
    return PowerSeries(c)


def evaluate_at(series, point, prec, growth_c=None):
    """Exact partial sum of the series at |point| < 1, with a tail bound.

    growth_c = None asserts the series is a polynomial (all omitted
    coefficients vanish), so the tail bound is 0.  Otherwise growth_c = C
    declares |c_k| <= e^(C sqrt(k)) for k > order, and the tail
    |sum_{k>N} c_k point^k| is bounded using sqrt(k) <= sqrt(N) + (k-N)/(2 sqrt(N)).
    """
    with workprec(prec + GUARD_BITS):
        z = mpc(point)
        t = abs(z)
        if t >= 1:
            raise SeriesError("evaluation point must satisfy |q| < 1")
        # Horner, highest coefficient first
        acc = mpc(0)
        for c in reversed(series.coeffs):
            acc = acc * z + c
        n = series.order
        if growth_c is None:
            tail = mpf(0)
        else:
            c_growth = mpf(growth_c)
            if c_growth < 0:
                raise SeriesError("growth constant must be >= 0")
            if n == 0:
                rho = mp.e ** c_growth  # sqrt(k) <= k for k >= 1
                peak = mpf(1)
            else:
                rho = mp.e ** (c_growth / (2 * mp.sqrt(n)))
                peak = mp.e ** (c_growth * mp.sqrt(n))
            if rho * t >= 1:
                raise SeriesError(
                    "tail bound diverges: increase the order or lower the growth constant"
                )
            tail = peak * (rho * t) * (t ** n) / (1 - rho * t)
    with workprec(prec):
        return EvalResult(value=+acc, tail_bound=+tail)


# ---------------------------------------------------------------------------
# In-place coefficient kernels.  These implement multiplication/division by
# the sparse binomials (1 +- q^k) in O(N) and are what keeps the generating
# function builders at O(N^(3/2)) overall.

def _mul_one_minus_qk(c, k):
    for i in range(len(c) - 1, k - 1, -1):
        c[i] -= c[i - k]


def _mul_one_plus_qk(c, k):
    for i in range(len(c) - 1, k - 1, -1):
        c[i] += c[i - k]


def _div_one_minus_qk(c, k):
    for i in range(k, len(c)):
        c[i] += c[i - k]


def _div_one_plus_qk(c, k):
    for i in range(k, len(c)):
        c[i] -= c[i - k]
