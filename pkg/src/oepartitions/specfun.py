"""Arbitrary-precision special functions for the asymptotic analysis.

All routines take an explicit working precision in bits and compute
internally with GUARD_BITS extra bits; no ambient global precision is
relied on.  Conventions:

  dilog(x)            Li_2(x) = sum x^n / n^2 on [0, 1)
  jacobi_theta(z,tau) theta(z;tau) = sum_{n in 1/2+Z} e^(pi i n^2 tau + 2 pi i n (z+1/2))
  bessel_i(l, x)      modified Bessel I_l by ascending series, integer order
  wright_p(s, u, M)   (1/2 pi i) int_{1-Mi}^{1+Mi} v^s e^(u(v+1/v)) dv
  eta_pochhammer_eval (q;q)_inf by direct product

The theta convention is the half-integer-characteristic one used in the
odd-even asymptotics; theta(0;tau) = 0 identically for it.
"""

from __future__ import annotations

import mpmath
from mpmath import mp, mpf, mpc, workprec

GUARD_BITS = 32


class DomainError(ValueError):
    pass


class QuadratureError(ArithmeticError):
    pass


def dilog(x, prec=256):
    """Li_2(x) by the defining series; domain [0, 1)."""
    with workprec(prec + GUARD_BITS):
        x = mpf(x)
        if not 0 <= x < 1:
            raise DomainError("dilog is implemented on [0, 1) only")
        if x == 0:
            return mpf(0)
        eps = mpf(2) ** (-(prec + GUARD_BITS))
        total = mpf(0)
        p = mpf(1)
        n = 0
        while True:
            n += 1
            p *= x
            term = p / (n * n)
            total += term
            if term < eps:
                break
    with workprec(prec):
        return +total

def jacobi_theta(z, tau, prec=256):
    """theta(z;tau) summed over half-integers, Gaussian tail below 2^-(prec+guard)."""
    with workprec(prec + GUARD_BITS):
        z = mpc(z)
        tau = mpc(tau)
        y = tau.imag
        if y <= 0:
            raise DomainError("tau must lie in the upper half plane")
        # |term(n)| = e^(-pi n^2 y - 2 pi n Im(z)); choose the cutoff so that
        # pi y n^2 - 2 pi |Im z| n exceeds the target bit budget.
        bits = (prec + GUARD_BITS + 8) * mp.ln(2)
        b = abs(z.imag)
        n_max = (2 * mp.pi * b + mp.sqrt((2 * mp.pi * b) ** 2 + 4 * mp.pi * y * bits)) / (
            2 * mp.pi * y
        )
        n_hi = int(mp.ceil(n_max)) + 1
        total = mpc(0)
        n = mpf("0.5") - n_hi
        for _ in range(2 * n_hi):
            total += mp.e ** (mp.pi * 1j * n * n * tau + 2 * mp.pi * 1j * n * (z + mpf("0.5")))
            n += 1
    with workprec(prec):
        return +total


def bessel_i(order, x, prec=256):
    """Modified Bessel I_order(x) for integer order and x >= 0.

    Negative orders are reduced by I_(-l) = I_l, so every series term is
    positive and there is no cancellation.
    """
    order = abs(int(order))
    with workprec(prec + GUARD_BITS):
        x = mpf(x)
        if x < 0:
            raise DomainError("x must be >= 0")
        if x == 0:
            return mpf(1) if order == 0 else mpf(0)
        half = x / 2
        term = half ** order / mp.factorial(order)
        total = term
        k = 0
        h2 = half * half
        while True:
            k += 1
            term *= h2 / (k * (k + order))
            total += term
            if term < total * mpf(2) ** (-(prec + GUARD_BITS)):
                break
    with workprec(prec):
        return +total


def wright_p(s, u, big_m, prec=256, max_degree=10):
    """Wright's contour function P_s(u) on the segment 1-Mi .. 1+Mi.

    Parameterizing v = 1 + it gives
      P_s(u) = (1/2 pi) int_{-M}^{M} (1+it)^s e^(u(1+it+1/(1+it))) dt,
    evaluated by adaptive Gauss-Legendre quadrature.  Raises QuadratureError
    if the estimated error does not reach 2^(-prec/2) relative.
    """
    with workprec(prec + GUARD_BITS):
        u = mpf(u)
        big_m = mpf(big_m)
        if u <= 0 or big_m <= 0:
            raise DomainError("wright_p needs u > 0 and M > 0")
        s = int(s)

        def integrand(t):
            v = 1 + 1j * t
            return v ** s * mp.e ** (u * (v + 1 / v))

        val, err = mp.quad(
            integrand, [-big_m, 0, big_m], error=True, maxdegree=max_degree
        )
        val = val / (2 * mp.pi)
        err = mpf(err) / (2 * mp.pi)
        if abs(val) > 0 and err > abs(val) * mpf(2) ** (-(prec // 2)):
            raise QuadratureError(
                f"wright_p quadrature error {err} above target for prec={prec}"
            )
    with workprec(prec):
        return +val


def eta_pochhammer_eval(q_point, prec=256):
    """(q;q)_inf = prod (1 - q^k), truncated once factors are within 2^-(prec+guard) of 1."""
    with workprec(prec + GUARD_BITS):
        q = mpc(q_point)
        if abs(q) >= 1:
            raise DomainError("need |q| < 1")
        if q == 0:
            return mpc(1)
        eps = mpf(2) ** (-(prec + GUARD_BITS))
        total = mpc(1)
        qk = mpc(1)
        while True:
            qk *= q
            if abs(qk) < eps:
                break
            total *= 1 - qk
    with workprec(prec):
        return +total


def neg_pochhammer_eval(q_point, prec=256):
    """(-q;q)_inf evaluated as (q^2;q^2)_inf / (q;q)_inf."""
    with workprec(prec + GUARD_BITS):
        q = mpc(q_point)
        val = eta_pochhammer_eval(q * q, prec + GUARD_BITS) / eta_pochhammer_eval(
            q, prec + GUARD_BITS
        )
    with workprec(prec):
        return +val


def euler_eval(tau, prec=256):
    """(q;q)_inf at q = e^(2 pi i tau), routed through the exact eta inversion.

    When Im(-1/tau) > Im(tau) the product is evaluated at q' = e^(-2 pi i/tau)
    via (q;q)_inf = e^(-pi i tau/12 - pi i/(12 tau)) (q';q')_inf / sqrt(-i tau),
    which keeps the factor count O(prec) even as q -> 1.  Both routes are
    exact up to truncation below the precision target.
    """
    with workprec(prec + GUARD_BITS):
        tau = mpc(tau)
        if tau.imag <= 0:
            raise DomainError("tau must lie in the upper half plane")
        inv = -1 / tau
        if inv.imag > tau.imag:
            qp = mp.e ** (2j * mp.pi * inv)
            val = (
                mp.e ** (-mp.pi * 1j * tau / 12 - mp.pi * 1j / (12 * tau))
                / mp.sqrt(-1j * tau)
                * eta_pochhammer_eval(qp, prec + GUARD_BITS)
            )
        else:
            val = eta_pochhammer_eval(mp.e ** (2j * mp.pi * tau), prec + GUARD_BITS)
    with workprec(prec):
        return +val


def eta_inversion_principal(tau, prec=256):
    """Principal term of the (q;q)_inf inversion: e^(-pi i tau/12 - pi i/(12 tau)) / sqrt(-i tau).

    Principal branch of the square root; valid for tau in the upper half
    plane, where Re(-i tau) > 0.
    """
    with workprec(prec + GUARD_BITS):
        tau = mpc(tau)
        if tau.imag <= 0:
            raise DomainError("tau must lie in the upper half plane")
        val = mp.e ** (-mp.pi * 1j * tau / 12 - mp.pi * 1j / (12 * tau)) / mp.sqrt(
            -1j * tau
        )
    with workprec(prec):
        return +val
