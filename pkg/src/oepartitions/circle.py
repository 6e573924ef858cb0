"""Wright-style circle method for the odd-even overpartition counts.

The Cauchy integral for OEbar(n) runs over the circle |q| = e^(-2 pi y)
with y = 1/(4 sqrt(3n)), parameterized as q = e^(2 pi i (x + i y)).  The
contour splits into a major arc |x| <= M y, where the generating function
is governed by its dominant pole at q = 1, and the complementary minor
arc, where it is exponentially smaller.  This module evaluates all the
pieces numerically: the full coefficient-recovery integral, the major-arc
integral against the Bessel main term, and the proven minor-arc bound
together with an empirical maximum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy
from mpmath import mp, mpf, mpc, workprec

from . import genfun
from .series import evaluate_at
from .specfun import (
    GUARD_BITS,
    DomainError,
    QuadratureError,
    bessel_i,
    euler_eval,
)


@dataclass(frozen=True)
class ArcGeometry:
    """Contour data: circle radius e^(-2 pi y) with y = 1/(4 sqrt(3n)), cut at |x| = M y."""

    n: int
    big_m: mpf = mpf(6)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("n must be >= 1")
        if self.big_m <= 0:
            raise DomainError("M must be > 0")
        if float(self.big_m) * float(self.y) >= 0.5:
            raise DomainError("major arc would cover the whole circle: need M y < 1/2")

    @property
    def y(self):
        return 1 / (4 * mp.sqrt(3 * self.n))

    @property
    def major_halfwidth(self):
        return mpf(self.big_m) * self.y


@dataclass(frozen=True)
class MinorArcBound:
    """Proven sup bound for |Obar| on the minor arc, and the exponent saving."""

    bound_value: mpf
    exponent_saving: mpf
    clears_threshold: bool


def m_threshold(prec=256):
    """The critical M = sqrt((12/(12-pi^2))^2 - 1) = 5.543... above which the
    minor-arc bound is genuinely smaller than the major-arc main term."""
    with workprec(prec + GUARD_BITS):
        val = mp.sqrt((12 / (12 - mp.pi ** 2)) ** 2 - 1)
    with workprec(prec):
        return +val


def exponent_saving(big_m, prec=256):
    """delta(M) = (1/pi)(1 - 1/sqrt(1+M^2)) - pi/12.

    The minor-arc bound is (1/(y sqrt2)) e^((pi/24 - delta)/y); delta > 0
    exactly when M is above the 5.543... threshold, and delta -> 1/pi - pi/12
    as M -> infinity.
    """
    with workprec(prec + GUARD_BITS):
        m2 = mpf(big_m) ** 2
        val = (1 / mp.pi) * (1 - 1 / mp.sqrt(1 + m2)) - mp.pi / 12
    with workprec(prec):
        return +val


def _bilateral_core(q, prec):
    """sum_{n in Z} (-1)^n q^(n(3n+1)/2) / (1+q^n) = 1/2 + 2 sum_{n>=1} ..."""
    eps = mpf(2) ** (-(prec + 8))
    total = mpf("0.5")
    n = 1
    while True:
        t = (-1) ** n * q ** (n * (3 * n + 1) // 2) / (1 + q ** n)
        total = total + 2 * t
        if abs(t) < eps * max(1, abs(total)):
            break
        n += 1
    return total


def _oebar_eval_tau(tau, prec):
    """Obar(e^(2 pi i tau)) by the product-sum route, eta products by inversion."""
    p1 = euler_eval(tau, prec)
    p2 = euler_eval(2 * tau, prec)
    q = mp.e ** (2j * mp.pi * tau)
    core = _bilateral_core(q, prec)
    return 2 * (p2 / (p1 * p1)) * core  # 2 (-q)_inf/(q)_inf = 2 (q^2;q^2)_inf/(q)_inf^2


def oebar_eval(q_point=None, prec=256, method="product", tau=None):
    """Evaluate Obar(q) for |q| < 1.

    method="product": 2 (-q)_inf / (q)_inf * bilateral Watson sum; efficient
    arbitrarily close to q = 1 and the route used on the circle.  Passing
    tau (with q = e^(2 pi i tau) implied) avoids the principal-branch log.
    method="series": exact truncated coefficient series with the dominant
    growth rate OEbar(k) <= e^(pi sqrt(k/3)) folded into a rigorous tail
    bound; used as the independent cross-check at moderate |q|.
    """
    with workprec(prec + GUARD_BITS):
        if tau is None:
            q = mpc(q_point)
            if abs(q) >= 1:
                raise DomainError("need |q| < 1")
            if q == 0:
                return mpc(1)
            tau = mp.log(q) / (2j * mp.pi)
        else:
            tau = mpc(tau)
            if tau.imag <= 0:
                raise DomainError("tau must lie in the upper half plane")
            q = mp.e ** (2j * mp.pi * tau)
        if method == "series":
            growth_c = float(mp.pi / mp.sqrt(3))  # OEbar(k) <= e^(C sqrt k) dominant growth
            # order large enough that the tail bound is below target
            order = 64
            while True:
                series = genfun.oebar_series_hypergeometric(order)
                try:
                    res = evaluate_at(series, q, prec + GUARD_BITS, growth_c=growth_c)
                except Exception:
                    order *= 2
                    continue
                if res.tail_bound <= max(abs(res.value), mpf(1)) * mpf(2) ** (-prec):
                    val = res.value
                    break
                order *= 2
                if order > 1 << 22:
                    raise QuadratureError("series order budget exhausted")
        elif method == "product":
            val = _oebar_eval_tau(tau, prec + GUARD_BITS)
        else:
            raise ValueError("method must be 'product' or 'series'")
    with workprec(prec):
        return +val


def f_near_one(tau, prec=256):
    """Taylor anchor of the mock theta factor near q = 1.

    Returns (4/3, |f(q) - 4/3|): the limiting value f(1) = sum 4^-n and the
    measured deviation at q = e^(2 pi i tau).
    """
    with workprec(prec + GUARD_BITS):
        tau = mpc(tau)
        if tau.imag <= 0:
            raise DomainError("tau must lie in the upper half plane")
        q = mp.e ** (2j * mp.pi * tau)
        anchor = mpf(4) / 3
        # Watson: f(q) = (2/(q;q)_inf) sum_{n in Z} (-1)^n q^(n(3n+1)/2)/(1+q^n)
        fval = 2 * _bilateral_core(q, prec + GUARD_BITS) / euler_eval(
            tau, prec + GUARD_BITS
        )
        deviation = abs(fval - anchor)
    with workprec(prec):
        return +anchor, +deviation


def cauchy_full_integral(n, samples=None, prec=256, order=None):
    """Recover OEbar(n) from the Cauchy integral by DFT on the circle.

    Samples the exact truncated coefficient series at K equispaced points on
    the circle of radius e^(-2 pi y); with K > order the discrete sum equals
    the coefficient of the truncation exactly, so the residual against the
    nearest integer is a pure precision health metric.  Raises if the
    residual exceeds 0.25.
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    if n == 0:
        return 1, mpf(0)
    if order is None:
        order = max(2 * n, n + 32)
    series = genfun.oebar_series_hypergeometric(order)
    if samples is None:
        samples = 1
        while samples <= order:
            samples *= 2
    if samples <= order:
        raise DomainError("need samples > series order for exact discrete recovery")
    with workprec(prec + GUARD_BITS):
        # only the radius is needed here, not the arc cut
        y = 1 / (4 * mp.sqrt(3 * n))
        r = mp.e ** (-2 * mp.pi * y)
        total = mpc(0)
        for k in range(samples):
            z = r * mp.e ** (2j * mp.pi * k / samples)
            acc = mpc(0)
            for c in reversed(series.coeffs):
                acc = acc * z + c
            total += acc * mp.e ** (-2j * mp.pi * n * k / samples)
        total = total / samples / r ** n
        nearest = int(mp.nint(total.real))
        residual = abs(total - nearest)
        if residual > 0.25:
            raise QuadratureError(
                f"rounding residual {residual} too large: raise prec or order"
            )
    with workprec(prec):
        return nearest, +residual


def _gauss_legendre_nodes(npts):
    x, w = numpy.polynomial.legendre.leggauss(npts)
    return [mpf(float(v)) for v in x], [mpf(float(v)) for v in w]


def _composite_quad(f, a, b, rel_target, nodes_per_panel=24, max_doublings=8,
                    initial_panels=4):
    """Composite Gauss-Legendre quadrature with panel doubling.

    Doubles the panel count until two successive values agree to rel_target;
    returns (value, estimated_error).
    """
    x0, w0 = _gauss_legendre_nodes(nodes_per_panel)
    panels = initial_panels
    prev = None
    for _ in range(max_doublings):
        h = (b - a) / panels
        total = mpc(0)
        for p in range(panels):
            lo = a + p * h
            mid = lo + h / 2
            half = h / 2
            for xi, wi in zip(x0, w0):
                total += wi * f(mid + half * xi)
            # scale at the end of each panel is uniform
        total *= h / 2
        if prev is not None:
            err = abs(total - prev)
            if err <= rel_target * max(abs(total), mpf(1)):
                return total, err
        prev = total
        panels *= 2
    return total, abs(total - prev) if prev is not total else mpf("inf")


def major_arc_integral(geom, prec=128, rel_target=None):
    """I_1: the major-arc piece of the Cauchy integral, by panel quadrature.

    I_1 = int_{|x| <= M y} Obar(e^(2 pi i x - 2 pi y)) e^(-2 pi i n x + pi sqrt n/(2 sqrt 3)) dx.
    """
    if rel_target is None:
        rel_target = mpf(10) ** -8
    with workprec(prec + GUARD_BITS):
        n = geom.n
        y = geom.y
        w = geom.major_halfwidth
        amp = mp.e ** (mp.pi * mp.sqrt(n) / (2 * mp.sqrt(3)))

        def integrand(x):
            v = _oebar_eval_tau(x + 1j * y, prec + GUARD_BITS)
            return v * mp.e ** (-2j * mp.pi * n * x) * amp

        # panels sized so each covers at most ~2 oscillations of e^(-2 pi i n x)
        osc = max(4, int(2 * w * n) + 1)
        val, err = _composite_quad(
            integrand, -w, w, rel_target, initial_panels=osc
        )
    with workprec(prec):
        return +val


def minor_arc_integral(geom, prec=96, rel_target=None):
    """I_2: the minor-arc remainder, integrated numerically on both sides."""
    if rel_target is None:
        rel_target = mpf(10) ** -6
    with workprec(prec + GUARD_BITS):
        n = geom.n
        y = geom.y
        w = geom.major_halfwidth
        amp = mp.e ** (mp.pi * mp.sqrt(n) / (2 * mp.sqrt(3)))

        def integrand(x):
            v = _oebar_eval_tau(x + 1j * y, prec + GUARD_BITS)
            return v * mp.e ** (-2j * mp.pi * n * x) * amp

        osc = max(4, int((mpf("0.5") - w) * n) + 1)
        right, err_r = _composite_quad(integrand, w, mpf("0.5"), rel_target,
                                       initial_panels=osc)
        left, err_l = _composite_quad(integrand, mpf("-0.5"), -w, rel_target,
                                      initial_panels=osc)
        val = left + right
    with workprec(prec):
        return +val


def main_term(n, prec=256):
    """Main term of I_1: returns (exponential form, Bessel form).

    exponential: e^(pi sqrt(n/3)) / (3^(5/4) n^(3/4))
    Bessel:      (pi sqrt2 / (3 sqrt(3n))) I_(-1)(pi sqrt n / sqrt 3)
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    with workprec(prec + GUARD_BITS):
        nn = mpf(n)
        expo = mp.e ** (mp.pi * mp.sqrt(nn / 3)) / (mpf(3) ** mpf("1.25") * nn ** mpf("0.75"))
        bess = (
            mp.pi * mp.sqrt(2) / (3 * mp.sqrt(3 * nn))
            * bessel_i(-1, mp.pi * mp.sqrt(nn) / mp.sqrt(3), prec + GUARD_BITS)
        )
    with workprec(prec):
        return +expo, +bess


def minor_arc_bound(geom, prec=256):
    """Proven sup bound on the minor arc and the exponent saving relative to
    the major-arc growth e^(pi/(24 y)).

    bound  = (1/(y sqrt2)) exp[(1/y)(pi/8 - (1/pi)(1 - 1/sqrt(1+M^2)))]
    saving = (1/pi)(1 - 1/sqrt(1+M^2)) - pi/12,
    positive exactly when M clears the 5.543... threshold (then the bound is
    (1/(y sqrt2)) e^((pi/24 - saving)/y), genuinely below the main term).
    """
    with workprec(prec + GUARD_BITS):
        y = geom.y
        m2 = mpf(geom.big_m) ** 2
        cut = (1 / mp.pi) * (1 - 1 / mp.sqrt(1 + m2))
        bound = 1 / (y * mp.sqrt(2)) * mp.e ** ((mp.pi / 8 - cut) / y)
        saving = exponent_saving(geom.big_m, prec + GUARD_BITS)
        clears = mpf(geom.big_m) > m_threshold(prec + GUARD_BITS)
    with workprec(prec):
        return MinorArcBound(
            bound_value=+bound, exponent_saving=+saving, clears_threshold=clears
        )


def minor_arc_empirical_max(geom, grid=200, prec=96):
    """Max of |Obar| sampled on the minor arc M y < x <= 1/2 (symmetric in x)."""
    if grid < 2:
        raise DomainError("grid must be >= 2")
    with workprec(prec + GUARD_BITS):
        y = geom.y
        w = geom.major_halfwidth
        best = mpf(0)
        for k in range(grid):
            x = w + (mpf("0.5") - w) * (k + 1) / grid
            best = max(best, abs(_oebar_eval_tau(x + 1j * y, prec + GUARD_BITS)))
    with workprec(prec):
        return +best


def circle_report(n, big_m=6, prec=128, grid=100):
    """End-to-end circle-method report for one n, as a plain dict (JSON-ready)."""
    geom = ArcGeometry(n=n, big_m=mpf(big_m))
    exact = genfun.oebar_series_hypergeometric(n).coefficient(n)
    recovered, residual = cauchy_full_integral(n, prec=max(prec, 160))
    i1 = major_arc_integral(geom, prec=prec)
    mt_exp, mt_bess = main_term(n, prec=prec)
    bound = minor_arc_bound(geom, prec=prec)
    emp = minor_arc_empirical_max(geom, grid=grid, prec=min(prec, 96))
    return {
        "n": n,
        "M": float(big_m),
        "y": float(geom.y),
        "I1": float(i1.real),
        "main_term": float(mt_exp),
        "main_term_bessel": float(mt_bess),
        "ratio": float(i1.real / mt_exp),
        "minor_bound": float(bound.bound_value),
        "exponent_saving": float(bound.exponent_saving),
        "clears_threshold": bound.clears_threshold,
        "empirical_max": float(emp),
        "recovered_coefficient": recovered,
        "exact_coefficient": exact,
        "recovery_residual": float(residual),
    }
