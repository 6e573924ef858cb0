"""Generating functions for odd-even partitions and overpartitions.

Everything here is an exact truncated PowerSeries.  The hypergeometric
sums are built incrementally: the m-th summand is obtained from the
(m-1)-st by multiplying with a sparse binomial ratio, so building a series
to order N costs O(N^(3/2)) integer operations instead of O(N^2) per term.
That is what makes the desk-scale asymptotic checks (orders 10^4 and up)
cheap.

Series implemented:
  oe_series             O(q)  = sum_m q^(m(m+1)/2) / (q^2;q^2)_m
  sj_series             S_j   = the m = j (mod 4) subsum of O(q)
  parity_split          (O_e, O_o) = (S_0+S_3, S_1+S_2)
  f_mock_series         f(q)  = sum_n q^(n^2) / (-q;q)_n^2   (third order mock theta)
  watson_core           2 sum_{n in Z} (-1)^n q^(n(3n+1)/2) / (1+q^n)
  oebar_series_*        Obar(q) = sum_m (-1;q)_m q^(m(m+1)/2) / (q^2;q^2)_m
                                = (-q;q)_inf * f(q)
"""

from __future__ import annotations

from functools import lru_cache

from .series import (
    PowerSeries,
    qpochhammer,
    neg_pochhammer,
    _div_one_minus_qk,
    _div_one_plus_qk,
    _mul_one_plus_qk,
)


def _sum_terms(order, term_update, classes=False):
    """Accumulate summands t_0 = 1, t_m = term_update(t_{m-1}, m).

    term_update mutates and returns the coefficient list, or returns None once
    the summand vanishes mod q^(order+1).  With classes=True, also return the
    four m (mod 4) class subsums.
    """
    total = [0] * (order + 1)
    per_class = [[0] * (order + 1) for _ in range(4)] if classes else None
    t = [0] * (order + 1)
    t[0] = 1
    m = 0
    while t is not None:
        for k in range(order + 1):
            total[k] += t[k]
        if classes:
            row = per_class[m % 4]
            for k in range(order + 1):
                row[k] += t[k]
        m += 1
        t = term_update(t, m)
    if classes:
        return PowerSeries(total), tuple(PowerSeries(c) for c in per_class)
    return PowerSeries(total)


def _oe_update(t, m):
    # t_m = t_{m-1} * q^m / (1 - q^(2m));  q-exponent of t_m starts at m(m+1)/2
    order = len(t) - 1
    if m * (m + 1) // 2 > order:
        return None
    t = [0] * min(m, order + 1) + t[: order + 1 - m]
    _div_one_minus_qk(t, 2 * m)
    return t


def _oebar_update(t, m):
    # extra factor (1 + q^(m-1)) from (-1;q)_m / (-1;q)_{m-1}; at m=1 it is 2
    order = len(t) - 1
    if m * (m + 1) // 2 > order:
        return None
    if m == 1:
        t = [2 * c for c in t]
    else:
        t = list(t)
        _mul_one_plus_qk(t, m - 1)
    return _oe_update(t, m)


@lru_cache(maxsize=32)
def oe_series(order):
    """Generating function of OE(n), exact to the given order."""
    return _sum_terms(order, _oe_update)


@lru_cache(maxsize=8)
def _oe_series_with_classes(order):
    return _sum_terms(order, _oe_update, classes=True)


def sj_series(j, order):
    """S_j: the m = j (mod 4) subsum of the OE generating function."""
    if j not in (0, 1, 2, 3):
        raise ValueError("parity class j must be in {0,1,2,3}")
    return _oe_series_with_classes(order)[1][j]


def parity_split(order):
    """(O_e, O_o): even- and odd-exponent parts of the OE generating function."""
    _, (s0, s1, s2, s3) = _oe_series_with_classes(order)
    return s0 + s3, s1 + s2


@lru_cache(maxsize=32)
def oebar_series_hypergeometric(order):
    """Generating function of OEbar(n) as the (-1;q)_m hypergeometric sum."""
    return _sum_terms(order, _oebar_update)


@lru_cache(maxsize=32)
def f_mock_series(order):
    """Ramanujan's third order mock theta function f(q) = sum q^(n^2)/(-q;q)_n^2."""
    total = [0] * (order + 1)
    t = [0] * (order + 1)
    t[0] = 1
    n = 0
    while n * n <= order:
        for k in range(order + 1):
            total[k] += t[k]
        n += 1
        if n * n > order:
            break
        # t_n = t_{n-1} * q^(2n-1) / (1 + q^n)^2
        s = 2 * n - 1
        t = [0] * min(s, order + 1) + t[: order + 1 - s]
        _div_one_plus_qk(t, n)
        _div_one_plus_qk(t, n)
    return PowerSeries(total)


@lru_cache(maxsize=32)
def watson_core(order):
    """2 sum_{n in Z} (-1)^n q^(n(3n+1)/2) / (1+q^n), as an exact series.

    Uses the unilateral folding sum_{n in Z} = 1/2 + 2 sum_{n>=1} (the n and
    -n terms coincide), so the result is 1 + 4 sum_{n>=1} with each
    1/(1+q^n) expanded geometrically.  Watson's identity states this equals
    f(q) (q;q)_inf.
    """
    total = [0] * (order + 1)
    total[0] = 1
    n = 1
    while n * (3 * n + 1) // 2 <= order:
        base = n * (3 * n + 1) // 2
        sign = 4 if n % 2 == 0 else -4
        j = 0
        while base + j * n <= order:
            total[base + j * n] += sign if j % 2 == 0 else -sign
            j += 1
        n += 1
    return PowerSeries(total)


@lru_cache(maxsize=32)
def oebar_series_product(order):
    """OEbar generating function via the mixed-mock factorization (-q;q)_inf f(q)."""
    return neg_pochhammer(1, None, order) * f_mock_series(order)


def euler_phi_series(order):
    """(q;q)_inf truncated: the pentagonal-number series."""
    return qpochhammer(1, 1, None, order)


# ---------------------------------------------------------------------------
# Classical identity suite

def _sum_simple(order, numerator_exp, denom_step):
    """1 + sum_{n>=1} q^(numerator_exp(n)) / prod_{j<=n}(1 - q^(denom_step*j))."""
    total = [0] * (order + 1)
    t = [0] * (order + 1)
    t[0] = 1
    n = 0
    while numerator_exp(n) <= order:
        for k in range(order + 1):
            total[k] += t[k]
        n += 1
        shift = numerator_exp(n) - numerator_exp(n - 1)
        if numerator_exp(n) > order:
            break
        t = [0] * min(shift, order + 1) + t[: order + 1 - shift]
        _div_one_minus_qk(t, denom_step * n)
    return PowerSeries(total)


def _product(order, factor_exps, inverse):
    c = [0] * (order + 1)
    c[0] = 1
    for e in factor_exps:
        if e > order:
            break
        if inverse:
            _div_one_minus_qk(c, e)
        else:
            _mul_one_plus_qk(c, e)
    return PowerSeries(c)


def classical_identity_suite(order):
    """Check the six Andrews-style hypergeometric sums against their closed forms.

    Returns a list of dicts: {name, lhs, rhs, equal}.  The first five have
    infinite-product right-hand sides; the sixth is the odd-even generating
    function itself, which has no product form and is compared against
    oe_series.  Product indices run over all admissible exponents (e.g. the
    Rogers-Ramanujan product is over parts = 1, 4 mod 5 starting at 1).
    """
    def counting(e_start, e_step):
        e = e_start
        while True:
            yield e
            e += e_step

    def mod5():
        k = 0
        while True:
            yield 5 * k + 1
            yield 5 * k + 4
            k += 1

    checks = [
        (
            "euler-partitions",
            _sum_simple(order, lambda n: n, 1),
            _product(order, counting(1, 1), True),
        ),
        (
            "gauss-distinct-parts",
            _sum_simple(order, lambda n: n * (n + 1) // 2, 1),
            _product(order, counting(1, 1), False),
        ),
        (
            "rogers-ramanujan",
            _sum_simple(order, lambda n: n * n, 1),
            _product(order, mod5(), True),
        ),
        (
            "odd-parts",
            _sum_simple(order, lambda n: n, 2),
            _product(order, counting(1, 2), True),
        ),
        (
            "distinct-odd-parts",
            _sum_simple(order, lambda n: n * n, 2),
            _product(order, counting(1, 2), False),
        ),
        (
            "odd-even-sum",
            _sum_simple(order, lambda n: n * (n + 1) // 2, 2),
            oe_series(order),
        ),
    ]
    return [
        {"name": name, "lhs": lhs, "rhs": rhs, "equal": lhs == rhs}
        for name, lhs, rhs in checks
    ]
