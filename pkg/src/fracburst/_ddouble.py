"""Compensated double-double arithmetic for the series kernels.

A value is a pair (hi, lo) of floats with value = hi + lo and
|lo| <= ulp(hi)/2, giving ~31 significant digits. Only the handful of
operations the Mittag-Leffler series needs are provided: field ops,
exp, ln, sin(pi x), and ln-gamma on the positive axis. Everything is
scalar; term counts are small enough that vectorizing never paid off.

The error-free transforms are the classical ones (Knuth two_sum,
Dekker split); see Hida/Li/Bailey's library for the algorithm shapes.
"""

from __future__ import annotations

import math
from fractions import Fraction

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a: float) -> tuple[float, float]:
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ahi, alo = _split(a)
    bhi, blo = _split(b)
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def dd(x: float) -> tuple[float, float]:
    return (float(x), 0.0)


def add(a, b):
    s1, s2 = two_sum(a[0], b[0])
    t1, t2 = two_sum(a[1], b[1])
    s2 += t1
    s1, s2 = quick_two_sum(s1, s2)
    s2 += t2
    return quick_two_sum(s1, s2)


def add_d(a, b: float):
    s1, s2 = two_sum(a[0], b)
    s2 += a[1]
    return quick_two_sum(s1, s2)


def neg(a):
    return (-a[0], -a[1])


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    p1, p2 = two_prod(a[0], b[0])
    p2 += a[0] * b[1] + a[1] * b[0]
    return quick_two_sum(p1, p2)


def mul_d(a, b: float):
    p1, p2 = two_prod(a[0], b)
    p2 += a[1] * b
    return quick_two_sum(p1, p2)


def div(a, b):
    q1 = a[0] / b[0]
    r = sub(a, mul_d(b, q1))
    q2 = r[0] / b[0]
    r = sub(r, mul_d(b, q2))
    q3 = r[0] / b[0]
    s, e = quick_two_sum(q1, q2)
    return add_d((s, e), q3)


def div_d(a, b: float):
    return div(a, dd(b))


def abs_(a):
    return neg(a) if a[0] < 0.0 else a


# ---------------------------------------------------------------------------
# constants

LN2 = (0.6931471805599453, 2.3190468138462996e-17)
PI = (3.141592653589793, 1.2246467991473532e-16)
_TWO_PI = (6.283185307179586, 2.4492935982947064e-16)


def _from_fraction(f: Fraction) -> tuple[float, float]:
    hi = float(f)
    return hi, float(f - Fraction(hi))


# 1/n! for the exp and sin series
_INV_FACT = []
_f = Fraction(1)
for _n in range(1, 40):
    _f /= _n
    _INV_FACT.append(_from_fraction(_f))


def exp_(a):
    """exp of a double-double; only |a| < 709 is needed or supported."""
    x = a[0] + a[1]
    if x > 709.7:
        raise OverflowError("exp overflow in double-double evaluation")
    if x < -745.0:
        return (0.0, 0.0)
    k = round(x / 0.6931471805599453)
    r = sub(a, mul_d(LN2, float(k)))
    # Taylor on |r| <= ln2/2; 26 terms reach ~1e-35
    s = add_d(r, 1.0)
    term = r
    for n in range(2, 27):
        term = mul(term, r)
        t = mul(term, _INV_FACT[n - 1])
        s = add(s, t)
        if abs(t[0]) < 1e-35:
            break
    return quick_two_sum(math.ldexp(s[0], k), math.ldexp(s[1], k))


def ln(a):
    """ln of a positive double-double via one Newton step on exp."""
    if a[0] <= 0.0:
        raise ValueError("ln of non-positive double-double")
    y = math.log(a[0])
    r = div(a, exp_(dd(y)))
    w = add_d(r, -1.0)  # ~1e-16, so a short ln(1+w) series suffices
    w2 = mul(w, w)
    corr = sub(w, mul_d(w2, 0.5))
    corr = add(corr, mul_d(mul(w2, w), 1.0 / 3.0))
    return add_d(corr, y)


# exact 1/((2m)(2m+1)) factors turn u^(2m-1) terms into u^(2m+1) ones
_SIN_RATIOS = [
    _from_fraction(Fraction(1, (2 * m) * (2 * m + 1))) for m in range(1, 19)
]


def sin_pi(a):
    """sin(pi*a) for a double-double a, exact integer zero included."""
    n = round(a[0])
    r = add_d(a, float(-n))
    if r[0] == 0.0 and r[1] == 0.0:
        return (0.0, 0.0)
    u = mul(PI, r)
    u2 = mul(u, u)
    s = u
    term = u
    for ratio in _SIN_RATIOS:
        term = neg(mul(mul(term, u2), ratio))
        s = add(s, term)
        if abs(term[0]) < 1e-34:
            break
    if n % 2:
        s = neg(s)
    return s


# Stirling series coefficients B_2n / (2n (2n-1)), exact Bernoulli numbers
def _bernoulli_even(count: int) -> list[Fraction]:
    # standard recurrence; only even-index values survive
    out = []
    b = [Fraction(1)]
    for m in range(1, 2 * count + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += Fraction(math.comb(m + 1, k)) * b[k]
        b.append(-acc / (m + 1))
        if m % 2 == 0:
            out.append(b[m])
    return out


_STIRLING_Z0 = 32.0
_STIRLING_COEF = [
    _from_fraction(B / Fraction((2 * n) * (2 * n - 1)))
    for n, B in enumerate(_bernoulli_even(28), start=1)
]
_HALF_LN_2PI = mul_d(ln(_TWO_PI), 0.5)


def ln_gamma(a):
    """ln Gamma of a positive double-double.

    Stirling with exact-rational Bernoulli coefficients after shifting the
    argument above 32; the truncation error there is below 1e-40 absolute,
    so accuracy is limited by the double-double format itself.
    """
    if a[0] <= 0.0:
        raise ValueError("ln_gamma of non-positive double-double")
    shift = (0.0, 0.0)
    z = a
    if a[0] < _STIRLING_Z0:
        m = int(math.ceil(_STIRLING_Z0 - a[0]))
        prod = a
        for i in range(1, m):
            prod = mul(prod, add_d(a, float(i)))
        z = add_d(a, float(m))
        shift = ln(prod)
    w = div(dd(1.0), mul(z, z))
    s = _STIRLING_COEF[-1]
    for c in reversed(_STIRLING_COEF[:-1]):
        s = add(mul(s, w), c)
    s = div(s, z)
    lnz = ln(z)
    out = mul(sub(z, dd(0.5)), lnz)
    out = sub(out, z)
    out = add(out, _HALF_LN_2PI)
    out = add(out, s)
    return sub(out, shift)


def to_float(a) -> float:
    return a[0] + a[1]
