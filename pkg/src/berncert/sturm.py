"""Exact nonnegativity decisions for small-degree polynomials.

Double-precision coefficients are dyadic rationals, so after an optional
pruning step the whole decision runs in exact rational arithmetic: square-free
reduction, a Sturm chain, root isolation by bisection, and sign evaluation
between roots.  No tolerance enters the verdict, which is what makes this
usable as ground truth against the floating-point certificates.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["nonneg_on_interval"]

_Poly = list[Fraction]  # ascending coefficients, trailing zeros trimmed

_ZERO = Fraction(0)


def _trim(c: _Poly) -> _Poly:
    while c and c[-1] == 0:
        c.pop()
    return c


def _eval(c: _Poly, x: Fraction) -> Fraction:
    acc = _ZERO
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


def _derivative(c: _Poly) -> _Poly:
    return _trim([k * c[k] for k in range(1, len(c))])


def _divmod_poly(a: _Poly, b: _Poly) -> tuple[_Poly, _Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [_ZERO] * max(len(a) - len(b) + 1, 1)
    db = len(b) - 1
    lead = b[-1]
    while len(rem) - 1 >= db and rem:
        k = len(rem) - 1 - db
        q = rem[-1] / lead
        quo[k] = q
        for j in range(len(b)):
            rem[k + j] -= q * b[j]
        rem.pop()  # leading term cancels exactly
        _trim(rem)
    return _trim(quo), rem


def _normalize(c: _Poly) -> _Poly:
    # scale by a positive constant only: sign variations stay intact
    if not c:
        return c
    lead = abs(c[-1])
    return [x / lead for x in c]


def _gcd(a: _Poly, b: _Poly) -> _Poly:
    a, b = list(a), list(b)
    while b:
        _, r = _divmod_poly(a, b)
        a, b = b, _normalize(r)
    return a


def _squarefree(c: _Poly) -> _Poly:
    d = _derivative(c)
    if not d:
        return list(c)
    g = _gcd(c, d)
    if len(g) <= 1:
        return list(c)
    q, _ = _divmod_poly(c, g)
    return q


def _sturm_chain(c: _Poly) -> list[_Poly]:
    chain = [list(c)]
    d = _derivative(c)
    if d:
        chain.append(d)
        while len(chain[-1]) > 1:
            _, r = _divmod_poly(chain[-2], chain[-1])
            r = _normalize([-x for x in r])
            if not r:
                break
            chain.append(r)
    return chain


def _variations(chain: list[_Poly], x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = _eval(poly, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _count_roots(chain: list[_Poly], a: Fraction, b: Fraction) -> int:
    # distinct roots in (a, b]; chain head must not vanish at a
    return _variations(chain, a) - _variations(chain, b)


def _nonroot_point(q: _Poly, a: Fraction, b: Fraction) -> Fraction:
    # q has finitely many roots, so one of these interior points is root-free
    for num, den in ((1, 2), (13, 32), (17, 32), (1, 3), (2, 3), (5, 7)):
        x = a + (b - a) * Fraction(num, den)
        if _eval(q, x) != 0:
            return x
    den = 101
    for num in range(1, den):
        x = a + (b - a) * Fraction(num, den)
        if _eval(q, x) != 0:
            return x
    raise ArithmeticError("could not find a non-root sample point")


def _isolate(
    q: _Poly, chain: list[_Poly], a: Fraction, b: Fraction, count: int
) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals with non-root endpoints, one distinct root each."""
    if count == 0:
        return []
    if count == 1:
        return [(a, b)]
    mid = _nonroot_point(q, a, b)
    left = _count_roots(chain, a, mid)
    out = _isolate(q, chain, a, mid, left)
    out += _isolate(q, chain, mid, b, count - left)
    return out


def _divide_out_root(c: _Poly, r: Fraction) -> _Poly:
    q, rem = _divmod_poly(c, [-r, Fraction(1)])
    if rem:
        raise ArithmeticError("exact division by (x - r) left a remainder")
    return q


def nonneg_on_interval(mono_coeffs, lo, hi) -> bool:
    """Decide min_{x in [lo, hi]} p(x) >= 0 exactly.

    Parameters
    ----------
    mono_coeffs : sequence of float or Fraction
        Ascending monomial coefficients of p.
    lo, hi : float or Fraction
        Interval endpoints, lo < hi.

    Returns
    -------
    bool
        True iff p is nonnegative on all of [lo, hi].  The all-zero
        polynomial counts as nonnegative.
    """
    lo = Fraction(lo)
    hi = Fraction(hi)
    if not lo < hi:
        raise ValueError(f"need lo < hi, got lo={lo}, hi={hi}")
    p = _trim([Fraction(c) for c in mono_coeffs])
    if not p:
        return True

    # Endpoint roots contribute positive factors (x-lo)^mu and (hi-x)^nu on
    # the open interval; strip them so the remaining sign analysis is clean.
    while _eval(p, lo) == 0 and len(p) > 1:
        p = _divide_out_root(p, lo)
    flips = 0
    while _eval(p, hi) == 0 and len(p) > 1:
        p = _divide_out_root(p, hi)
        flips += 1
    if flips % 2 == 1:
        p = [-x for x in p]  # (x - hi)^odd is negative left of hi

    if _eval(p, lo) < 0 or _eval(p, hi) < 0:
        return False
    if len(p) == 1:
        return p[0] >= 0

    q = _squarefree(p)
    chain = _sturm_chain(q)
    total = _count_roots(chain, lo, hi)
    if total == 0:
        return True
    for a, b in _isolate(q, chain, lo, hi, total):
        if (a != lo and _eval(p, a) < 0) or (b != hi and _eval(p, b) < 0):
            return False
    return True
