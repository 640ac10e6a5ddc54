"""Bivariate polynomials over QQ and elimination along a line family.

A curve is a dict {(i, j): Fraction} for x^i y^j.  Substituting a polynomial
line parametrization (x(c, s), y(c, s)) turns it into an "SPoly": a list of
integer polynomials in the sweep parameter c, indexed by the power of the
line coordinate s.  Resultants w.r.t. s are taken with Bareiss fraction-free
elimination on the Sylvester matrix, whose entries are ZPs in c.
"""

from __future__ import annotations

from fractions import Fraction

from .polys import (
    ZP,
    zp,
    zp_divexact,
    zp_mul,
    zp_neg,
    zp_scale,
    zp_sub,
)

BiPoly = dict  # {(i, j): Fraction}


def bp_normalize(d) -> BiPoly:
    return {k: Fraction(v) for k, v in d.items() if Fraction(v) != 0}


def bp_add(a: BiPoly, b: BiPoly) -> BiPoly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
    return bp_normalize(out)


def bp_mul(a: BiPoly, b: BiPoly) -> BiPoly:
    out = {}
    for (i, j), u in a.items():
        for (k, l), v in b.items():
            key = (i + k, j + l)
            out[key] = out.get(key, Fraction(0)) + u * v
    return bp_normalize(out)


def bp_scale(a: BiPoly, f) -> BiPoly:
    return bp_normalize({k: v * Fraction(f) for k, v in a.items()})


def bp_eval(a: BiPoly, x: Fraction, y: Fraction) -> Fraction:
    return sum((v * x**i * y**j for (i, j), v in a.items()), Fraction(0))


def bp_dx(a: BiPoly) -> BiPoly:
    return bp_normalize({(i - 1, j): v * i for (i, j), v in a.items() if i > 0})


def bp_dy(a: BiPoly) -> BiPoly:
    return bp_normalize({(i, j - 1): v * j for (i, j), v in a.items() if j > 0})


def bp_total_degree(a: BiPoly) -> int:
    return max((i + j for i, j in a), default=-1)


def bp_restrict_line(a: BiPoly, px, py):
    """Restrict to a rational line {t -> (px0 + px1 t, py0 + py1 t)}.

    Returns Fraction coefficients (low first) of the univariate restriction.
    """
    px0, px1 = Fraction(px[0]), Fraction(px[1])
    py0, py1 = Fraction(py[0]), Fraction(py[1])
    out = {}
    for (i, j), v in a.items():
        # (px0 + px1 t)^i (py0 + py1 t)^j, expanded by convolution
        xs = _binpow(px0, px1, i)
        ys = _binpow(py0, py1, j)
        for di, cx in enumerate(xs):
            for dj, cy in enumerate(ys):
                out[di + dj] = out.get(di + dj, Fraction(0)) + v * cx * cy
    n = max(out) + 1 if out else 0
    return [out.get(k, Fraction(0)) for k in range(n)]


def _binpow(a: Fraction, b: Fraction, n: int):
    """Coefficients of (a + b t)^n."""
    coeffs = [Fraction(1)]
    for _ in range(n):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += c * a
            nxt[k + 1] += c * b
        coeffs = nxt
    return coeffs


class SPoly:
    """F restricted to a line family: polynomial in s over ZZ[c].

    coeffs[k] is the ZP in c multiplying s^k.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [c if isinstance(c, tuple) else tuple(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    def degree_s(self) -> int:
        return len(self.coeffs) - 1

    def lead(self) -> ZP:
        return self.coeffs[-1] if self.coeffs else ()

    def ds(self) -> "SPoly":
        return SPoly([zp_scale(c, k) for k, c in enumerate(self.coeffs)][1:])

    def at_param(self, c: Fraction):
        """Fraction coefficient list in s at a rational parameter value."""
        from .polys import zp_eval_fr
        return [zp_eval_fr(co, c) for co in self.coeffs]

    def zp_coeffs(self):
        return list(self.coeffs)


def substitute_line_family(F: BiPoly, x_cs: BiPoly, y_cs: BiPoly) -> SPoly:
    """Compose F with polynomial maps x(c, s), y(c, s); integerized.

    x_cs, y_cs are BiPolys in (c, s).  The overall rational content is
    dropped (positive rescaling), which preserves zero sets and signs up to
    a positive constant.
    """
    acc: BiPoly = {}
    xpows = {0: {(0, 0): Fraction(1)}}
    ypows = {0: {(0, 0): Fraction(1)}}

    def powof(table, base, n):
        if n not in table:
            table[n] = bp_mul(powof(table, base, n - 1), base)
        return table[n]

    for (i, j), v in F.items():
        term = bp_scale(bp_mul(powof(xpows, x_cs, i), powof(ypows, y_cs, j)), v)
        acc = bp_add(acc, term)
    deg_s = max((j for (_, j) in acc), default=0)
    deg_c = max((i for (i, _) in acc), default=0)
    # clear denominators globally (positive factor)
    den = 1
    for v in acc.values():
        from math import gcd
        den = den * v.denominator // gcd(den, v.denominator)
    cols = []
    for k in range(deg_s + 1):
        cols.append(zp([int(acc.get((i, k), Fraction(0)) * den) for i in range(deg_c + 1)]))
    return SPoly(cols)


def sylvester_resultant(P: SPoly, Q: SPoly) -> ZP:
    """Res_s(P, Q) as a ZP in c, via Bareiss on the Sylvester matrix."""
    m, n = P.degree_s(), Q.degree_s()
    if m < 0 or n < 0:
        return ()
    if m == 0:
        return _zp_pow(P.coeffs[0], n)
    if n == 0:
        return _zp_pow(Q.coeffs[0], m)
    size = m + n
    M = [[() for _ in range(size)] for _ in range(size)]
    pc = list(reversed(P.coeffs))  # high first
    qc = list(reversed(Q.coeffs))
    for r in range(n):
        for k, c in enumerate(pc):
            M[r][r + k] = c
    for r in range(m):
        for k, c in enumerate(qc):
            M[n + r][r + k] = c
    return _bareiss_det(M)


def _zp_pow(p: ZP, k: int) -> ZP:
    out = (1,)
    for _ in range(k):
        out = zp_mul(out, p)
    return out


def _bareiss_det(M) -> ZP:
    """Fraction-free determinant for matrices over ZZ[c]."""
    n = len(M)
    M = [row[:] for row in M]
    sign = 1
    prev = (1,)
    for k in range(n - 1):
        if not M[k][k]:
            piv = next((r for r in range(k + 1, n) if M[r][k]), None)
            if piv is None:
                return ()
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = zp_sub(zp_mul(M[i][j], M[k][k]), zp_mul(M[i][k], M[k][j]))
                M[i][j] = zp_divexact(num, prev) if num else ()
            M[i][k] = ()
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else zp_neg(det)