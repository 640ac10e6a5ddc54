"""Exact real-root isolation and real algebraic numbers.

Sturm sequences over QQ (kept as primitive integer polynomials, which is
sign-safe as long as rescaling constants stay positive) drive isolation and
interval refinement.  An algebraic number is a square-free defining polynomial
plus an isolating interval; the only primitive everything else reduces to is
``AlgebraicNumber.sign_of``: the exact sign of another polynomial at the
number.  On top of that, ``FieldElement`` implements arithmetic in QQ(alpha)
as lazy fractions of polynomials, reduced modulo the defining polynomial.
"""

from __future__ import annotations

from fractions import Fraction

from .polys import (
    ZP,
    qp_divmod,
    zp,
    zp_add,
    zp_degree,
    zp_derivative,
    zp_eval_fr,
    zp_from_fractions,
    zp_gcd,
    zp_mul,
    zp_neg,
    zp_sign_at,
    zp_squarefree_decomposition,
    zp_squarefree_part,
    zp_sub,
)


def sturm_chain(p: ZP):
    """Sturm chain of a square-free integer polynomial."""
    chain = [p, zp_derivative(p)]
    while chain[-1]:
        _, r = qp_divmod(list(chain[-2]), list(chain[-1]))
        nr = zp_neg(zp_from_fractions(r))
        if not nr:
            break
        chain.append(nr)
    return chain


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def sturm_variations_at(chain, x: Fraction) -> int:
    return _variations([zp_sign_at(q, x) for q in chain])


def sturm_variations_at_inf(chain, positive: bool) -> int:
    signs = []
    for q in chain:
        if not q:
            signs.append(0)
        elif positive:
            signs.append(1 if q[-1] > 0 else -1)
        else:
            s = 1 if q[-1] > 0 else -1
            signs.append(s if (len(q) - 1) % 2 == 0 else -s)
    return _variations(signs)


def count_roots(chain, lo: Fraction, hi: Fraction) -> int:
    """Number of real roots in (lo, hi]."""
    return sturm_variations_at(chain, lo) - sturm_variations_at(chain, hi)


def root_bound(p: ZP) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1]) if len(p) > 1 else 0
    return Fraction(1) + Fraction(m, lead)


def isolate_real_roots(p: ZP):
    """Isolating intervals for the distinct real roots of a square-free p.

    Returns a sorted list of (lo, hi) Fraction pairs.  Rational roots come out
    as degenerate intervals lo == hi; otherwise lo < root < hi with neither
    endpoint a root, and intervals pairwise disjoint.
    """
    if zp_degree(p) < 1:
        return []
    chain = sturm_chain(p)
    b = root_bound(p)
    out = []

    def recurse(lo, hi, nlo, nhi):
        n = nlo - nhi
        if n == 0:
            return
        if n == 1:
            # shrink away from endpoints that are roots of p: Cauchy-bound
            # endpoints never are, and midpoints are root-checked below
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if zp_sign_at(p, mid) == 0:
            out.append((mid, mid))
            eps = (hi - lo) / 4
            while True:
                if zp_sign_at(p, mid - eps) != 0 and zp_sign_at(p, mid + eps) != 0:
                    nml = sturm_variations_at(chain, mid - eps)
                    nmr = sturm_variations_at(chain, mid + eps)
                    if nml - nmr == 1:  # bracket holds only the found root
                        break
                eps /= 2
            recurse(lo, mid - eps, nlo, nml)
            recurse(mid + eps, hi, nmr, nhi)
        else:
            nm = sturm_variations_at(chain, mid)
            recurse(lo, mid, nlo, nm)
            recurse(mid, hi, nm, nhi)

    recurse(-b, b, sturm_variations_at(chain, -b), sturm_variations_at(chain, b))
    out.sort(key=lambda iv: iv[0])
    return out


class AlgebraicNumber:
    """A real algebraic number: square-free defining ZP + isolating interval.

    lo == hi encodes an exact rational.  The interval is refined in place;
    arithmetic predicates (sign_of, compare) are exact.
    """

    __slots__ = ("poly", "lo", "hi", "_chain")

    def __init__(self, poly: ZP, lo: Fraction, hi: Fraction):
        self.poly = poly
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._chain = None

    @classmethod
    def from_rational(cls, r) -> "AlgebraicNumber":
        r = Fraction(r)
        return cls(zp([-r.numerator, r.denominator]), r, r)

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    def chain(self):
        if self._chain is None:
            self._chain = sturm_chain(self.poly)
        return self._chain

    def refine(self, steps: int = 1) -> None:
        for _ in range(steps):
            if self.is_rational:
                return
            mid = (self.lo + self.hi) / 2
            s = zp_sign_at(self.poly, mid)
            if s == 0:
                self.lo = self.hi = mid
                return
            if zp_sign_at(self.poly, self.lo) * s < 0:
                self.hi = mid
            else:
                self.lo = mid

    def refine_below(self, width: Fraction) -> None:
        while not self.is_rational and self.hi - self.lo >= width:
            self.refine()

    def sign_of(self, q: ZP) -> int:
        """Exact sign of q(alpha)."""
        if not q:
            return 0
        if self.is_rational:
            return zp_sign_at(q, self.lo)
        g = zp_gcd(self.poly, q)
        if zp_degree(g) >= 1 and count_roots(sturm_chain(g), self.lo, self.hi) > 0:
            return 0
        qsf = zp_squarefree_part(q)
        qchain = sturm_chain(qsf)
        while count_roots(qchain, self.lo, self.hi) > 0:
            self.refine()
        return zp_sign_at(q, (self.lo + self.hi) / 2)

    def equals(self, other: "AlgebraicNumber") -> bool:
        if self.is_rational and other.is_rational:
            return self.lo == other.lo
        if self.is_rational:
            return other.sign_of(zp([-self.lo.numerator, self.lo.denominator])) == 0
        if other.is_rational:
            return self.sign_of(zp([-other.lo.numerator, other.lo.denominator])) == 0
        g = zp_gcd(self.poly, other.poly)
        if zp_degree(g) < 1:
            return False
        gchain = sturm_chain(g)
        for _ in range(4000):
            lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
            if lo >= hi:
                return False
            if (count_roots(gchain, self.lo, self.hi) == 1
                    and count_roots(gchain, other.lo, other.hi) == 1
                    and count_roots(gchain, lo, hi) == 1):
                return True
            self.refine()
            other.refine()
        raise RuntimeError("algebraic equality test did not converge")

    def compare(self, other: "AlgebraicNumber") -> int:
        if self.equals(other):
            return 0
        while True:
            if self.hi < other.lo:
                return -1
            if other.hi < self.lo:
                return 1
            self.refine()
            other.refine()

    def compare_rational(self, r: Fraction) -> int:
        s = self.sign_of(zp([-r.numerator, r.denominator]))
        return s

    def rational_below(self) -> Fraction:
        if self.is_rational:
            return self.lo - 1
        return self.lo

    def rational_above(self) -> Fraction:
        if self.is_rational:
            return self.lo + 1
        return self.hi

    def __float__(self) -> float:
        if self.is_rational:
            return float(self.lo)
        self.refine_below(Fraction(1, 10**12))
        return float((self.lo + self.hi) / 2)

    def __repr__(self):
        return f"Alg({float(self):.6g})"


def real_roots_with_multiplicities(coeffs):
    """All real roots of a QQ-coefficient polynomial, with multiplicities.

    ``coeffs`` is a low-first list of Fractions/ints.  Returns a list of
    (AlgebraicNumber, multiplicity) sorted by the root value; isolating
    intervals are pairwise disjoint.  Raises ValueError on the zero
    polynomial.
    """
    p = zp_from_fractions(coeffs)
    if not p:
        raise ValueError("zero polynomial has no well-defined roots")
    roots = []
    for factor, mult in zp_squarefree_decomposition(p):
        for lo, hi in isolate_real_roots(factor):
            roots.append((AlgebraicNumber(factor, lo, hi), mult))
    # factors are pairwise coprime, so refinement separates all intervals
    changed = True
    while changed:
        changed = False
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                a, b = roots[i][0], roots[j][0]
                alo, ahi = a.lo, a.hi
                blo, bhi = b.lo, b.hi
                if max(alo, blo) <= min(ahi, bhi) and not (a.is_rational and b.is_rational and alo != blo):
                    a.refine()
                    b.refine()
                    changed = True
    roots.sort(key=lambda rm: rm[0].lo)
    return roots


class FieldElement:
    """Element of QQ(alpha) as num/den of integer polynomials in alpha.

    Both polynomials are reduced modulo the defining polynomial of alpha, so
    degrees stay below deg(alpha).  Exact zero tests and signs go through
    ``AlgebraicNumber.sign_of``.
    """

    __slots__ = ("alpha", "num", "den")

    def __init__(self, alpha: AlgebraicNumber, num: ZP, den: ZP = (1,)):
        self.alpha = alpha
        # reductions (mod the defining poly, gcd cancellation) must rescale
        # num and den by a COMMON positive factor, or the value changes
        n_fr, d_fr = [Fraction(c) for c in num], [Fraction(c) for c in den]
        m = list(alpha.poly)
        if not alpha.is_rational:
            if len(n_fr) - 1 >= zp_degree(alpha.poly):
                _, n_fr = qp_divmod(n_fr, m)
            if len(d_fr) - 1 >= zp_degree(alpha.poly):
                _, d_fr = qp_divmod(d_fr, m)
        self.num, self.den = _common_integerize(n_fr, d_fr)
        if not self.den or alpha.sign_of(self.den) == 0:
            raise ZeroDivisionError("denominator vanishes at alpha")
        if self.num:
            g = zp_gcd(self.num, self.den)
            if zp_degree(g) >= 1:
                nq, nr = qp_divmod(list(self.num), list(g))
                dq, dr = qp_divmod(list(self.den), list(g))
                if not nr and not dr:
                    self.num, self.den = _common_integerize(nq, dq)

    @classmethod
    def from_rational(cls, alpha, r) -> "FieldElement":
        r = Fraction(r)
        return cls(alpha, zp([r.numerator]), zp([r.denominator]))

    def sign(self) -> int:
        if not self.num:
            return 0
        return self.alpha.sign_of(self.num) * self.alpha.sign_of(self.den)

    def is_zero(self) -> bool:
        return self.sign() == 0

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(
            self.alpha,
            zp_add(zp_mul(self.num, other.den), zp_mul(other.num, self.den)),
            zp_mul(self.den, other.den),
        )

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(
            self.alpha,
            zp_sub(zp_mul(self.num, other.den), zp_mul(other.num, self.den)),
            zp_mul(self.den, other.den),
        )

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.alpha, zp_mul(self.num, other.num), zp_mul(self.den, other.den))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero field element")
        return FieldElement(self.alpha, zp_mul(self.num, other.den), zp_mul(self.den, other.num))

    def __neg__(self):
        return FieldElement(self.alpha, zp_neg(self.num), self.den)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            return other
        return FieldElement.from_rational(self.alpha, other)

    def interval(self, width: Fraction):
        """A rational interval containing the value, of width <= width."""
        while True:
            lo, hi = self._interval_once()
            if hi - lo <= width:
                return lo, hi
            self.alpha.refine()

    def _interval_once(self):
        a = self.alpha
        if a.is_rational:
            v = zp_eval_fr(self.num, a.lo) / zp_eval_fr(self.den, a.lo)
            return v, v
        nlo, nhi = _poly_range(self.num, a.lo, a.hi)
        dlo, dhi = _poly_range(self.den, a.lo, a.hi)
        if dlo <= 0 <= dhi:
            a.refine()
            return self._interval_once()
        cands = [nlo / dlo, nlo / dhi, nhi / dlo, nhi / dhi]
        return min(cands), max(cands)

    def __float__(self):
        lo, hi = self.interval(Fraction(1, 10**12))
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"FE({float(self):.6g})"


def _common_integerize(n_fr, d_fr):
    """Scale two Fraction coefficient lists by one positive rational so both
    become integer tuples; preserves the value of the fraction n/d."""
    while n_fr and n_fr[-1] == 0:
        n_fr.pop()
    while d_fr and d_fr[-1] == 0:
        d_fr.pop()
    from math import gcd as _gcd
    den = 1
    for f in list(n_fr) + list(d_fr):
        den = den * f.denominator // _gcd(den, f.denominator)
    n = zp(int(f * den) for f in n_fr)
    d = zp(int(f * den) for f in d_fr)
    if n or d:
        g = 0
        for c in (list(n) + list(d)):
            g = _gcd(g, abs(c))
        if g > 1:
            n = tuple(c // g for c in n)
            d = tuple(c // g for c in d)
    return n, d


def _poly_range(p: ZP, lo: Fraction, hi: Fraction):
    """Crude interval extension of p over [lo, hi] via endpoint + bound."""
    if not p:
        return Fraction(0), Fraction(0)
    a, b = zp_eval_fr(p, lo), zp_eval_fr(p, hi)
    dp = zp_derivative(p)
    m = max(abs(lo), abs(hi))
    # |p'| <= sum |c_i| m^i on the interval
    bound = sum(abs(c) * m**i for i, c in enumerate(dp)) if dp else Fraction(0)
    slack = bound * (hi - lo)
    return min(a, b) - slack, max(a, b) + slack


class FieldPoly:
    """Polynomial in one variable with FieldElement coefficients."""

    def __init__(self, alpha, coeffs):
        self.alpha = alpha
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs

    @classmethod
    def from_zp_coeffs(cls, alpha, zp_coeffs):
        """Build from s-coefficients that are ZPs in the parameter."""
        return cls(alpha, [FieldElement(alpha, c if c else ()) for c in zp_coeffs])

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1]

    def eval_rational(self, q: Fraction) -> FieldElement:
        acc = FieldElement.from_rational(self.alpha, 0)
        for c in reversed(self.coeffs):
            acc = acc * FieldElement.from_rational(self.alpha, q) + c
        return acc

    def derivative(self):
        return FieldPoly(self.alpha, [c * FieldElement.from_rational(self.alpha, i)
                                      for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "FieldPoly"):
        if other.is_zero():
            raise ZeroDivisionError
        rem = list(self.coeffs)
        quo = [FieldElement.from_rational(self.alpha, 0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        dlead = other.lead()
        while len(rem) >= len(other.coeffs):
            while rem and rem[-1].is_zero():
                rem.pop()
            if len(rem) < len(other.coeffs):
                break
            k = len(rem) - len(other.coeffs)
            f = rem[-1] / dlead
            quo[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - f * c
            rem.pop()
        return FieldPoly(self.alpha, quo), FieldPoly(self.alpha, rem)

    def gcd(self, other: "FieldPoly") -> "FieldPoly":
        a, b = self, other
        while not b.is_zero():
            _, r = a.divmod(b)
            a, b = b, r
        return a

    def sturm_chain(self):
        chain = [self, self.derivative()]
        while not chain[-1].is_zero():
            _, r = chain[-2].divmod(chain[-1])
            if r.is_zero():
                break
            chain.append(FieldPoly(self.alpha, [-c for c in r.coeffs]))
        return [c for c in chain if not c.is_zero()]


def field_count_distinct_roots(chain, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in (lo, hi] of the FieldPoly generating ``chain``.

    Valid for Sturm chains of square-free polynomials; for non-square-free
    ones pass the chain of poly/gcd(poly, poly').
    """
    def vari_at(x):
        return _variations([c.eval_rational(x).sign() for c in chain])
    return vari_at(lo) - vari_at(hi)
