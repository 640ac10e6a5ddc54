from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from trajspace.polys import zp, zp_mul
from trajspace.realroots import (
    AlgebraicNumber,
    FieldElement,
    FieldPoly,
    field_count_distinct_roots,
    isolate_real_roots,
    real_roots_with_multiplicities,
    sturm_chain,
    count_roots,
)


def poly_from_roots(roots):
    p = (1,)
    for r in roots:
        p = zp_mul(p, zp([-r.numerator, r.denominator]))
    return p


def test_isolation_simple_integer_roots():
    p = poly_from_roots([Fraction(r) for r in (-3, 1, 4)])
    ivs = isolate_real_roots(p)
    assert len(ivs) == 3
    for (lo, hi), root in zip(ivs, (-3, 1, 4)):
        assert lo <= root <= hi


@given(st.lists(st.integers(-8, 8).map(Fraction), min_size=1, max_size=5, unique=True))
@settings(max_examples=60, deadline=None)
def test_isolation_counts_and_brackets(roots):
    p = poly_from_roots(sorted(roots))
    ivs = isolate_real_roots(p)
    assert len(ivs) == len(roots)
    for (lo, hi), root in zip(ivs, sorted(roots)):
        assert lo <= root <= hi


def test_adjacent_rational_roots_isolated():
    # regression: an exact midpoint hit must not swallow neighbors
    p = zp([15, -16, 4])  # (2x - 3)(2x - 5)
    ivs = isolate_real_roots(p)
    assert len(ivs) == 2


def test_multiplicities():
    # (u-1)^2 (u-3)
    p = zp_mul(zp_mul(zp([-1, 1]), zp([-1, 1])), zp([-3, 1]))
    rm = real_roots_with_multiplicities(list(p))
    assert [(float(r), m) for r, m in rm] == [(1.0, 2), (3.0, 1)]


def test_no_real_roots():
    assert real_roots_with_multiplicities([1, 0, 1]) == []  # u^2 + 1


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        real_roots_with_multiplicities([0])


def test_perturbed_double_root_trichotomy():
    # (u-1)(u-2)^2(u-3) with the double root's constant shifted by +-1/1000:
    # the discriminant sign of the quadratic factor decides 0 or 2 roots near 2
    for eps, expect in [(Fraction(1, 1000), 2), (Fraction(-1, 1000), 4)]:
        # (u-2)^2 + eps = u^2 - 4u + (4 + eps)
        coeffs = [Fraction(4) + eps, Fraction(-4), Fraction(1)]
        prod = [Fraction(c) for c in zp([-1, 1])]
        out = [Fraction(0)] * (len(prod) + 2)
        for i, a in enumerate(prod):
            for j, b in enumerate(coeffs):
                out[i + j] += a * b
        prod2 = [Fraction(0)] * (len(out) + 1)
        for i, a in enumerate(out):
            for j, b in enumerate([Fraction(-3), Fraction(1)]):
                prod2[i + j] += a * b
        rm = real_roots_with_multiplicities(prod2)
        assert len(rm) == expect
        assert all(m == 1 for _, m in rm)


def test_algebraic_sign_and_compare():
    sqrt2 = AlgebraicNumber(zp([-2, 0, 1]), Fraction(1), Fraction(2))
    assert sqrt2.sign_of(zp([-1, 1])) == 1        # sqrt2 - 1 > 0
    assert sqrt2.sign_of(zp([-2, 0, 1])) == 0     # its own polynomial
    assert sqrt2.compare_rational(Fraction(3, 2)) < 0
    other = AlgebraicNumber(zp([-2, 0, 1]), Fraction(0), Fraction(3, 2))
    assert sqrt2.equals(other)
    neg = AlgebraicNumber(zp([-2, 0, 1]), Fraction(-2), Fraction(-1))
    assert sqrt2.compare(neg) > 0


def test_field_arithmetic_identity():
    sqrt2 = AlgebraicNumber(zp([-2, 0, 1]), Fraction(1), Fraction(2))
    a = FieldElement(sqrt2, zp([1, 1]))        # 1 + sqrt2
    b = FieldElement(sqrt2, zp([1, -1]))       # 1 - sqrt2
    prod = a * b                               # 1 - 2 = -1
    assert prod.sign() == -1
    assert (prod + FieldElement.from_rational(sqrt2, 1)).sign() == 0
    half = a / (a + a)
    assert (half - FieldElement.from_rational(sqrt2, Fraction(1, 2))).sign() == 0


def test_field_poly_gcd_detects_double_root():
    sqrt2 = AlgebraicNumber(zp([-2, 0, 1]), Fraction(1), Fraction(2))
    # (s - sqrt2)^2 = s^2 - 2 sqrt2 s + 2, coefficients in QQ(sqrt2)
    coeffs = [FieldElement.from_rational(sqrt2, 2),
              FieldElement(sqrt2, zp([0, -2])),
              FieldElement.from_rational(sqrt2, 1)]
    fp = FieldPoly(sqrt2, coeffs)
    g = fp.gcd(fp.derivative())
    assert g.degree() == 1
    s_star = -(g.coeffs[0] / g.coeffs[1])
    assert (s_star * s_star - FieldElement.from_rational(sqrt2, 2)).sign() == 0


def test_field_sturm_counts():
    sqrt2 = AlgebraicNumber(zp([-2, 0, 1]), Fraction(1), Fraction(2))
    # (s - sqrt2)(s + 1): roots at -1 and sqrt2
    coeffs = [FieldElement(sqrt2, zp([0, -1])),
              FieldElement(sqrt2, zp([1, -1])),
              FieldElement.from_rational(sqrt2, 1)]
    fp = FieldPoly(sqrt2, coeffs)
    chain = fp.sturm_chain()
    assert field_count_distinct_roots(chain, Fraction(-2), Fraction(0)) == 1
    assert field_count_distinct_roots(chain, Fraction(0), Fraction(2)) == 1
    assert field_count_distinct_roots(chain, Fraction(-2), Fraction(2)) == 2


def test_sturm_count_interval():
    p = poly_from_roots([Fraction(-1), Fraction(2), Fraction(5)])
    chain = sturm_chain(p)
    assert count_roots(chain, Fraction(0), Fraction(3)) == 1
    assert count_roots(chain, Fraction(-10), Fraction(10)) == 3