"""Per-component tangency analysis along a line family.

For a boundary curve F and the family line_c(s), the restriction
G(c, s) = F(line_c(s)) has tangency parameters among the real roots of
Res_s(G, dG/ds).  At each such root alpha the gcd of G(alpha, .) and its
s-derivative over QQ(alpha) classifies the coincidence exactly:

  deg gcd = 1   one real double root (an honest order-2 tangency); the
                tangent point's s-coordinate is rational in alpha
  deg gcd = 2   discriminant < 0: a complex double pair, not an event;
                discriminant >= 0: a triple tangency or two simultaneous
                tangencies, both non-generic
  deg gcd >= 3  an unresolved coincidence, treated as non-generic

No number-field factorization is ever needed; everything reduces to signs
of integer polynomials at isolated algebraic numbers.
"""

from __future__ import annotations

from fractions import Fraction

from .bivar import SPoly, sylvester_resultant
from .polys import zp_squarefree_part
from .realroots import (
    AlgebraicNumber,
    FieldElement,
    FieldPoly,
    isolate_real_roots,
)


class DegenerateScene(Exception):
    """The scene is not traversally generic; carries an exact witness."""

    def __init__(self, reason: str, witness=None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness  # (description, float approx, interval) or None

    def witness_dict(self):
        if self.witness is None:
            return None
        desc, approx, interval = self.witness
        return {
            "description": desc,
            "parameter": approx,
            "interval": [str(interval[0]), str(interval[1])],
        }


class ParamEvent:
    """A real order-2 tangency of one component at one sweep parameter."""

    __slots__ = ("component", "chart", "alpha", "s_star", "g_alpha")

    def __init__(self, component, chart, alpha, s_star, g_alpha):
        self.component = component      # component index in the scene
        self.chart = chart              # 0 (constant field) | 0/1 (radial)
        self.alpha = alpha              # AlgebraicNumber, sweep parameter
        self.s_star = s_star            # FieldElement over alpha
        self.g_alpha = g_alpha          # FieldPoly: G(alpha, s)

    def approx(self) -> float:
        return float(self.alpha)


def classify_parameter(G: SPoly, comp_idx: int, chart: int,
                       alpha: AlgebraicNumber, strict: bool = True):
    """Classify one resultant root: ParamEvent, None, or DegenerateScene."""
    g_alpha = FieldPoly.from_zp_coeffs(alpha, G.zp_coeffs())
    if g_alpha.degree() < 1:
        return None
    gcd = g_alpha.gcd(g_alpha.derivative())
    k = gcd.degree()
    if k <= 0:
        return None
    if k == 1:
        s_star = -(gcd.coeffs[0] / gcd.coeffs[1])
        return ParamEvent(comp_idx, chart, alpha, s_star, g_alpha)
    witness = ("component %d" % comp_idx, float(alpha), (alpha.lo, alpha.hi))
    if k == 2:
        a, b, c = gcd.coeffs[2], gcd.coeffs[1], gcd.coeffs[0]
        disc = b * b - a * c * FieldElement.from_rational(alpha, 4)
        sd = disc.sign()
        if sd < 0:
            return None  # complex double pair: no real tangency here
        reason = ("two simultaneous tangencies at one sweep parameter"
                  if sd > 0 else "tangency of multiplicity > 2")
        raise DegenerateScene(reason, witness)
    # k >= 3: decide what is real.  A multiple root of the gcd is a root of
    # multiplicity > 2 of G itself; a square-free gcd with several real roots
    # means simultaneous tangencies; all-complex coincidences are harmless.
    g2 = gcd.gcd(gcd.derivative())
    if g2.degree() >= 1 and _field_real_root_count(g2) >= 1:
        raise DegenerateScene("tangency of multiplicity > 2", witness)
    nreal = _field_real_root_count(gcd)
    if nreal >= 2:
        raise DegenerateScene("two simultaneous tangencies at one sweep parameter",
                              witness)
    if nreal == 0:
        return None
    raise DegenerateScene(
        "unresolved real/complex tangency coincidence (gcd degree %d)" % k, witness)


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _field_real_root_count(fp: FieldPoly) -> int:
    """Total distinct real roots via Sturm sign variations at +-infinity."""
    chain = fp.sturm_chain()
    neg, pos = [], []
    for member in chain:
        s = member.lead().sign()
        pos.append(s)
        neg.append(s if member.degree() % 2 == 0 else -s)
    return _variations(neg) - _variations(pos)


def component_events(G: SPoly, comp_idx: int, chart: int,
                     lo: Fraction, hi: Fraction):
    """All real tangency events of one restricted component in (lo, hi).

    Returns (events, resultant_squarefree).  Resultant roots at the interval
    ends are the caller's problem (seam collisions get a chart rotation).
    """
    res = sylvester_resultant(G, G.ds())
    if not res:
        raise DegenerateScene(
            "identically tangent family (vanishing resultant) on component %d" % comp_idx,
            ("component %d" % comp_idx, None, (lo, hi)),
        )
    rsf = zp_squarefree_part(res)
    events = []
    for rlo, rhi in isolate_real_roots(rsf):
        alpha = AlgebraicNumber(rsf, rlo, rhi)
        if alpha.compare_rational(lo) <= 0 or alpha.compare_rational(hi) >= 0:
            continue
        ev = classify_parameter(G, comp_idx, chart, alpha)
        if ev is not None:
            events.append(ev)
    return events, rsf