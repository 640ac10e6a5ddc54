"""Exact scene validation.

Checks, all over QQ with algebraic certificates:
  CURVE_SINGULAR        a component curve has a real singular point
  COMPONENTS_INTERSECT  two boundary curves share a real point
  HOLE_OUTSIDE          a hole is not strictly inside the outer region
                        (or is nested in another hole)
  FIELD_VANISHES        the field has a zero on X (radial center not
                        strictly outside X)
  BBOX                  a curve touches the bounding box frame
  EMPTY                 no interior point of X was found

Singularities and curve intersections are both detected along the vertical
line pencil: every real point lies on some vertical line, a singular point
forces a multiple root of the restriction there, and the event classifier
pins these down exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bivar import bp_dx, bp_restrict_line, substitute_line_family, sylvester_resultant
from .polys import zp_degree, zp_from_fractions, zp_squarefree_part
from .realroots import (
    AlgebraicNumber,
    FieldElement,
    FieldPoly,
    isolate_real_roots,
    real_roots_with_multiplicities,
)


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)   # (name, ok, detail)
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(okay for _, okay, _ in self.checks)

    def add(self, name: str, okay: bool, detail: str = ""):
        self.checks.append((name, okay, detail))

    def failures(self):
        return [(n, d) for n, okay, d in self.checks if not okay]

    def to_dict(self):
        return {
            "ok": self.ok,
            "checks": [{"name": n, "ok": okay, "detail": d} for n, okay, d in self.checks],
        }


def _vertical_restriction(F):
    """SPoly of F along vertical lines x = c (s is the y coordinate)."""
    x_cs = {(1, 0): Fraction(1)}
    y_cs = {(0, 1): Fraction(1)}
    return substitute_line_family(F, x_cs, y_cs)


def _multiple_root_params(G):
    """Square-free resultant of (G, G_s) and its isolated real roots."""
    res = sylvester_resultant(G, G.ds())
    if not res:
        return None, []
    rsf = zp_squarefree_part(res)
    return rsf, [AlgebraicNumber(rsf, lo, hi) for lo, hi in isolate_real_roots(rsf)]


def _real_common_root(fp_a: FieldPoly, fp_b: FieldPoly):
    """Whether two FieldPolys share a real root; degree-2 gcds use the
    discriminant, higher degrees are reported as undecided (True)."""
    g = fp_a.gcd(fp_b)
    k = g.degree()
    if k <= 0:
        return False
    if k == 1:
        return True
    if k == 2:
        a, b, c = g.coeffs[2], g.coeffs[1], g.coeffs[0]
        disc = b * b - a * c * FieldElement.from_rational(a.alpha, 4)
        return disc.sign() >= 0
    return True


def _check_smooth(comp, report):
    """No real point with F = Fx = Fy = 0 (in particular on tangency loci)."""
    G = _vertical_restriction(comp.implicit)
    fx = _vertical_restriction(bp_dx(comp.implicit))
    rsf, params = _multiple_root_params(G)
    if rsf is None:
        report.add(f"curve_smooth[{comp.name}]", False,
                   "CURVE_SINGULAR: restriction identically degenerate")
        return
    for alpha in params:
        g_alpha = FieldPoly.from_zp_coeffs(alpha, G.zp_coeffs())
        if g_alpha.degree() < 1:
            continue
        gc = g_alpha.gcd(g_alpha.derivative())
        if gc.degree() < 1:
            continue
        fx_alpha = FieldPoly.from_zp_coeffs(alpha, fx.zp_coeffs())
        if fx_alpha.is_zero():
            # F_x vanishes on the whole line: singular iff a multiple point
            # of the restriction is actually real
            from .events import _field_real_root_count
            bad = _field_real_root_count(gc) >= 1
        else:
            bad = _real_common_root(gc, fx_alpha)
        if bad:
            report.add(f"curve_smooth[{comp.name}]", False,
                       f"CURVE_SINGULAR: singular point near x = {float(alpha):.6g}")
            return
    report.add(f"curve_smooth[{comp.name}]", True, "")


def _check_disjoint(ci, cj, name_i, name_j, report):
    Gi = _vertical_restriction(ci.implicit)
    Gj = _vertical_restriction(cj.implicit)
    res = sylvester_resultant(Gi, Gj)
    if not res:
        report.add(f"disjoint[{name_i},{name_j}]", False,
                   "COMPONENTS_INTERSECT: common vertical structure")
        return
    rsf = zp_squarefree_part(res)
    for lo, hi in isolate_real_roots(rsf):
        alpha = AlgebraicNumber(rsf, lo, hi)
        fa = FieldPoly.from_zp_coeffs(alpha, Gi.zp_coeffs())
        fb = FieldPoly.from_zp_coeffs(alpha, Gj.zp_coeffs())
        if fa.degree() < 0 or fb.degree() < 0:
            continue
        if _real_common_root(fa, fb):
            report.add(f"disjoint[{name_i},{name_j}]", False,
                       f"COMPONENTS_INTERSECT: common point near x = {float(alpha):.6g}")
            return
    report.add(f"disjoint[{name_i},{name_j}]", True, "")


def _curve_point(comp, scene):
    """A rational x with real curve points, plus the curve's y-roots there.

    Uses the vertical tangency parameters: a compact smooth curve attains
    its x-extrema there, and any x strictly between the outermost two cuts
    the curve.
    """
    G = _vertical_restriction(comp.implicit)
    rsf, params = _multiple_root_params(G)
    xs = []
    for alpha in params:
        alpha.refine_below(Fraction(1, 1024))
        xs.append(alpha)
    for probe in _probe_values(xs, scene):
        coeffs = G.at_param(probe)
        if any(coeffs):
            roots = real_roots_with_multiplicities(coeffs)
            if roots:
                return probe, [r for r, _ in roots]
    return None, []


def _probe_values(xs, scene):
    x0, x1, _, _ = scene.bbox
    vals = [(a.lo + a.hi) / 2 for a in xs]
    vals.sort()
    probes = []
    if len(vals) >= 2:
        probes.append((vals[0] + vals[-1]) / 2)
        probes.extend((vals[i] + vals[i + 1]) / 2 for i in range(len(vals) - 1))
    probes.extend([Fraction(0), (x0 + x1) / 2])
    return probes


def _check_bbox(comp, scene, report):
    x0, x1, y0, y1 = scene.bbox
    edges = [
        ((x0, 0), (0, 1), y0, y1),   # left edge: x = x0, point (x0, t)
        ((x1, 0), (0, 1), y0, y1),   # right edge
        ((0, 1), (y0, 0), x0, x1),   # bottom edge: point (t, y0)
        ((0, 1), (y1, 0), x0, x1),   # top edge
    ]
    for px, py, lo, hi in edges:
        coeffs = bp_restrict_line(comp.implicit, px, py)
        p = zp_from_fractions(coeffs)
        if not p:
            report.add(f"bbox[{comp.name}]", False, "BBOX: curve contains a frame edge")
            return
        if zp_degree(p) >= 1:
            sf = zp_squarefree_part(p)
            for rlo, rhi in isolate_real_roots(sf):
                a = AlgebraicNumber(sf, rlo, rhi)
                if a.compare_rational(lo) >= 0 and a.compare_rational(hi) <= 0:
                    report.add(f"bbox[{comp.name}]", False,
                               "BBOX: curve meets the bounding box frame")
                    return
    px_, roots = _curve_point(comp, scene)
    if px_ is None:
        report.add(f"bbox[{comp.name}]", False, "BBOX: no real curve point found")
        return
    inside = x0 < px_ < x1 and all(
        r.compare_rational(y0) > 0 and r.compare_rational(y1) < 0 for r in roots)
    report.add(f"bbox[{comp.name}]", bool(inside),
               "" if inside else "BBOX: curve has points outside the bounding box")


def _hole_witness(hole, scene):
    """A rational point strictly inside the hole disk {sign*F > 0 side}."""
    px, roots = _curve_point(hole, scene)
    if px is None:
        return None
    # between consecutive curve points, look for the hole's excluded side
    for i in range(len(roots) - 1):
        a, b = roots[i], roots[i + 1]
        while a.hi >= b.lo:
            a.refine()
            b.refine()
        mid = (a.hi + b.lo) / 2
        if hole.side_value(px, mid) > 0:  # inside the hole: excluded from X
            return (px, mid)
    return None


def validate_scene(scene) -> ValidationReport:
    report = ValidationReport()
    for comp in scene.components:
        _check_smooth(comp, report)
        _check_bbox(comp, scene, report)
    comps = scene.components
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            _check_disjoint(comps[i], comps[j], comps[i].name, comps[j].name, report)

    hole_points = []
    for hole in scene.holes:
        w = _hole_witness(hole, scene)
        if w is None:
            report.add(f"hole_inside[{hole.name}]", False,
                       "HOLE_OUTSIDE: no interior witness for the hole")
            continue
        hole_points.append(w)
        x, y = w
        ok = scene.outer.side_value(x, y) < 0
        for other in scene.holes:
            if other is hole:
                continue
            if other.side_value(x, y) > 0:
                ok = False
                report.add(f"hole_inside[{hole.name}]", False,
                           f"HOLE_OUTSIDE: hole nested inside {other.name}")
                break
        else:
            report.add(f"hole_inside[{hole.name}]", ok,
                       "" if ok else "HOLE_OUTSIDE: hole not inside the outer curve")

    # field: nonvanishing on X
    fld = scene.field
    if fld.kind == "constant":
        dx, dy = fld.direction
        report.add("field_nonvanishing", not (dx == 0 and dy == 0),
                   "" if (dx, dy) != (0, 0) else "FIELD_VANISHES: zero direction")
    else:
        cx, cy = fld.center
        on_curve = any(_bp_eval_zero(comp, cx, cy) for comp in scene.components)
        bad = on_curve or scene.contains(cx, cy, strict=False)
        report.add("field_nonvanishing", not bad,
                   "" if not bad else "FIELD_VANISHES: radial center lies in X")

    witness = interior_point(scene)
    report.add("region_nonempty", witness is not None,
               "" if witness else "EMPTY: found no interior point of X")
    if witness:
        report.witnesses["interior_point"] = (str(witness[0]), str(witness[1]))
    return report


def interior_point(scene):
    """Some rational point strictly inside X, or None.

    Probes vertical lines derived from the outer curve's tangency spread and
    tests the midpoints between consecutive boundary crossings of ALL
    components on each line.
    """
    px, _ = _curve_point(scene.outer, scene)
    probes = []
    if px is not None:
        probes.append(px)
    G0 = _vertical_restriction(scene.outer.implicit)
    _, params = _multiple_root_params(G0)
    vals = sorted((a.lo + a.hi) / 2 for a in params)
    for i in range(len(vals) - 1):
        probes.append((vals[i] + vals[i + 1]) / 2)
        probes.append(vals[i] + (vals[i + 1] - vals[i]) / 3)
    for x in probes:
        roots = []
        for comp in scene.components:
            coeffs = _vertical_restriction(comp.implicit).at_param(x)
            if any(coeffs):
                roots.extend(r for r, _ in real_roots_with_multiplicities(coeffs))
        if len(roots) < 2:
            continue
        for _ in range(2000):
            ok = True
            for i in range(len(roots)):
                for j in range(i + 1, len(roots)):
                    a, b = roots[i], roots[j]
                    if max(a.lo, b.lo) <= min(a.hi, b.hi):
                        a.refine()
                        b.refine()
                        ok = False
            if ok:
                break
        roots.sort(key=lambda r: r.lo)
        for i in range(len(roots) - 1):
            mid = (roots[i].hi + roots[i + 1].lo) / 2
            if scene.contains(x, mid):
                return (x, mid)
    return None


def _bp_eval_zero(comp, x, y) -> bool:
    from .bivar import bp_eval
    return bp_eval(comp.implicit, Fraction(x), Fraction(y)) == 0