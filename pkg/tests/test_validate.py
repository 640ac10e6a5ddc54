import pytest

from trajspace.geometry import parse_scene
from trajspace.validate import interior_point, validate_scene

from conftest import GENERIC_FIXTURES, load_fixture

VERT = {"kind": "constant", "direction": [[0, 1], [1, 1]]}


def circle(cx, cy, r, sign):
    return {"curve": {"type": "circle", "center": [cx, cy], "radius": r},
            "inside_sign": sign}


@pytest.mark.parametrize("name", GENERIC_FIXTURES)
def test_fixtures_validate(name):
    report = validate_scene(load_fixture(name))
    assert report.ok, report.failures()


def test_overlapping_holes_rejected():
    sc = parse_scene({
        "field": VERT,
        "outer": circle([0, 1], [0, 1], [5, 1], 1),
        "holes": [circle([0, 1], [0, 1], [1, 1], -1),
                  circle([1, 1], [0, 1], [1, 1], -1)],
        "bbox": [[-6, 1], [6, 1], [-6, 1], [6, 1]]})
    report = validate_scene(sc)
    assert not report.ok
    assert any("COMPONENTS_INTERSECT" in d for _, d in report.failures())


def test_singular_curve_rejected():
    # nodal quartic (x^2 + y^2)^2 - x^2 + y^2: singular at the origin
    sc = parse_scene({
        "field": VERT,
        "outer": {"curve": {"type": "polynomial", "coeffs":
                  [[4, 0, 1, 1], [2, 2, 2, 1], [0, 4, 1, 1], [2, 0, -1, 1], [0, 2, 1, 1]]},
                  "inside_sign": 1},
        "holes": [], "bbox": [[-2, 1], [2, 1], [-2, 1], [2, 1]]})
    report = validate_scene(sc)
    assert any("CURVE_SINGULAR" in d for _, d in report.failures())


def test_radial_center_inside_region_rejected():
    sc = parse_scene({
        "field": {"kind": "radial", "center": [[2, 1], [0, 1]]},
        "outer": circle([0, 1], [0, 1], [4, 1], 1),
        "holes": [circle([0, 1], [0, 1], [1, 1], -1)],
        "bbox": [[-5, 1], [5, 1], [-5, 1], [5, 1]]})
    report = validate_scene(sc)
    assert any("FIELD_VANISHES" in d for _, d in report.failures())


def test_hole_outside_outer_rejected():
    sc = parse_scene({
        "field": VERT,
        "outer": circle([0, 1], [0, 1], [2, 1], 1),
        "holes": [circle([8, 1], [0, 1], [1, 2], -1)],
        "bbox": [[-10, 1], [10, 1], [-10, 1], [10, 1]]})
    report = validate_scene(sc)
    assert any("HOLE_OUTSIDE" in d for _, d in report.failures())


def test_bbox_violation_rejected():
    sc = parse_scene({
        "field": VERT,
        "outer": circle([0, 1], [0, 1], [3, 1], 1),
        "holes": [], "bbox": [[-2, 1], [2, 1], [-4, 1], [4, 1]]})
    report = validate_scene(sc)
    assert any("BBOX" in d for _, d in report.failures())


def test_interior_point_is_inside():
    sc = load_fixture("annulus3.json")
    pt = interior_point(sc)
    assert pt is not None
    assert sc.contains(*pt)

def test_disjoint_product_curve_is_smooth():
    # product of two disjoint circles: a smooth quartic whose x-derivative
    # vanishes identically on the symmetry line x = 0 (regression: this must
    # not read as a singular point, the multiple roots there are complex)
    from trajspace.bivar import bp_mul
    from trajspace.geometry import circle_poly
    F = bp_mul(circle_poly(-3, 0, 1), circle_poly(3, 0, 1))
    coeffs = [[i, j, v.numerator, v.denominator] for (i, j), v in sorted(F.items())]
    sc = parse_scene({
        "field": VERT,
        "outer": {"curve": {"type": "polynomial", "coeffs": coeffs}, "inside_sign": 1},
        "holes": [], "bbox": [[-5, 1], [5, 1], [-3, 1], [3, 1]]}, name="twoovals")
    report = validate_scene(sc)
    assert report.ok, report.failures()
