import re

from trajspace import render, sweep

from conftest import load_fixture


def test_disk_svg_structure():
    scene = load_fixture("disk.json")
    graph = sweep.build_trajectory_space(scene)
    svg = render.scene_svg(scene, graph)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert len(re.findall(r"<circle", svg)) == 2           # two tangency markers
    assert len(re.findall(r"stroke-dasharray", svg)) == 2  # two event trajectories
    assert "v0 (2)" in svg and "v1 (2)" in svg


def test_annulus3_svg_has_all_vertices():
    scene = load_fixture("annulus3.json")
    graph = sweep.build_trajectory_space(scene)
    svg = render.scene_svg(scene, graph)
    for k in range(6):
        assert f"v{k} (121)" in svg
    # slabs: one polygon or band per edge
    assert len(re.findall(r"<polygon", svg)) + len(re.findall(r'stroke-width="6.0"', svg)) == 9


def test_scene_without_graph_renders_curves_only():
    scene = load_fixture("disk1.json")
    svg = render.scene_svg(scene)
    assert "<line" in svg
    assert "stroke-dasharray" not in svg
