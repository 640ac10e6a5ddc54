#!/usr/bin/env python3
"""Render SVG scenes and trajectory-space DOT files for all fixtures."""

import pathlib
import sys

from trajspace import geometry, render, sweep
from trajspace.omega import build_poset, export_hasse_dot

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
OUT = ROOT / "figures"


def main():
    OUT.mkdir(exist_ok=True)
    for path in sorted(FIXTURES.glob("*.json")):
        scene = geometry.load_scene(str(path))
        graph = sweep.build_trajectory_space(scene)
        stem = path.stem
        (OUT / f"{stem}.svg").write_text(render.scene_svg(scene, graph))
        (OUT / f"{stem}.dot").write_text(graph.to_dot())
        print(f"{stem}: V={graph.vertex_count} E={graph.edge_count} -> figures/{stem}.svg,.dot")
    for n in (1, 2, 3):
        (OUT / f"poset_n{n}.dot").write_text(export_hasse_dot(build_poset(n)))
        print(f"pattern poset n={n} -> figures/poset_n{n}.dot")
    return 0


if __name__ == "__main__":
    sys.exit(main())