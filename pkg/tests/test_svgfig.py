"""Figure rendering: deterministic bytes, well-formed markup, regime shapes."""

import xml.etree.ElementTree as ET

import pytest

from boxlim import FIGURES, render_figure


def _root(svg: str) -> ET.Element:
    return ET.fromstring(svg)


def test_figure_registry_is_complete():
    assert set(FIGURES) == {"hull", "ball", "line", "unit-square", "pcos"}


def test_unknown_figure_raises():
    with pytest.raises(KeyError):
        render_figure("histogram")


def test_renders_are_byte_identical():
    kwargs = {
        "hull": {"x": "3,1", "y": "1,-2", "p": 4},
        "ball": {"center": "3,2", "radius": "5/2"},
        "line": {"x": "3,1", "y": "1,-2", "p": 4},
        "unit-square": {"theta": "5/2"},
        "pcos": {},
    }
    for name, kw in kwargs.items():
        assert render_figure(name, **kw) == render_figure(name, **kw), name


def test_svg_structure_and_viewport():
    svg = render_figure("unit-square")
    root = _root(svg)
    assert root.tag.endswith("svg")
    assert root.get("width") == "800"
    assert root.get("height") == "800"
    assert root.get("viewBox") == "0 0 800 800"


def test_all_figures_are_well_formed_xml():
    _root(render_figure("hull", x="3,1", y="1,-2", p=2))
    _root(render_figure("ball", center="3,2", radius="1"))
    _root(render_figure("line", x="3,1", y="1,-2", p=2))
    _root(render_figure("unit-square", theta="13/4"))
    _root(render_figure("pcos", lo=-2, hi=2))


def test_ball_regimes_render_distinct_shapes():
    ns = {"svg": "http://www.w3.org/2000/svg"}

    def shapes(radius):
        svg = render_figure("ball", center="3,2", radius=radius)
        root = _root(svg)
        return {
            # every figure carries a background rect and a center marker rect
            "rect": len(root.findall(".//svg:rect", ns)) - 2,
            "circle": len(root.findall(".//svg:circle", ns)),
            "thick_line": svg.count('stroke-width="3.0"'),
            "filled_area": svg.count('fill-opacity'),
        }

    point = shapes("1")
    segment = shapes("5/2")
    square = shapes("4")
    # small radius pins both coordinates: a single dot, nothing else
    assert point == {"rect": 0, "circle": 1, "thick_line": 0, "filled_area": 0}
    # intermediate radius frees one coordinate: one thick segment
    assert segment == {"rect": 0, "circle": 0, "thick_line": 1, "filled_area": 0}
    # large radius frees both: one translucent filled square
    assert square == {"rect": 1, "circle": 0, "thick_line": 0, "filled_area": 1}


def test_curves_are_densely_sampled():
    svg = render_figure("pcos")
    # one polyline with the documented number of curve samples
    start = svg.index("<polyline")
    end = svg.index("/>", start)
    points = svg[start:end].split('points="')[1].split('"')[0]
    assert len(points.split()) == 512
