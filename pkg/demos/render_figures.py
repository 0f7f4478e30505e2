#!/usr/bin/env python3
"""Render every registered figure to demos/out/*.svg.

Output is deterministic: the same inputs always produce byte-identical
SVG, so the files can be diffed across runs and machines.
"""

from pathlib import Path

from boxlim import render_figure

RENDERS = {
    "hull": dict(x="3,1", y="1,-2", p=6),
    "ball-point": ("ball", dict(center="3,2", radius="1")),
    "ball-segment": ("ball", dict(center="3,2", radius="5/2")),
    "ball-square": ("ball", dict(center="3,2", radius="4")),
    "line": ("line", dict(x="3,1", y="1,-2", p=6)),
    "unit-square": dict(theta="13/4"),
    "pcos": dict(lo=-2, hi=10),
}


def main() -> None:
    out_dir = Path(__file__).parent / "out"
    out_dir.mkdir(exist_ok=True)
    for name, entry in RENDERS.items():
        figure, kwargs = entry if isinstance(entry, tuple) else (name, entry)
        svg = render_figure(figure, **kwargs)
        path = out_dir / f"{name}.svg"
        path.write_text(svg)
        print(f"  wrote {path} ({len(svg)} bytes)")


if __name__ == "__main__":
    main()
