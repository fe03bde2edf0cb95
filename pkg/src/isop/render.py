"""Plain SVG drawings of triangular-lattice point sets."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from .lattice import UsageError
from .trilattice import LONG_GENERATORS, SHORT_GENERATORS, TriPoint, embed_to_plane


@dataclass(frozen=True)
class RenderConfig:
    scale: float = 40.0
    radius: float = 5.0
    margin: float = 20.0
    draw_short: bool = True
    draw_long: bool = False
    labels: bool = False


def svg_document(points: Sequence[TriPoint], config: RenderConfig = RenderConfig()) -> str:
    if not points:
        raise UsageError("nothing to render")
    pts = [tuple(p) for p in points]
    xy = {p: embed_to_plane(p).as_floats() for p in pts}
    xs = [x for x, _ in xy.values()]
    ys = [y for _, y in xy.values()]
    s, m = config.scale, config.margin
    width = (max(xs) - min(xs)) * s + 2 * m
    height = (max(ys) - min(ys)) * s + 2 * m

    def pos(p):
        x, y = xy[p]
        # SVG's y axis points down.
        return (x - min(xs)) * s + m, (max(ys) - y) * s + m

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}">'
    ]
    present = set(pts)
    for gens, flag, style in (
        (SHORT_GENERATORS, config.draw_short, 'stroke="#444" stroke-width="1.5"'),
        (LONG_GENERATORS, config.draw_long, 'stroke="#9ab" stroke-width="1" stroke-dasharray="3,3"'),
    ):
        if not flag:
            continue
        for p in pts:
            for da, db in gens:
                q = (p[0] + da, p[1] + db)
                if q in present and p < q:
                    (x1, y1), (x2, y2) = pos(p), pos(q)
                    out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" {style}/>')
    for i, p in enumerate(pts, 1):
        x, y = pos(p)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{config.radius}" fill="#c33"/>')
        if config.labels:
            out.append(
                f'<text x="{x + config.radius + 1:.2f}" y="{y - config.radius - 1:.2f}" '
                f'font-size="10" font-family="sans-serif">{escape(str(i))}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(points: Sequence[TriPoint], path, config: RenderConfig = RenderConfig()) -> Path:
    path = Path(path)
    path.write_text(svg_document(points, config), encoding="utf-8")
    return path
