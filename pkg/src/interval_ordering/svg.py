"""SVG 1.1 picture of an ordering: one bar per interval, earliest on top.

Exposed pieces are dashed, pieces already covered on arrival are solid.
Pixel positions are computed exactly and only rounded when written; each
segment also carries its exact endpoints in ``data-start``/``data-end``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import DisjointUnion, fmt_rat, subtract
from .instance import Instance, cost_of_ordering


@dataclass(frozen=True)
class Layout:
    width: int = 800
    left: int = 70
    right: int = 30
    top: int = 30
    row: int = 26
    bottom: int = 40


def _px(x: Fraction) -> str:
    return f"{float(round(x * 1000) / 1000):.3f}".rstrip("0").rstrip(".")


class XScale:
    """Linear map from instance coordinates to pixels."""

    def __init__(self, lo: Fraction, hi: Fraction, layout: Layout):
        self.lo = lo
        self.origin = Fraction(layout.left)
        span = hi - lo if hi > lo else Fraction(1)
        self.factor = Fraction(layout.width - layout.left - layout.right) / span

    def __call__(self, x: Fraction) -> Fraction:
        return self.origin + (x - self.lo) * self.factor


def render_svg(inst: Instance, ordering: Sequence[int], layout: Layout = Layout(), title: str | None = None) -> str:
    _, exposed = cost_of_ordering(inst, ordering)
    n = inst.n
    if n:
        lo = min(iv.start for iv in inst.intervals)
        hi = max(iv.end for iv in inst.intervals)
    else:
        lo, hi = Fraction(0), Fraction(1)
    scale = XScale(lo, hi, layout)
    height = layout.top + layout.row * max(n, 1) + layout.bottom
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
        f'<svg version="1.1" xmlns="http://www.w3.org/2000/svg" width="{layout.width}" height="{height}" '
        f'viewBox="0 0 {layout.width} {height}" data-x-origin="{fmt_rat(scale.origin)}" '
        f'data-x-lo="{fmt_rat(lo)}" data-x-factor="{fmt_rat(scale.factor)}">',
        "<style>line.covered{stroke:#222;stroke-width:3}"
        "line.exposed{stroke:#c0392b;stroke-width:3;stroke-dasharray:6,4}"
        "text{font-family:sans-serif;font-size:12px}</style>",
    ]
    if title:
        out.append(f'<text x="{layout.left}" y="16">{_escape(title)}</text>')
    for pos, (j, e) in enumerate(zip(ordering, exposed)):
        y = layout.top + layout.row * pos + layout.row // 2
        iv = inst.intervals[j]
        out.append(f'<g class="bar" data-interval="{j + 1}" data-position="{pos + 1}">')
        out.append(f'<text x="8" y="{y + 4}">I{j + 1}</text>')
        solid = subtract(DisjointUnion._trusted((iv,)), e)
        pieces = [(c, "exposed") for c in e] + [(c, "covered") for c in solid]
        for c, kind in sorted(pieces, key=lambda pc: pc[0].start):
            out.append(
                f'<line class="{kind}" x1="{_px(scale(c.start))}" y1="{y}" x2="{_px(scale(c.end))}" y2="{y}" '
                f'data-start="{fmt_rat(c.start)}" data-end="{fmt_rat(c.end)}"/>'
            )
        out.append("</g>")
    axis_y = layout.top + layout.row * max(n, 1) + 8
    out.append(
        f'<line class="axis" x1="{_px(scale(lo))}" y1="{axis_y}" x2="{_px(scale(hi))}" y2="{axis_y}" '
        'stroke="#888" stroke-width="1"/>'
    )
    ticks = sorted({p for iv in inst.intervals for p in (iv.start, iv.end)})
    if len(ticks) <= 40:
        for p in ticks:
            x = _px(scale(p))
            out.append(f'<line x1="{x}" y1="{axis_y - 3}" x2="{x}" y2="{axis_y + 3}" stroke="#888"/>')
            out.append(f'<text x="{x}" y="{axis_y + 16}" text-anchor="middle">{fmt_rat(p)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
