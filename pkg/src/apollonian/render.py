"""Deterministic SVG rendering of packings.

The output is assembled from fixed-format strings (coordinates always
printed as %.3f pixels), so rendering the same packing with the same
options yields identical bytes on every run.  World coordinates are
mapped with a uniform scale and the y axis pointing up.

Circles are drawn in curvature order (most negative first), so large
enclosing boundaries never cover smaller disks.  A positive-curvature
disk is filled, a negative-curvature one is drawn as an outline, and a
zero-curvature half-plane contributes its boundary line clipped to the
viewport.  Circles smaller than min_px pixels are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .field import FieldElement, decimal_str
from .disks import DiskSymbol, approx_geometry
from .packing import Packing

__all__ = ["EmptyPacking", "RenderOptions", "render_svg"]


class EmptyPacking(ValueError):
    """Nothing to draw: no disk meets the viewport and size thresholds."""


@dataclass(frozen=True)
class RenderOptions:
    viewport: Optional[Tuple[float, float, float, float]] = None
    width_px: int = 800
    height_px: int = 800
    label_mode: str = "none"  # none | curvature | symbol
    decimal_digits: int = 4
    min_px: float = 0.25
    stroke: str = "#1a1a2e"
    fill: str = "#9ecbff"
    background: str = "#ffffff"
    stroke_width: float = 1.0


def _auto_viewport(geoms: List[Tuple]) -> Tuple[float, float, float, float]:
    xs: List[float] = []
    ys: List[float] = []
    for g in geoms:
        if g[0] != "disk":
            continue
        _, cx, cy, r = g
        xs.extend((cx - r, cx + r))
        ys.extend((cy - r, cy + r))
    if not xs:
        return (-1.0, -1.0, 1.0, 1.0)
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad = 0.05 * max(x1 - x0, y1 - y0, 1e-9)
    return (x0 - pad, y0 - pad, x1 + pad, y1 + pad)


def _clip_line(
    nx: float, ny: float, s: float, box: Tuple[float, float, float, float]
) -> Optional[Tuple[float, float, float, float]]:
    """Segment of the line {p : <p, n> = s} inside the box, if any."""
    x0, y0, x1, y1 = box
    pts: List[Tuple[float, float]] = []
    if abs(ny) > 1e-15:
        for xe in (x0, x1):
            y = (s - nx * xe) / ny
            if y0 - 1e-9 <= y <= y1 + 1e-9:
                pts.append((xe, y))
    if abs(nx) > 1e-15:
        for ye in (y0, y1):
            x = (s - ny * ye) / nx
            if x0 - 1e-9 <= x <= x1 + 1e-9:
                pts.append((x, ye))
    unique: List[Tuple[float, float]] = []
    for p in sorted(pts):
        if not unique or abs(p[0] - unique[-1][0]) > 1e-9 or abs(p[1] - unique[-1][1]) > 1e-9:
            unique.append(p)
    if len(unique) < 2:
        return None
    (ax, ay), (bx, by) = unique[0], unique[-1]
    return (ax, ay, bx, by)


def _curvature_label(beta, digits: int) -> str:
    if isinstance(beta, FieldElement):
        if beta.is_rational():
            q = beta.as_fraction()
            if q.denominator == 1:
                return str(q.numerator)
        return decimal_str(beta, digits)
    if beta == int(beta):
        return str(int(beta))
    return f"%.{digits}f" % beta


def _symbol_label(d: DiskSymbol, digits: int) -> str:
    parts = []
    for v in d.components():
        if isinstance(v, FieldElement):
            parts.append(decimal_str(v, digits))
        else:
            parts.append(f"%.{digits}f" % v)
    return "(" + ", ".join(parts) + ")"


def render_svg(packing: Packing, options: RenderOptions = RenderOptions()) -> bytes:
    if not packing.disks:
        raise EmptyPacking("packing has no disks")
    if options.label_mode not in ("none", "curvature", "symbol"):
        raise ValueError(f"unknown label_mode {options.label_mode!r}")
    geoms = [approx_geometry(d) for d in packing.disks]
    box = options.viewport or packing.viewport or _auto_viewport(geoms)
    x0, y0, x1, y1 = box
    if not (x1 > x0 and y1 > y0):
        raise ValueError(f"degenerate viewport {box}")
    width, height = options.width_px, options.height_px
    scale = min(width / (x1 - x0), height / (y1 - y0))
    mid_x, mid_y = (x0 + x1) / 2, (y0 + y1) / 2

    def to_px(wx: float, wy: float) -> Tuple[float, float]:
        return (width / 2 + (wx - mid_x) * scale, height / 2 - (wy - mid_y) * scale)

    # Most negative curvature first, ties broken by disk index, so equal
    # inputs are always emitted in the same order.
    def sort_key(i: int):
        beta = packing.disks[i].beta
        return (float(beta) if isinstance(beta, FieldElement) else beta, i)

    body: List[str] = []
    drawn = 0
    sw = options.stroke_width
    for i in sorted(range(len(packing.disks)), key=sort_key):
        kind = geoms[i][0]
        beta = packing.disks[i].beta
        if kind == "line":
            _, nx, ny, s = geoms[i]
            seg = _clip_line(nx, ny, s, box)
            if seg is None:
                continue
            ax, ay = to_px(seg[0], seg[1])
            bx, by = to_px(seg[2], seg[3])
            body.append(
                '<line x1="%.3f" y1="%.3f" x2="%.3f" y2="%.3f" '
                'stroke="%s" stroke-width="%.3f"/>' % (ax, ay, bx, by, options.stroke, sw)
            )
            drawn += 1
            continue
        _, cx, cy, r = geoms[i]
        r_px = abs(r) * scale
        if r_px < options.min_px:
            continue
        if cx + abs(r) < x0 or cx - abs(r) > x1 or cy + abs(r) < y0 or cy - abs(r) > y1:
            continue
        px, py = to_px(cx, cy)
        negative = (beta.sign() < 0) if isinstance(beta, FieldElement) else beta < 0
        fill = "none" if negative else options.fill
        body.append(
            '<circle cx="%.3f" cy="%.3f" r="%.3f" fill="%s" stroke="%s" '
            'stroke-width="%.3f"/>' % (px, py, r_px, fill, options.stroke, sw)
        )
        drawn += 1
        if options.label_mode != "none" and r_px >= 8.0 and not negative:
            if options.label_mode == "curvature":
                text = _curvature_label(beta, options.decimal_digits)
            else:
                text = _symbol_label(packing.disks[i], options.decimal_digits)
            font = max(r_px * 1.2 / max(len(text), 1), 4.0)
            body.append(
                '<text x="%.3f" y="%.3f" font-size="%.3f" font-family="monospace" '
                'text-anchor="middle" dominant-baseline="central" fill="%s">%s</text>'
                % (px, py, font, options.stroke, _escape(text))
            )
    if drawn == 0:
        raise EmptyPacking("no disk intersects the viewport at a drawable size")
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (width, height, width, height),
        '<rect x="0" y="0" width="%d" height="%d" fill="%s"/>'
        % (width, height, options.background),
    ]
    return ("\n".join(head + body + ["</svg>"]) + "\n").encode("utf-8")


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
