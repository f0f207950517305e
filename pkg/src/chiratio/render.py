"""SVG figures for the rectangle, extension, folding and construction diagrams.

Geometry is computed exactly (or with guaranteed enclosures) and converted
to decimals truncated at 12 places; pixel coordinates are then exact
decimal multiples of those, so output is byte-stable.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Any, Literal

from .approx import eval_decimal
from .constants import INV_PHI, chi, phi
from .exact import PHI, TowerElem
from .folding import APPEND, RECIPROCAL, SQUARE, FoldTrace
from .rectangles import extend_sequence, subdivide

PLACES = 12
SVG_NS = "http://www.w3.org/2000/svg"


@dataclass(frozen=True)
class Style:
    unit_px: int = 100
    stroke_px: float = 1.5
    grey_fill: str = "#cccccc"
    dash_pattern: str = "6 4"
    margin_px: int = 20
    font_px: int = 12

    def __post_init__(self):
        if self.unit_px < 10:
            raise ValueError("unit_px must be at least 10")
        if self.stroke_px <= 0:
            raise ValueError("stroke_px must be positive")


DEFAULT_STYLE = Style()


@dataclass(frozen=True)
class FigureSpec:
    kind: Literal["subdivision", "extend_sequence", "fold_trace", "construction"]
    params: dict[str, Any] = field(default_factory=dict)
    style: Style = DEFAULT_STYLE


def dec(v) -> Decimal:
    """Value truncated to 12 places, as a Decimal."""
    return Decimal(eval_decimal(v, PLACES).digits)


def fmt(d: Decimal) -> str:
    s = format(d.normalize(), "f")
    return "0" if s in ("-0", "") else s


class Canvas:
    """Maps unit coordinates (y up) onto an SVG element tree (y down)."""

    def __init__(self, width: Decimal, height: Decimal, style: Style, title: str):
        self.style = style
        self.w, self.h = width, height
        m, u = style.margin_px, style.unit_px
        total_w = width * u + 2 * m
        total_h = height * u + 2 * m
        self.root = ET.Element("svg", {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": fmt(total_w),
            "height": fmt(total_h),
            "viewBox": f"0 0 {fmt(total_w)} {fmt(total_h)}",
        })
        ET.SubElement(self.root, "title").text = title
        self.parent = self.root

    def px(self, x: Decimal) -> str:
        return fmt(self.style.margin_px + x * self.style.unit_px)

    def py(self, y: Decimal) -> str:
        return fmt(self.style.margin_px + (self.h - y) * self.style.unit_px)

    def length(self, v: Decimal) -> str:
        return fmt(v * self.style.unit_px)

    def group(self, gid: str) -> ET.Element:
        self.parent = ET.SubElement(self.root, "g", {"id": gid})
        return self.parent

    def rect(self, x0: Decimal, y0: Decimal, length: Decimal, height: Decimal, cls: str, *,
             fill: str = "none", dashed: bool = False) -> ET.Element:
        attrs = {
            "class": cls,
            "x": self.px(x0),
            "y": self.py(y0 + height),
            "width": self.length(length),
            "height": self.length(height),
            "fill": fill,
            "stroke": "black",
            "stroke-width": fmt(Decimal(str(self.style.stroke_px))),
        }
        if dashed:
            attrs["stroke-dasharray"] = self.style.dash_pattern
        return ET.SubElement(self.parent, "rect", attrs)

    def line(self, p, q, cls: str, *, dashed: bool = False) -> ET.Element:
        attrs = {
            "class": cls,
            "x1": self.px(p[0]), "y1": self.py(p[1]),
            "x2": self.px(q[0]), "y2": self.py(q[1]),
            "stroke": "black",
            "stroke-width": fmt(Decimal(str(self.style.stroke_px))),
        }
        if dashed:
            attrs["stroke-dasharray"] = self.style.dash_pattern
        return ET.SubElement(self.parent, "line", attrs)

    def point(self, p, pid: str, label: str | None = None) -> ET.Element:
        c = ET.SubElement(self.parent, "circle", {
            "class": "point", "id": pid,
            "cx": self.px(p[0]), "cy": self.py(p[1]), "r": "2.5", "fill": "black",
        })
        if label:
            self.text(p, label, "label", dx=4, dy=-4)
        return c

    def arc(self, start, end, radius: Decimal, cls: str) -> ET.Element:
        r = self.length(radius)
        d = f"M {self.px(start[0])} {self.py(start[1])} A {r} {r} 0 0 1 {self.px(end[0])} {self.py(end[1])}"
        return ET.SubElement(self.parent, "path", {
            "class": cls, "d": d, "fill": "none", "stroke": "black",
            "stroke-width": fmt(Decimal(str(self.style.stroke_px))),
            "stroke-dasharray": self.style.dash_pattern,
        })

    def text(self, p, content: str, cls: str, *, dx: int = 0, dy: int = 0) -> ET.Element:
        t = ET.SubElement(self.parent, "text", {
            "class": cls,
            "x": fmt(Decimal(self.px(p[0])) + dx),
            "y": fmt(Decimal(self.py(p[1])) + dy),
            "font-size": str(self.style.font_px),
            "font-family": "sans-serif",
        })
        t.text = content
        return t

    def tostring(self) -> str:
        ET.indent(self.root)
        body = ET.tostring(self.root, encoding="unicode")
        return '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"


def render_subdivision(x, style: Style = DEFAULT_STYLE) -> str:
    """Whole 1 x ``x`` outline, grey kept piece, dashed similar strip, diagonal and perpendicular."""
    sub = subdivide(x)
    X, inv = dec(sub.x), dec(sub.strip.length)
    zero, one = Decimal(0), Decimal(1)
    cv = Canvas(X, one, style, f"subdivision of a 1 x {eval_decimal(sub.x, 3).digits} rectangle")
    cv.group("pieces")
    cv.rect(inv, zero, X - inv, one, "kept", fill=style.grey_fill)
    cv.rect(zero, zero, inv, one, "strip", dashed=True)
    cv.rect(zero, zero, X, one, "whole")
    cv.group("construction")
    cv.line((zero, zero), (X, one), "diagonal")
    cv.line((zero, one), (inv, zero), "perpendicular")
    cv.point((dec(sub.foot[0]), dec(sub.foot[1])), "foot")
    cv.group("labels")
    cv.text((X / 2, one / 2), eval_decimal(sub.x, 3).digits + "…", "length", dx=-12)
    return cv.tostring()


def render_extend_sequence(count: int, style: Style = DEFAULT_STYLE) -> str:
    """Rectangles x_0 .. x_count, one row each from a common left edge, labelled with lengths.

    Each row shows the previous rectangle (grey) nested inside the extended one.
    """
    if count < 2:
        raise ValueError("count must be at least 2")
    xs = extend_sequence(count)
    ds = [dec(x) for x in xs]
    one, zero, gap = Decimal(1), Decimal(0), Decimal("0.25")
    height = len(ds) * (one + gap) - gap
    cv = Canvas(max(ds) + Decimal("0.6"), height, style, f"iterated extension, {count} steps")
    for k, (x, d) in enumerate(zip(xs, ds)):
        y0 = height - (k + 1) - k * gap
        cv.group(f"row-{k}")
        if k:
            # the previous rectangle, turned so its unit side lies along the length
            inner = dec(1 / xs[k - 1])
            cv.rect(d - inner, y0, inner, one, "previous", fill=style.grey_fill)
        cv.rect(zero, y0, d, one, f"x{k}", dashed=k > 0)
        cv.text((d, y0 + one / 2), eval_decimal(x, 3).digits, "annotation", dx=4)
    return cv.tostring()


def _panel(cv: Canvas, y0: Decimal, step, index: int) -> None:
    before, after = dec(step.before), dec(step.after)
    one, zero = Decimal(1), Decimal(0)
    cv.group(f"panel-{index}")
    cv.rect(zero, y0, after, one, "after", fill=cv.style.grey_fill)
    cv.rect(zero, y0, before, one, "before")
    if step.op == RECIPROCAL:
        inv = dec(1 / step.before)
        cv.line((zero, y0), (before, y0 + one), "crease diagonal")
        cv.line((zero, y0 + one), (inv, y0), "crease perpendicular")
    elif step.op == SQUARE:
        cv.line((before, y0), (before + one, y0 + one), "crease square", dashed=True)
    elif step.op == APPEND:
        cv.line((before, y0), (before, y0 + one), "crease join", dashed=True)
    cv.text((zero, y0 + one), f"{index}. {step.op}: {step.before} → {step.after}", "caption", dy=-3)
    cv.text((after, y0 + one / 2), str(step.after), "value", dx=4)


def render_fold_trace(trace: FoldTrace, style: Style = DEFAULT_STYLE) -> str:
    """One panel per fold, top to bottom, with the crease drawn on the 'before' strip."""
    if not len(trace):
        raise ValueError("cannot render an empty trace")
    steps = list(trace)
    gap = Decimal("0.4")
    widest = max(max(dec(s.before), dec(s.after)) for s in steps)
    height = len(steps) * (1 + gap) - gap
    cv = Canvas(widest + Decimal("0.6"), height, style, f"fold trace, {len(steps)} steps")
    for i, s in enumerate(steps):
        y0 = height - (i + 1) - i * gap
        _panel(cv, y0, s, i + 1)
    return cv.tostring()


def construction_points(target: str) -> dict[str, Any]:
    """Exact points of the straightedge-and-compass construction for ``target``.

    phi: unit square ABCD, M the midpoint of AB, arc about M through C meets
    the extended base at E with AE = phi.
    chi: continue from phi: BE = 1/phi is the side of the golden rectangle
    BEGC; N is the midpoint of BE, the arc about N through G meets the base
    at F with BF = chi.  The diagonal of the 1 x chi rectangle and the
    perpendicular through its upper-left vertex cut off the similar strip.
    """
    half = Fraction(1, 2)
    pts: dict[str, Any] = {
        "A": (0, 0), "B": (1, 0), "C": (1, 1), "D": (0, 1),
        "M": (half, 0),
    }
    pts["E"] = (half + TowerElem(0, half, 5), 0)
    radius_phi = TowerElem(0, half, 5)
    out: dict[str, Any] = {"points": pts, "arcs": [("M", "C", "E", radius_phi)]}
    if target == "phi":
        out["result"] = ("A", "E")
        out["value"] = phi()
        return out
    if target != "chi":
        raise ValueError(f"unknown construction target {target!r}")
    g = INV_PHI
    pts["G"] = (PHI, 1)
    pts["N"] = ((1 + PHI) / 2, 0)
    radius_chi = TowerElem(0, 1 / (2 * PHI), 1 + 4 * PHI * PHI)
    pts["F"] = ((1 + PHI) / 2 + radius_chi, 0)
    c = chi()
    pts["H"] = (1 + c, 1)
    pts["K"] = (1 + 1 / c, 0)
    out["arcs"].append(("N", "G", "F", radius_chi))
    out["golden"] = ("B", g)
    out["diagonal"] = ("B", "H")
    out["perpendicular"] = ("C", "K")
    out["result"] = ("B", "F")
    out["value"] = c
    return out


def render_construction(target: str, style: Style = DEFAULT_STYLE) -> str:
    data = construction_points(target)
    pts = {k: (dec(x), dec(y)) for k, (x, y) in data["points"].items()}
    right = max(p[0] for p in pts.values())
    one, zero = Decimal(1), Decimal(0)
    cv = Canvas(right + Decimal("0.4"), one + Decimal("0.3"), style, f"construction of {target}")
    cv.group("layer-square")
    cv.rect(zero, zero, one, one, "square")
    if "golden" in data:
        cv.group("layer-golden")
        b = pts[data["golden"][0]]
        cv.rect(b[0], zero, dec(data["golden"][1]), one, "golden", fill=style.grey_fill)
    cv.group("layer-arcs")
    for centre, start, end, radius in data["arcs"]:
        cv.arc(pts[start], pts[end], dec(radius), f"arc arc-{centre}")
        cv.line(pts[centre], pts[start], f"radius radius-{centre}", dashed=True)
    if "diagonal" in data:
        cv.group("layer-check")
        p, q = data["diagonal"]
        cv.rect(pts["B"][0], zero, pts["H"][0] - pts["B"][0], one, "chi-rectangle", dashed=True)
        cv.line(pts[p], pts[q], "diagonal")
        p, q = data["perpendicular"]
        cv.line(pts[p], pts[q], "perpendicular")
    cv.group("layer-result")
    a, b = data["result"]
    cv.line(pts[a], pts[b], "result")
    label = eval_decimal(data["value"], 4).digits + "…"
    mid = ((pts[a][0] + pts[b][0]) / 2, Decimal("-0.15"))
    cv.text(mid, label, "result-length", dx=-15, dy=0)
    cv.group("layer-points")
    for name, p in pts.items():
        cv.point(p, f"pt-{name}", name)
    return cv.tostring()


def render(spec: FigureSpec) -> str:
    p = spec.params
    if spec.kind == "subdivision":
        return render_subdivision(p["x"], spec.style)
    if spec.kind == "extend_sequence":
        return render_extend_sequence(p["count"], spec.style)
    if spec.kind == "fold_trace":
        return render_fold_trace(p["trace"], spec.style)
    if spec.kind == "construction":
        return render_construction(p["target"], spec.style)
    raise ValueError(f"unknown figure kind {spec.kind!r}")
