"""Deterministic serialization: text report, SVG, scene interchange JSON.

This is the only module that produces floating point.  2D types whose
realization lives in an ambient 3-space (A2, G2) are projected onto the
plane spanned by their coroots here; everything upstream is exact.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Sequence

from .conjugacy import BoxedFamily
from .rootdata import root_datum
from .scene import Scene
from .words import AffineElement, AffineWeylGroup, word_string

SCENE_VERSION = 1

_OUTLINE_HEX = {"red": "#d00000", "blue": "#0040c0"}


# ---------------------------------------------------------------------------
# text report

def element_input_string(group: AffineWeylGroup, x: AffineElement) -> str:
    """Semidirect form t_(c1,..,cn)*s_XX, accepted verbatim by the parser."""
    coeffs = ",".join(str(c) for c in x.lam)
    spherical = group.spherical_word(x.w)
    tail = "" if not spherical else "*s_" + "".join(str(i) for i in spherical)
    return f"t_({coeffs}){tail}"


def text_report(group: AffineWeylGroup, result: BoxedFamily) -> str:
    """Plain-text listing: coroot coordinates, then one line per element."""
    lines = [
        f"alpha_{i + 1}^vee = ({', '.join(str(c) for c in v)})"
        for i, v in enumerate(group.datum.coroot_euclid)
    ]
    lines.append("")
    for member in result.elements:
        word = word_string(group.lex_first_reduced_word(member))
        lines.append(f"{word} = {element_input_string(group, member)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# float projection

_SQRT2 = math.sqrt(2.0)
_SQRT6 = math.sqrt(6.0)


def project_point(tag: str, point: Sequence[Fraction]) -> tuple[float, ...]:
    """Drawing coordinates of an exact ambient point, rounded half-even."""
    datum = root_datum(tag)
    if datum.rank == 2 and datum.ambient_dim == 3:
        # orthonormal basis of the plane orthogonal to (1,1,1)
        a, b, c = point
        coords = (float(a - b) / _SQRT2, float(a + b - 2 * c) / _SQRT6)
    else:
        coords = tuple(float(x) for x in point)
    return tuple(round(x, 6) for x in coords)


# ---------------------------------------------------------------------------
# scene JSON

def export_scene_json(scene: Scene, report: str) -> dict:
    """Versioned interchange document; key order is fixed by construction."""
    doc: dict = {
        "version": SCENE_VERSION,
        "type": scene.tag,
        "dimension": scene.dimension,
        "bound": scene.bound,
    }
    alcoves = []
    for sa in scene.alcoves:
        alcoves.append(
            {
                "vertices": [list(project_point(scene.tag, v)) for v in sa.alcove.vertices],
                "fill": sa.fill,
                "striped": sa.striped,
                "label": sa.label,
                "label_size": sa.label_size,
                "outline": sa.outline,
            }
        )
    doc["alcoves"] = alcoves
    dots = []
    arrows = []
    if scene.decorations is not None:
        dots = [list(project_point(scene.tag, p)) for p in scene.decorations.dots]
        arrows = [
            {
                "tail": list(project_point(scene.tag, tail)),
                "head": list(project_point(scene.tag, head)),
                "color": color,
            }
            for tail, head, color in scene.decorations.arrows
        ]
    doc["decorations"] = {
        "dots": dots,
        "arrows": arrows,
        "origin": list(project_point(scene.tag, scene.origin)) if scene.origin is not None else None,
    }
    if scene.dimension == 3:
        doc["wireframe_edges"] = [
            [list(project_point(scene.tag, a)), list(project_point(scene.tag, b))]
            for a, b in (scene.wireframe_edges or ())
        ]
    doc["report"] = report
    return doc


def scene_json_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, indent=2) + "\n").encode()


# ---------------------------------------------------------------------------
# SVG

def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _points_attr(pts) -> str:
    # SVG's y axis points down; negate y instead of transforming (labels stay upright)
    return " ".join(f"{_fmt(x)},{_fmt(-y)}" for x, y in pts)


def export_svg(scene: Scene) -> str:
    """Standards-conformant SVG for a 2D scene, byte-stable for fixed input."""
    if scene.dimension != 2:
        raise ValueError("SVG export is available for 2-dimensional scenes only")
    tag = scene.tag
    polygons = [
        [project_point(tag, v) for v in sa.alcove.vertices] for sa in scene.alcoves
    ]
    xs = [p[0] for poly in polygons for p in poly]
    ys = [-p[1] for poly in polygons for p in poly]
    margin = 0.4
    min_x, max_x = min(xs) - margin, max(xs) + margin
    min_y, max_y = min(ys) - margin, max(ys) + margin
    out = []
    out.append(
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(min_x)} {_fmt(min_y)} {_fmt(max_x - min_x)} {_fmt(max_y - min_y)}" '
        'width="900" height="900">'
    )
    out.append("<defs>")
    out.append(
        '<pattern id="stripes45" patternUnits="userSpaceOnUse" width="0.12" height="0.12" '
        'patternTransform="rotate(45)">'
        '<line x1="0" y1="0" x2="0" y2="0.12" stroke="#000000" stroke-opacity="0.45" '
        'stroke-width="0.05"/></pattern>'
    )
    for name, color in _OUTLINE_HEX.items():
        out.append(
            f'<marker id="arrowhead-{name}" markerWidth="6" markerHeight="6" refX="5" refY="3" '
            f'orient="auto"><path d="M0,0 L6,3 L0,6 z" fill="{color}"/></marker>'
        )
    out.append("</defs>")

    out.append('<g id="alcoves">')
    for sa, poly in zip(scene.alcoves, polygons):
        fill = sa.fill if sa.fill is not None else "none"
        out.append(
            f'<polygon points="{_points_attr(poly)}" fill="{fill}" '
            'stroke="#555555" stroke-width="0.012"/>'
        )
    out.append("</g>")

    out.append('<g id="stripes">')
    for sa, poly in zip(scene.alcoves, polygons):
        if sa.striped:
            out.append(f'<polygon points="{_points_attr(poly)}" fill="url(#stripes45)"/>')
    out.append("</g>")

    out.append('<g id="outlines">')
    for sa, poly in zip(scene.alcoves, polygons):
        if sa.outline is not None:
            out.append(
                f'<polygon points="{_points_attr(poly)}" fill="none" '
                f'stroke="{_OUTLINE_HEX[sa.outline]}" stroke-width="0.05"/>'
            )
    out.append("</g>")

    out.append('<g id="decorations">')
    if scene.decorations is not None:
        for p in scene.decorations.dots:
            x, y = project_point(tag, p)
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(-y)}" r="0.05" fill="#000000"/>')
        for tail, head, color in scene.decorations.arrows:
            tx, ty = project_point(tag, tail)
            hx, hy = project_point(tag, head)
            out.append(
                f'<line x1="{_fmt(tx)}" y1="{_fmt(-ty)}" x2="{_fmt(hx)}" y2="{_fmt(-hy)}" '
                f'stroke="{_OUTLINE_HEX[color]}" stroke-width="0.04" '
                f'marker-end="url(#arrowhead-{color})"/>'
            )
    out.append("</g>")

    out.append('<g id="labels" font-family="sans-serif" text-anchor="middle">')
    for sa in scene.alcoves:
        if sa.label is not None:
            x, y = project_point(tag, sa.alcove.barycenter)
            out.append(
                f'<text x="{_fmt(x)}" y="{_fmt(-y)}" font-size="{sa.label_size}" '
                f'dominant-baseline="middle" fill="#1a1a1a">{sa.label}</text>'
            )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
