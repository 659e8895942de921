"""Exporters: text report, SVG, scene JSON (schema-validated, deterministic)."""

import json
from importlib import resources

import jsonschema
import pytest

from alcoves import group
from alcoves.conjugacy import conjugacy_class, coconjugation_set
from alcoves.export import (
    element_input_string,
    export_scene_json,
    export_svg,
    scene_json_bytes,
    text_report,
)
from alcoves.scene import build_scene


def _schema():
    return json.loads(
        resources.files("alcoves.data").joinpath("scene.schema.json").read_text()
    )


def test_schema_itself_is_valid():
    jsonschema.Draft7Validator.check_schema(_schema())


def test_text_report_identity_class():
    a2 = group("A2")
    res = conjugacy_class(a2, a2.identity, 2)
    report = text_report(a2, res)
    body = [l for l in report.splitlines() if l and not l.startswith("alpha")]
    assert body == ["e = t_(0,0)"]
    assert "alpha_1^vee = (1, -1, 0)" in report


def test_text_report_contains_figure_element():
    a2 = group("A2")
    res = conjugacy_class(a2, a2.parse("0120102"), 5)
    report = text_report(a2, res)
    assert "t_(-2,-3)*s_2" in report
    # the lex-first reduced word for that element (confirmed by brute force)
    assert "s_12102102102 = t_(-2,-3)*s_2" in report


def test_text_report_deterministic():
    a2 = group("A2")
    res = conjugacy_class(a2, a2.parse("0120102"), 4)
    assert text_report(a2, res) == text_report(a2, res)


def test_element_input_string_forms():
    a2 = group("A2")
    assert element_input_string(a2, a2.identity) == "t_(0,0)"
    assert element_input_string(a2, a2.translation((2, 0))) == "t_(2,0)"
    assert element_input_string(a2, a2.parse("0120102")) == "t_(2,2)*s_1"


def test_svg_counts_for_bare_tessellation():
    a2 = group("A2")
    scene = build_scene(a2, None, 1)
    svg = export_svg(scene)
    assert svg.count("<polygon") == 54
    assert svg.count("<circle") == 9
    assert svg.count("<line") == 2 + 1  # two coroot arrows + the pattern line
    assert svg.count('fill="url(#stripes45)"') == 0


def test_svg_identity_class_has_one_striped_polygon():
    a2 = group("A2")
    res = conjugacy_class(a2, a2.identity, 1)
    scene = build_scene(a2, res, 1, x=a2.identity)
    svg = export_svg(scene)
    assert svg.count('fill="url(#stripes45)"') == 1


def test_svg_deterministic_and_2d_only():
    a2 = group("A2")
    res = conjugacy_class(a2, a2.parse("1"), 1)
    scene = build_scene(a2, res, 1, x=a2.parse("1"))
    assert export_svg(scene) == export_svg(scene)
    a3 = group("A3")
    res3 = conjugacy_class(a3, a3.identity, 1)
    with pytest.raises(ValueError):
        export_svg(build_scene(a3, res3, 1))


@pytest.mark.parametrize(
    "tag,x_text,bound",
    [
        ("A2", "0120102", 2),
        ("C2", "t_(2,2)*s_2", 2),
        ("G2", "t_(1,0)*s_1", 2),      # rank-2 type realized in ambient 3-space
        ("A1xA1", "t_(1,1)*s_13", 2),  # square alcoves (4 vertices)
    ],
)
def test_scene_json_validates_2d(tag, x_text, bound):
    g = group(tag)
    x = g.parse(x_text)
    res = conjugacy_class(g, x, bound)
    doc = export_scene_json(build_scene(g, res, bound, x=x), text_report(g, res))
    jsonschema.validate(doc, _schema())
    assert "wireframe_edges" not in doc
    assert doc["dimension"] == 2


def test_scene_json_validates_3d_and_marks_identity():
    a3 = group("A3")
    res = conjugacy_class(a3, a3.identity, 1)
    report = text_report(a3, res)
    doc = export_scene_json(build_scene(a3, res, 1, x=a3.identity), report)
    jsonschema.validate(doc, _schema())
    assert doc["decorations"]["origin"] == [0.0, 0.0, 0.0]
    striped = [a for a in doc["alcoves"] if a["striped"]]
    assert len(striped) == 1
    assert striped[0]["label"] == "e"
    assert doc["wireframe_edges"]
    assert doc["report"] == report


def test_scene_json_roundtrip_and_determinism():
    a2 = group("A2")
    x = a2.parse("0120102")
    y = a2.parse("21021021020")
    res = coconjugation_set(a2, x, y, 2)
    report = text_report(a2, res)
    scene = build_scene(a2, res, 2, x=x, y=y)
    doc = export_scene_json(scene, report)
    blob = scene_json_bytes(doc)
    assert blob == scene_json_bytes(export_scene_json(scene, report))
    parsed = json.loads(blob)
    assert parsed == doc
    assert [a["outline"] for a in parsed["alcoves"] if a["outline"]] == ["red", "blue"] or [
        a["outline"] for a in parsed["alcoves"] if a["outline"]
    ] == ["blue", "red"]


def test_report_word_lines_parse_back():
    c2 = group("C2")
    res = conjugacy_class(c2, c2.parse("t_(2,2)*s_2"), 3)
    report = text_report(c2, res)
    for line in report.splitlines():
        if " = " not in line or line.startswith("alpha"):
            continue
        left, right = line.split(" = ")
        lhs = c2.identity if left == "e" else c2.parse(left[2:])
        assert c2.parse(right) == lhs
