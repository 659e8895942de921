"""Batch CLI.

Exit codes: 0 success, 2 validation error, 3 empty coconjugation set (the
requested artifacts are still written).
"""

from __future__ import annotations

import os
import sys

import click

from . import conjugacy
from .catalog import SUGGESTED_BOUND
from .export import export_scene_json, export_svg, scene_json_bytes, text_report
from .rootdata import TYPE_TAGS
from .scene import build_scene
from .words import ParseError


@click.group()
def main() -> None:
    """Conjugacy classes and coconjugation sets in affine Coxeter groups."""


@main.command()
@click.option("--type", "tag", required=True, type=click.Choice(TYPE_TAGS), help="Coxeter type tag.")
@click.option(
    "--mode",
    required=True,
    type=click.Choice([conjugacy.CONJUGACY_CLASS, conjugacy.COCONJUGATION, conjugacy.CENTRALIZER]),
)
@click.option("-x", "x_text", required=True, help="Element (digit word or t_(..)*s_.. form).")
@click.option("-y", "y_text", default=None, help="Second element, coconjugation mode only.")
@click.option("--bound", type=int, default=None, help="Bounding box size, 1..15.")
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False), default=None)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=None)
def compute(tag, mode, x_text, y_text, bound, svg_path, json_path, report_path) -> None:
    """Compute one conjugacy class, coconjugation set or centralizer."""
    group = _group(tag)
    if bound is None:
        bound = SUGGESTED_BOUND[group.rank]
    if not 1 <= bound <= conjugacy.MAX_BOUND:
        raise click.UsageError(f"--bound must be in 1..{conjugacy.MAX_BOUND}")
    if mode == conjugacy.COCONJUGATION and y_text is None:
        raise click.UsageError("coconjugation mode needs -y")
    if mode != conjugacy.COCONJUGATION and y_text is not None:
        raise click.UsageError(f"mode {mode} takes a single element")
    if svg_path is not None and group.rank != 2:
        raise click.UsageError("--svg is available for the 2-dimensional types only")

    try:
        x = group.parse(x_text)
        y = group.parse(y_text) if y_text is not None else None
    except ParseError as exc:
        raise click.UsageError(str(exc))

    if mode == conjugacy.CONJUGACY_CLASS:
        result = conjugacy.conjugacy_class(group, x, bound)
    elif mode == conjugacy.CENTRALIZER:
        result = conjugacy.centralizer(group, x, bound)
    else:
        result = conjugacy.coconjugation_set(group, x, y, bound)

    report = text_report(group, result)
    if report_path is not None:
        with open(report_path, "w") as fh:
            fh.write(report)
    if svg_path is not None or json_path is not None:
        scene = build_scene(group, result, bound, x=x, y=y)
        if svg_path is not None:
            with open(svg_path, "w") as fh:
                fh.write(export_svg(scene))
        if json_path is not None:
            with open(json_path, "wb") as fh:
                fh.write(scene_json_bytes(export_scene_json(scene, report)))

    click.echo(f"{len(result.elements)} element(s) inside the box")
    if mode == conjugacy.COCONJUGATION and not result.family.parts:
        click.echo("coconjugation set is empty: translation-compatible part empty", err=True)
        sys.exit(3)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=None, help="Defaults to $COXETER_PORT or 8000.")
@click.option(
    "--static",
    "static_dir",
    type=click.Path(file_okay=False, exists=True),
    default=None,
    help="Optionally serve a built explorer UI from this directory at /.",
)
def serve(host: str, port: int | None, static_dir: str | None) -> None:
    """Run the compute service."""
    import uvicorn

    from .service import app

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    if port is None:
        port = int(os.environ.get("COXETER_PORT", "8000"))
    uvicorn.run(app, host=host, port=port)


def _group(tag: str):
    from . import group

    return group(tag)


if __name__ == "__main__":
    main()
