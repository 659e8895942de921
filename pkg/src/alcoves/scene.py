"""Render-ready scenes: coloring by spherical direction, stripes, labels.

In dimension 2 every finite Weyl element keeps its own color, so each W0
alcove is shaded and labeled.  In dimension 3 that is not feasible (24 or
48 elements); directions are colored by the cycle type of their image in a
symmetric group instead, which is constant on W0-conjugacy classes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .conjugacy import BoxedFamily
from .geometry import Alcove, Decorations, alcove_of, lattice_decorations, tessellation
from .rootdata import FracVec
from .words import AffineElement, AffineWeylGroup, FiniteWeylElement, word_string

# Adjacent transpositions; in A3 the finite Weyl group is Sym(4) with
# s_i -> (i-1, i), and in B3/C3 it embeds into Sym(6) via s_1 -> t_1 t_5,
# s_2 -> t_2 t_4, s_3 -> t_3.
_SYM4_GENS = {1: (1, 0, 2, 3), 2: (0, 2, 1, 3), 3: (0, 1, 3, 2)}
_SYM6_GENS = {
    1: (1, 0, 2, 3, 5, 4),
    2: (0, 2, 1, 4, 3, 5),
    3: (0, 1, 3, 2, 4, 5),
}


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[q[i]] for i in range(len(p)))


def symmetric_group_image(group: AffineWeylGroup, w: FiniteWeylElement) -> tuple[int, ...]:
    """The permutation representing w (Sym(4) for A3, Sym(6) for B3/C3)."""
    if group.rank != 3:
        raise ValueError("cycle types are used for the rank-3 types only")
    gens = _SYM4_GENS if group.tag == "A3" else _SYM6_GENS
    degree = 4 if group.tag == "A3" else 6
    perm = tuple(range(degree))
    for letter in group.weyl_word(w):
        perm = _compose(perm, gens[letter])
    return perm


def cycle_type(group: AffineWeylGroup, w: FiniteWeylElement) -> tuple[int, ...]:
    """Cycle type of the symmetric-group image, as a descending partition."""
    perm = symmetric_group_image(group, w)
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        k, length = start, 0
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def partition_key(partition: tuple[int, ...]) -> str:
    return "+".join(str(p) for p in partition)


@lru_cache(maxsize=None)
def _palettes() -> dict:
    return json.loads(resources.files("alcoves.data").joinpath("palettes.json").read_text())


def direction_color(group: AffineWeylGroup, w: FiniteWeylElement) -> str:
    """Fill color of a spherical direction (per element in 2D, per cycle type in 3D)."""
    palettes = _palettes()
    if group.rank == 2:
        return palettes["per_element"][group.tag][w.id]
    return palettes["cycle_type"][group.tag][partition_key(cycle_type(group, w))]


@dataclass(frozen=True)
class SceneAlcove:
    alcove: Alcove
    fill: str | None
    striped: bool
    label: str | None
    label_size: float | None
    outline: str | None


@dataclass(frozen=True)
class Scene:
    tag: str
    dimension: int
    bound: int
    alcoves: tuple[SceneAlcove, ...]
    decorations: Decorations | None          # 2D lattice dots and coroot arrows
    origin: FracVec | None                   # 3D red origin dot
    wireframe_edges: tuple[tuple[FracVec, FracVec], ...] | None


def _diameter(alcove: Alcove) -> float:
    best = Fraction(0)
    vs = alcove.vertices
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            d = sum((a - b) ** 2 for a, b in zip(vs[i], vs[j]))
            if d > best:
                best = d
    return math.sqrt(float(best))


def label_font_size(alcove: Alcove) -> float:
    """Label size grows with the alcove diameter (clamped, never zero)."""
    return round(min(0.6, max(0.04, 0.22 * _diameter(alcove))), 4)


def _wireframe(alcoves) -> tuple[tuple[FracVec, FracVec], ...]:
    edges = set()
    for scene_alcove in alcoves:
        vs = scene_alcove.alcove.vertices
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                edges.add(tuple(sorted((vs[i], vs[j]))))
    return tuple(sorted(edges))


def build_scene(
    group: AffineWeylGroup,
    result: BoxedFamily | None,
    bound: int,
    x: AffineElement | None = None,
    y: AffineElement | None = None,
) -> Scene:
    """Assemble the drawable scene for a computation result.

    Background alcoves are unfilled.  Members are filled by spherical
    direction.  The identity alcove is always shaded and labeled e, striped
    when it is a member; in 2D the whole of W0 gets the same treatment.
    The input alcove x is outlined red, y (when present) blue, and both are
    labeled with their lex-first reduced words and shaded by direction.
    """
    datum = group.datum
    members = set(result.elements) if result is not None else set()
    dimension = datum.rank

    fills: dict[AffineElement, str] = {}
    stripes: set[AffineElement] = set()
    labels: dict[AffineElement, str] = {}
    outlines: dict[AffineElement, str] = {}

    for m in members:
        fills[m] = direction_color(group, m.w)

    always_shaded = (
        [AffineElement((0,) * group.rank, w) for w in group.finite_elements()]
        if dimension == 2
        else [group.identity]
    )
    for elt in always_shaded:
        fills[elt] = direction_color(group, elt.w)
        labels[elt] = word_string(group.lex_first_reduced_word(elt))
        if elt in members:
            stripes.add(elt)

    for user_elt, color in ((x, "red"), (y, "blue")):
        if user_elt is None:
            continue
        fills[user_elt] = direction_color(group, user_elt.w)
        labels[user_elt] = word_string(group.lex_first_reduced_word(user_elt))
        outlines[user_elt] = color

    base = tessellation(group, bound)
    covered = {a.element for a in base}
    extra = []
    for e in (x, y):
        if e is not None and e not in covered:
            extra.append(alcove_of(group, e))
            covered.add(e)
    scene_alcoves = []
    for alcove in base + extra:
        e = alcove.element
        label = labels.get(e)
        scene_alcoves.append(
            SceneAlcove(
                alcove=alcove,
                fill=fills.get(e),
                striped=e in stripes,
                label=label,
                label_size=label_font_size(alcove) if label is not None else None,
                outline=outlines.get(e),
            )
        )
    scene_alcoves = tuple(scene_alcoves)

    if dimension == 2:
        return Scene(
            tag=group.tag,
            dimension=2,
            bound=bound,
            alcoves=scene_alcoves,
            decorations=lattice_decorations(group, bound),
            origin=None,
            wireframe_edges=None,
        )
    return Scene(
        tag=group.tag,
        dimension=3,
        bound=bound,
        alcoves=scene_alcoves,
        decorations=None,
        origin=datum.embed((0,) * group.rank),
        wireframe_edges=_wireframe(scene_alcoves),
    )
